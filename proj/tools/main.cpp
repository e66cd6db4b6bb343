#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto outcome = shiftflip::cli::run_cli(args);
    std::cout << outcome.rendered;
    if (!outcome.report.error.empty()) std::cerr << "shiftflip: " << outcome.report.error << "\n";
    return outcome.exit_code;
}
