#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include "shiftflip/constructions.hpp"
#include "shiftflip/equivalence.hpp"
#include "shiftflip/error.hpp"
#include "shiftflip/markov_shift.hpp"
#include "shiftflip/paper_examples.hpp"
#include "shiftflip/zeta.hpp"

namespace shiftflip::cli {

namespace {

class Sha256 {
public:
    Sha256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) { EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr); }

    void update(std::string_view bytes) { EVP_DigestUpdate(ctx_.get(), bytes.data(), bytes.size()); }

    std::string hex() {
        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned int length = 0;
        EVP_DigestFinal_ex(ctx_.get(), digest, &length);
        static constexpr char kHex[] = "0123456789abcdef";
        std::string out;
        for (unsigned int i = 0; i < length; ++i) {
            out += kHex[digest[i] >> 4];
            out += kHex[digest[i] & 0xf];
        }
        return out;
    }

private:
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

struct GlobalOptions {
    std::string format = "json";
    std::size_t order = kDefaultSeriesOrder;
    std::uint64_t seed = 0;
    bool timing = false;
};

// Per-run state shared by the subcommands.
class Context {
public:
    explicit Context(RunReport& report) : report_(report) {}

    Json load(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw InputError("cannot open '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        const std::string text = buffer.str();
        digest_.update(text);
        return parse_json(text, path);
    }

    void hash_text(std::string_view text) { digest_.update(text); }

    void pass(std::string check, std::string summary = "pass") {
        report_.verdicts.push_back({std::move(check), true, std::move(summary), "", ""});
    }

    void fail(std::string check, std::string summary, std::string locator, std::string detail) {
        report_.verdicts.push_back({std::move(check), false, std::move(summary), std::move(locator), std::move(detail)});
    }

    Json& outputs() { return report_.outputs; }
    RunReport& report() { return report_; }
    std::string finish_digest() { return "sha256:" + digest_.hex(); }

private:
    RunReport& report_;
    Sha256 digest_;
};

FlipPair load_pair(Context& ctx, const std::string& path) { return pair_from_json(ctx.load(path)); }

// A matrix document, a flip pair (its A), or a bare rows array.
IntMatrix load_matrix(Context& ctx, const std::string& path) {
    const Json j = ctx.load(path);
    if (j.is_array()) return IntMatrix::from_rows(numbered_labels(j.size()), numbered_labels(j.empty() ? 0 : j[0].size()),
                                                  rows_from_json(j));
    if (j.is_object() && j.contains("J")) return pair_from_json(j).A();
    return matrix_from_json(j);
}

std::vector<std::vector<Integer>> matrix_rows(const IntMatrix& m) {
    std::vector<std::vector<Integer>> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return rows;
}

// A certificate document, a matrix document or a rows array; S only from certificates.
CertificateDoc load_certificate(Context& ctx, const std::string& path) {
    const Json j = ctx.load(path);
    if (j.is_object() && j.contains("R")) return certificate_from_json(j);
    CertificateDoc doc;
    doc.R = j.is_array() ? rows_from_json(j) : matrix_rows(matrix_from_json(j));
    return doc;
}

std::vector<std::vector<Integer>> load_rows(Context& ctx, const std::string& path) {
    const Json j = ctx.load(path);
    return j.is_array() ? rows_from_json(j) : matrix_rows(matrix_from_json(j));
}

void check_prop22(Context& ctx, const HalfElemCert& cert, std::size_t period, const std::string& prefix) {
    const Prop22Report r = verify_prop22(cert, period);
    const std::string check = prefix + "gamma o phi_J = sigma o phi_K o gamma (period <= " + std::to_string(period) + ")";
    if (r.passed()) {
        ctx.pass(check, std::to_string(r.points_checked) + " points");
    } else {
        const auto& c = *r.counterexample;
        ctx.fail(check, "counterexample", "point " + cert.source.format_word(c.point.symbols),
                 "lhs " + cert.target.format_word(c.lhs.symbols) + ", rhs " + cert.target.format_word(c.rhs.symbols));
    }
}

Json sizes_json(const std::vector<std::size_t>& v) {
    Json j = Json::array();
    for (std::size_t x : v) j.push_back(x);
    return j;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

using Action = std::function<void(Context&)>;

}  // namespace

std::string render_json(const RunReport& report) {
    Json j = Json::object();
    j["command"] = report.command;
    j["inputs_digest"] = report.inputs_digest;
    Json verdicts = Json::array();
    for (const Verdict& v : report.verdicts) {
        Json e = Json::object();
        e["check"] = v.check;
        e["status"] = v.passed ? "pass" : "fail";
        e["summary"] = v.check + ": " + v.summary;
        if (!v.passed) {
            e["locator"] = v.locator;
            e["detail"] = v.detail;
        }
        verdicts.push_back(std::move(e));
    }
    j["verdicts"] = std::move(verdicts);
    if (!report.error.empty()) j["error"] = report.error;
    if (report.table) {
        Json rows = Json::array();
        for (const auto& row : report.table->rows) {
            Json r = Json::object();
            for (std::size_t c = 0; c < row.size(); ++c) r[report.table->header[c]] = row[c];
            rows.push_back(std::move(r));
        }
        j["table"] = std::move(rows);
    }
    j["outputs"] = report.outputs;
    if (report.timing_ms) j["timing_ms"] = *report.timing_ms;
    return j.dump(2) + "\n";
}

std::string render_plain(const RunReport& report) {
    std::ostringstream out;
    out << "command: " << report.command << "\n";
    out << "inputs: " << report.inputs_digest << "\n";
    if (!report.error.empty()) out << "error: " << report.error << "\n";
    for (const Verdict& v : report.verdicts) {
        out << v.check << ": " << v.summary;
        if (!v.passed) out << " [" << v.locator << "] " << v.detail;
        out << "\n";
    }
    if (report.table) {
        out << join(report.table->header, "  ") << "\n";
        for (const auto& row : report.table->rows) out << join(row, "  ") << "\n";
    }
    for (const auto& [key, value] : report.outputs.items()) {
        if (value.is_string()) {
            out << key << ": " << value.get<std::string>() << "\n";
        } else if (value.is_object() && value.contains("coeffs")) {
            std::vector<std::string> coeffs;
            for (const auto& c : value["coeffs"]) coeffs.push_back(c.get<std::string>());
            out << key << ": [" << join(coeffs, ", ") << "]\n";
        } else {
            out << key << ": " << value.dump() << "\n";
        }
    }
    if (report.timing_ms) out << "timing_ms: " << *report.timing_ms << "\n";
    return out.str();
}

std::string render_csv(const RunReport& report) {
    std::ostringstream out;
    const auto line = [&](const std::vector<std::string>& fields) {
        std::vector<std::string> quoted;
        for (const auto& f : fields) quoted.push_back(csv_field(f));
        out << join(quoted, ",") << "\n";
    };
    if (report.table) {
        line(report.table->header);
        for (const auto& row : report.table->rows) line(row);
        return out.str();
    }
    line({"check", "status", "summary", "locator", "detail"});
    for (const Verdict& v : report.verdicts) line({v.check, v.passed ? "pass" : "fail", v.summary, v.locator, v.detail});
    if (!report.error.empty()) line({"error", "fail", "", "", report.error});
    return out.str();
}

namespace {

// ---------------------------------------------------------------------------
// Subcommands. Each registers its options and returns the action to run.

Action add_validate(CLI::App& app) {
    auto* sub = app.add_subcommand("validate", "Check that a document is a flip pair");
    auto path = std::make_shared<std::string>();
    sub->add_option("pair", *path, "FlipPair JSON")->required();
    return [path](Context& ctx) {
        const Json j = ctx.load(*path);
        try {
            const FlipPair p = pair_from_json(j);
            ctx.pass("flip pair", "valid");
            ctx.outputs()["name"] = p.name();
            ctx.outputs()["alphabet_size"] = p.size();
            ctx.outputs()["essential"] = is_essential(p.A()) ? "yes" : "no";
        } catch (const CheckFailure& e) {
            ctx.fail("flip pair", "invalid", e.identity(), e.what());
        }
    };
}

Action add_count(CLI::App& app) {
    auto* sub = app.add_subcommand("count", "Brute-force p_{m,n} counts by periodic point enumeration");
    struct Opts {
        std::string pair;
        std::vector<std::size_t> m;
        std::vector<long> n;
        std::size_t m_max = 6;
        std::size_t max_period = kDefaultMaxPeriod;
        bool formula = false;
    };
    auto o = std::make_shared<Opts>();
    sub->add_option("--pair", o->pair, "FlipPair JSON")->required();
    sub->add_option("--m", o->m, "Periods m (default 1..m-max)");
    sub->add_option("--n", o->n, "Shift exponents n (default 0 1)");
    sub->add_option("--m-max", o->m_max, "Largest period when --m is omitted");
    sub->add_option("--max-period", o->max_period, "Enumeration cap");
    sub->add_flag("--formula", o->formula, "Also compare the closed-form triples for m even/odd");
    return [o](Context& ctx) {
        const FlipPair p = load_pair(ctx, o->pair);
        std::vector<std::size_t> ms = o->m;
        if (ms.empty())
            for (std::size_t m = 1; m <= o->m_max; ++m) ms.push_back(m);
        const std::vector<long> ns = o->n.empty() ? std::vector<long>{0, 1} : o->n;
        EnumerationLimits limits;
        limits.max_period = o->max_period;
        Table table{{"m", "n", "count"}, {}};
        for (std::size_t m : ms) {
            for (long n : ns) {
                table.rows.push_back({std::to_string(m), std::to_string(n), std::to_string(count_pmn_bruteforce(p, m, n, limits))});
            }
        }
        ctx.report().table = std::move(table);
        if (o->formula) {
            for (std::size_t m = 1; 2 * m <= *std::max_element(ms.begin(), ms.end()); ++m) {
                const FlipCountTriple formula = p_flip_counts(p, m);
                const FlipCountTriple brute = p_flip_counts_bruteforce(p, m, limits);
                const std::string check = "closed-form triple m=" + std::to_string(m);
                if (formula == brute) {
                    ctx.pass(check);
                } else {
                    ctx.fail(check, "mismatch", "m=" + std::to_string(m),
                             "formula (" + formula.p_odd.get_str() + ", " + formula.p_even0.get_str() + ", " +
                                 formula.p_even1.get_str() + ") vs brute (" + brute.p_odd.get_str() + ", " +
                                 brute.p_even0.get_str() + ", " + brute.p_even1.get_str() + ")");
                }
            }
        }
    };
}

Action add_zeta(CLI::App& app, const GlobalOptions& global) {
    auto* sub = app.add_subcommand("zeta", "Truncated zeta or generating function series");
    struct Opts {
        std::string pair;
        std::string which = "lind";
    };
    auto o = std::make_shared<Opts>();
    sub->add_option("--pair", o->pair, "FlipPair JSON")->required();
    sub->add_option("--which", o->which, "lind | artin | gen")->check(CLI::IsMember({"lind", "artin", "gen"}));
    return [o, &global](Context& ctx) {
        const FlipPair p = load_pair(ctx, o->pair);
        TruncatedSeries s = o->which == "lind"    ? lind_zeta(p, global.order)
                            : o->which == "artin" ? artin_mazur_zeta(p.A(), global.order)
                                                  : generating_function(p, global.order);
        ctx.outputs()["which"] = o->which;
        ctx.outputs()["series"] = series_to_json(s);
    };
}

Action add_charpoly(CLI::App& app) {
    auto* sub = app.add_subcommand("charpoly", "Characteristic polynomial det(tI - A)");
    auto path = std::make_shared<std::string>();
    sub->add_option("matrix", *path, "Matrix or FlipPair JSON")->required();
    return [path](Context& ctx) {
        const IntMatrix A = load_matrix(ctx, *path);
        const IntPolynomial chi = char_poly(A);
        Json coeffs = Json::array();
        for (const Integer& c : chi.coefficients()) coeffs.push_back(integer_to_json(c));
        ctx.outputs()["polynomial"] = chi.to_string();
        ctx.outputs()["coefficients_ascending"] = std::move(coeffs);
    };
}

Action add_rank_profile(CLI::App& app) {
    auto* sub = app.add_subcommand("rank-profile", "Ranks of (A - cI)^j over the rationals");
    struct Opts {
        std::string matrix;
        long eigenvalue = 1;
        std::size_t max_power = 4;
    };
    auto o = std::make_shared<Opts>();
    sub->add_option("matrix", o->matrix, "Matrix or FlipPair JSON")->required();
    sub->add_option("--eigenvalue", o->eigenvalue, "Integer eigenvalue c");
    sub->add_option("--max-power", o->max_power, "Largest j");
    return [o](Context& ctx) {
        const IntMatrix A = load_matrix(ctx, o->matrix);
        const auto profile = rank_profile(A, Integer(o->eigenvalue), o->max_power);
        Table table{{"j", "rank"}, {}};
        for (std::size_t j = 0; j < profile.size(); ++j) table.rows.push_back({std::to_string(j + 1), std::to_string(profile[j])});
        ctx.report().table = std::move(table);
        ctx.outputs()["profile"] = sizes_json(profile);
        try {
            ctx.outputs()["jordan_block_sizes"] = sizes_json(jordan_block_sizes(A.rows(), profile));
        } catch (const InputError&) {
            ctx.outputs()["jordan_block_sizes"] = "profile not stabilized; raise --max-power";
        }
    };
}

Action add_he_check(CLI::App& app) {
    auto* sub = app.add_subcommand("he-check", "Check a half elementary equivalence (R, S = K R^T J)");
    struct Opts {
        std::string from, to, R, S;
        std::size_t period = kDefaultCheckPeriod;
    };
    auto o = std::make_shared<Opts>();
    sub->add_option("--from", o->from, "Source FlipPair JSON")->required();
    sub->add_option("--to", o->to, "Target FlipPair JSON")->required();
    sub->add_option("--R", o->R, "Certificate, matrix or rows JSON")->required();
    sub->add_option("--S", o->S, "Optional S (must equal K R^T J)");
    sub->add_option("--verify-period", o->period, "Period bound for the conjugacy check");
    return [o](Context& ctx) {
        const FlipPair src = load_pair(ctx, o->from);
        const FlipPair dst = load_pair(ctx, o->to);
        CertificateDoc doc = load_certificate(ctx, o->R);
        if (!o->S.empty()) doc.S = load_rows(ctx, o->S);
        const IntMatrix R = link_matrix(src, dst, doc.R);
        std::optional<IntMatrix> S;
        if (doc.S) S = IntMatrix::from_rows(dst.alphabet(), src.alphabet(), *doc.S);
        try {
            const HalfElemCert cert = he_check(src, dst, R, S);
            ctx.pass("half elementary equivalence", "valid");
            ctx.outputs()["certificate"] = certificate_to_json(cert);
            check_prop22(ctx, cert, o->period, "");
        } catch (const CheckFailure& e) {
            ctx.fail("half elementary equivalence", "invalid", e.identity(), e.what());
        }
    };
}

Action add_he_search(CLI::App& app) {
    auto* sub = app.add_subcommand("he-search", "Enumerate half elementary equivalences");
    struct Opts {
        std::string from, to;
        std::size_t max_solutions = 100;
        std::size_t cell_budget = kDefaultHeCellBudget;
    };
    auto o = std::make_shared<Opts>();
    sub->add_option("--from", o->from, "Source FlipPair JSON")->required();
    sub->add_option("--to", o->to, "Target FlipPair JSON")->required();
    sub->add_option("--max-solutions", o->max_solutions, "Stop after this many");
    sub->add_option("--cell-budget", o->cell_budget, "Refuse searches with more R cells");
    return [o](Context& ctx) {
        const FlipPair src = load_pair(ctx, o->from);
        const FlipPair dst = load_pair(ctx, o->to);
        const auto found = he_search(src, dst, o->max_solutions, o->cell_budget);
        Json certs = Json::array();
        for (const auto& c : found) certs.push_back(certificate_to_json(c));
        ctx.pass("search", found.empty() ? "none within bounds" : std::to_string(found.size()) + " found");
        ctx.outputs()["count"] = found.size();
        ctx.outputs()["certificates"] = std::move(certs);
    };
}

Action add_sse_verify(CLI::App& app) {
    auto* sub = app.add_subcommand("sse-verify", "Check a chain of half elementary equivalences");
    struct Opts {
        std::string chain;
        std::size_t period = 0;
    };
    auto o = std::make_shared<Opts>();
    sub->add_option("chain", o->chain, "Chain JSON")->required();
    sub->add_option("--verify-period", o->period, "Also check each link's conjugacy on periodic points (0 = skip)");
    return [o](Context& ctx) {
        const StrongChain chain = chain_from_json(ctx.load(o->chain));
        const SseReport r = sse_verify(chain);
        ctx.outputs()["lag"] = r.lag;
        if (r.passed) {
            ctx.pass("strong shift-flip equivalence", "valid, lag " + std::to_string(r.lag));
            ctx.outputs()["conclusion"] = r.conclusion;
            if (o->period > 0) {
                for (std::size_t i = 0; i < chain.links.size(); ++i) {
                    check_prop22(ctx, chain.links[i], o->period, "link " + std::to_string(i) + ": ");
                }
            }
        } else {
            ctx.fail("strong shift-flip equivalence", "invalid", "link " + std::to_string(r.failed_link.value_or(0)), r.failure);
        }
    };
}

Action add_sfe_check(CLI::App& app) {
    auto* sub = app.add_subcommand("sfe-check", "Check a shift-flip equivalence of lag k");
    struct Opts {
        std::string from, to, R, S;
        std::size_t lag = 0;
    };
    auto o = std::make_shared<Opts>();
    sub->add_option("--from", o->from, "Source FlipPair JSON")->required();
    sub->add_option("--to", o->to, "Target FlipPair JSON")->required();
    sub->add_option("--R", o->R, "Certificate, matrix or rows JSON")->required();
    sub->add_option("--S", o->S, "Optional S (must equal K R^T J)");
    sub->add_option("--lag", o->lag, "Lag k (defaults to the certificate's)");
    return [o](Context& ctx) {
        const FlipPair src = load_pair(ctx, o->from);
        const FlipPair dst = load_pair(ctx, o->to);
        CertificateDoc doc = load_certificate(ctx, o->R);
        if (!o->S.empty()) doc.S = load_rows(ctx, o->S);
        const std::size_t lag = o->lag > 0 ? o->lag : doc.lag;
        if (lag == 0) throw InputError("sfe-check: lag must be at least 1");
        const IntMatrix R = link_matrix(src, dst, doc.R);
        std::optional<IntMatrix> S;
        if (doc.S) S = IntMatrix::from_rows(dst.alphabet(), src.alphabet(), *doc.S);
        try {
            const ShiftFlipCert cert = sfe_check(src, dst, R, lag, S);
            ctx.pass("shift-flip equivalence", "valid, lag " + std::to_string(lag));
            ctx.outputs()["certificate"] = certificate_to_json(cert);
        } catch (const CheckFailure& e) {
            ctx.fail("shift-flip equivalence", "invalid", e.identity(), e.what());
        }
    };
}

Action add_sfe_search(CLI::App& app) {
    auto* sub = app.add_subcommand("sfe-search", "Bounded search for shift-flip equivalences");
    struct Opts {
        std::string from, to;
        SfeSearchOptions search;
    };
    auto o = std::make_shared<Opts>();
    sub->add_option("--from", o->from, "Source FlipPair JSON")->required();
    sub->add_option("--to", o->to, "Target FlipPair JSON")->required();
    sub->add_option("--lag-max", o->search.lag_max, "Largest lag");
    sub->add_option("--entry-max", o->search.entry_max, "Largest entry of R");
    sub->add_option("--node-budget", o->search.node_budget, "Search node budget");
    sub->add_option("--max-solutions", o->search.max_solutions, "Stop after this many");
    return [o](Context& ctx) {
        const FlipPair src = load_pair(ctx, o->from);
        const FlipPair dst = load_pair(ctx, o->to);
        const auto found = sfe_bounded_search(src, dst, o->search);
        Json certs = Json::array();
        for (const auto& c : found) certs.push_back(certificate_to_json(c));
        ctx.pass("search (lag <= " + std::to_string(o->search.lag_max) + ", entries <= " + std::to_string(o->search.entry_max) + ")",
                 found.empty() ? "none within bounds" : std::to_string(found.size()) + " found");
        ctx.outputs()["count"] = found.size();
        ctx.outputs()["certificates"] = std::move(certs);
    };
}

Action add_higher_block(CLI::App& app, const GlobalOptions& global) {
    auto* sub = app.add_subcommand("higher-block", "Higher block flip pair and its chain");
    struct Opts {
        std::string pair;
        std::size_t n = 1;
        std::size_t period = kDefaultCheckPeriod;
        bool emit_chain = false;
    };
    auto o = std::make_shared<Opts>();
    sub->add_option("--pair", o->pair, "FlipPair JSON")->required();
    sub->add_option("--n", o->n, "Chain lag; blocks have length n + 1");
    sub->add_option("--verify-period", o->period, "Period bound for the conjugacy checks");
    sub->add_flag("--emit-chain", o->emit_chain, "Include the full chain in the outputs");
    return [o, &global](Context& ctx) {
        const FlipPair p = load_pair(ctx, o->pair);
        const HigherBlockResult hb = higher_block(p, o->n);
        const SseReport r = sse_verify(hb.chain);
        if (r.passed) {
            ctx.pass("strong shift-flip equivalence", "valid, lag " + std::to_string(r.lag));
        } else {
            ctx.fail("strong shift-flip equivalence", "invalid", "link " + std::to_string(r.failed_link.value_or(0)), r.failure);
        }
        for (std::size_t i = 0; i < hb.chain.links.size(); ++i) {
            check_prop22(ctx, hb.chain.links[i], o->period, "link " + std::to_string(i) + ": ");
        }
        const std::string check = "Lind zeta preserved through order " + std::to_string(global.order);
        if (lind_zeta(p, global.order) == lind_zeta(hb.pair, global.order)) {
            ctx.pass(check);
        } else {
            ctx.fail(check, "differs", "lind_zeta", "zeta of the block pair differs");
        }
        ctx.outputs()["pair"] = pair_to_json(hb.pair);
        if (o->emit_chain) ctx.outputs()["chain"] = chain_to_json(hb.chain);
    };
}

Action add_build_pair(CLI::App& app) {
    auto* sub = app.add_subcommand("build-pair", "Flip pair conjugate to a sliding-block flip");
    struct Opts {
        std::string spec;
        std::size_t period = kDefaultCheckPeriod;
    };
    auto o = std::make_shared<Opts>();
    sub->add_option("spec", o->spec, "BlockFlip JSON")->required();
    sub->add_option("--verify-period", o->period, "Period bound for the flip checks");
    return [o](Context& ctx) {
        const BlockFlipSpec spec = block_flip_from_json(ctx.load(o->spec));
        try {
            const BuiltFlipPair built = build_flip_pair(spec, o->period);
            ctx.pass("block flip", "valid");
            ctx.outputs()["pair"] = pair_to_json(built.pair);
            ctx.outputs()["theta_window"] = "[i-" + std::to_string(built.theta.memory) + ", i+" +
                                            std::to_string(built.theta.anticipation) + "]";
        } catch (const CheckFailure& e) {
            ctx.fail("block flip", "invalid", e.identity(), e.what());
        }
    };
}

Action add_decompose(CLI::App& app) {
    auto* sub = app.add_subcommand("decompose", "Chain of half elementary equivalences for a one-block conjugacy");
    struct Opts {
        std::string spec;
        std::size_t period = kDefaultCheckPeriod;
        bool emit_chain = false;
    };
    auto o = std::make_shared<Opts>();
    sub->add_option("spec", o->spec, "Conjugacy JSON")->required();
    sub->add_option("--verify-period", o->period, "Period bound for the composed-gamma check");
    sub->add_flag("--emit-chain", o->emit_chain, "Include the full chain in the outputs");
    return [o](Context& ctx) {
        const OneBlockConjugacySpec spec = conjugacy_from_json(ctx.load(o->spec));
        try {
            const Decomposition d = decompose_conjugacy(spec, o->period);
            ctx.pass("decomposition", "lag " + std::to_string(d.chain.lag()));
            ctx.outputs()["lag"] = d.chain.lag();
            ctx.outputs()["shift"] = d.shift;
            ctx.outputs()["level_sizes"] = sizes_json(d.level_sizes);
            if (o->emit_chain) ctx.outputs()["chain"] = chain_to_json(d.chain);
        } catch (const CheckFailure& e) {
            ctx.fail("decomposition", "failed", e.identity(), e.what());
        }
    };
}

ExampleFixtures load_fixture_dir(Context& ctx, const std::string& dir) {
    ExampleFixtures f = ExampleFixtures::embedded();
    const std::vector<std::pair<std::string, IntMatrix*>> files{
        {"example1_A.json", &f.e1_A}, {"example1_J.json", &f.e1_J}, {"example2_A.json", &f.e2_A},
        {"example2_B.json", &f.e2_B}, {"example2_C.json", &f.e2_C}, {"example2_J.json", &f.e2_J}};
    for (const auto& [name, target] : files) {
        const std::filesystem::path path = std::filesystem::path(dir) / name;
        if (std::filesystem::exists(path)) *target = matrix_from_json(ctx.load(path.string()), "/" + name);
    }
    return f;
}

Action add_paper_examples(CLI::App& app, const GlobalOptions& global) {
    auto* sub = app.add_subcommand("paper-examples", "Expected-vs-computed table for the two worked examples");
    struct Opts {
        std::string fixture_dir;
        std::size_t m_max = 4;
        bool no_search = false;
    };
    auto o = std::make_shared<Opts>();
    sub->add_option("--fixture-dir", o->fixture_dir, "Replace embedded matrices by files found here");
    sub->add_option("--m-max", o->m_max, "Largest m for count rows");
    sub->add_flag("--no-search", o->no_search, "Skip the bounded shift-flip search row");
    return [o, &global](Context& ctx) {
        const ExampleFixtures f = o->fixture_dir.empty() ? ExampleFixtures::embedded() : load_fixture_dir(ctx, o->fixture_dir);
        if (o->fixture_dir.empty()) {
            for (const IntMatrix* m : {&f.e1_A, &f.e1_J, &f.e2_A, &f.e2_B, &f.e2_C, &f.e2_J}) ctx.hash_text(matrix_to_json(*m).dump());
        }
        ExampleOptions options;
        options.order = global.order;
        options.m_max = o->m_max;
        options.run_search = !o->no_search;
        Table table{{"row", "expected", "computed", "status"}, {}};
        for (const ExampleRow& row : run_paper_examples(f, options)) {
            table.rows.push_back({row.id, row.expected, row.computed, row.passed ? "pass" : "FAIL"});
            if (row.passed) {
                ctx.pass(row.id);
            } else {
                ctx.fail(row.id, "mismatch", row.id, "expected " + row.expected + ", computed " + row.computed);
            }
        }
        ctx.report().table = std::move(table);
    };
}

std::string echo(const std::vector<std::string>& args) {
    std::vector<std::string> parts{"shiftflip"};
    parts.insert(parts.end(), args.begin(), args.end());
    return join(parts, " ");
}

}  // namespace

CliOutcome run_cli(const std::vector<std::string>& args) {
    CliOutcome outcome;
    RunReport& report = outcome.report;
    report.command = echo(args);

    GlobalOptions global;
    CLI::App app{"Exact computations on shift-flip systems of finite type", "shiftflip"};
    app.require_subcommand(1);
    app.add_option("--format", global.format, "json | csv | plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
    app.add_option("--order", global.order, "Series truncation order")->capture_default_str();
    app.add_option("--seed", global.seed, "Seed for randomized inputs")->capture_default_str();
    app.add_flag("--timing", global.timing, "Report wall-clock time");
    app.fallthrough();

    std::vector<std::pair<CLI::App*, Action>> actions;
    const auto reg = [&](Action a) { actions.emplace_back(app.get_subcommands([](const CLI::App*) { return true; }).back(), std::move(a)); };
    reg(add_validate(app));
    reg(add_count(app));
    reg(add_zeta(app, global));
    reg(add_charpoly(app));
    reg(add_rank_profile(app));
    reg(add_he_check(app));
    reg(add_he_search(app));
    reg(add_sse_verify(app));
    reg(add_sfe_check(app));
    reg(add_sfe_search(app));
    reg(add_higher_block(app, global));
    reg(add_build_pair(app));
    reg(add_decompose(app));
    reg(add_paper_examples(app, global));

    const auto render = [&] {
        if (global.format == "csv") return render_csv(report);
        if (global.format == "plain") return render_plain(report);
        return render_json(report);
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        outcome.rendered = app.help();
        return outcome;
    } catch (const CLI::CallForAllHelp&) {
        outcome.rendered = app.help("", CLI::AppFormatMode::All);
        return outcome;
    } catch (const CLI::ParseError& e) {
        report.error = std::string("usage: ") + e.what();
        outcome.exit_code = kUsageError;
        outcome.rendered = render();
        return outcome;
    }

    Context ctx(report);
    const auto start = std::chrono::steady_clock::now();
    try {
        for (auto& [sub, action] : actions) {
            if (sub->parsed()) action(ctx);
        }
    } catch (const CheckFailure& e) {
        ctx.fail(e.identity(), "fail", e.identity(), e.what());
    } catch (const InputError& e) {
        report.error = e.what();
        outcome.exit_code = kUsageError;
    } catch (const BudgetExceeded& e) {
        report.error = std::string("budget exceeded: ") + e.what();
        outcome.exit_code = kUsageError;
    }
    if (global.timing) {
        report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    report.inputs_digest = ctx.finish_digest();
    if (outcome.exit_code == kPass) {
        for (const Verdict& v : report.verdicts) {
            if (!v.passed) outcome.exit_code = kCheckFailed;
        }
    }
    if (global.seed != 0) report.outputs["seed"] = global.seed;
    outcome.rendered = render();
    return outcome;
}

}  // namespace shiftflip::cli
