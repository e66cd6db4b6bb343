#include "shiftflip/paper_examples.hpp"

#include <functional>
#include <sstream>

#include "shiftflip/equivalence.hpp"
#include "shiftflip/error.hpp"
#include "shiftflip/markov_shift.hpp"

namespace shiftflip {

ExampleFixtures ExampleFixtures::embedded() {
    const Labels four = numbered_labels(4);
    const Labels seven = numbered_labels(7);
    return {
        IntMatrix::square(four, {{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}}),
        IntMatrix::square(four, {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}),
        IntMatrix::square(seven, {{1, 1, 1, 0, 0, 0, 0},
                                  {0, 1, 0, 1, 0, 0, 0},
                                  {0, 0, 1, 0, 0, 1, 0},
                                  {0, 0, 0, 1, 0, 0, 1},
                                  {1, 1, 1, 0, 1, 0, 0},
                                  {1, 1, 1, 0, 0, 1, 0},
                                  {0, 0, 0, 1, 1, 0, 1}}),
        IntMatrix::square(seven, {{1, 1, 0, 0, 0, 0, 0},
                                  {0, 1, 1, 0, 1, 0, 0},
                                  {0, 0, 1, 0, 0, 1, 1},
                                  {0, 0, 0, 1, 0, 1, 1},
                                  {1, 1, 0, 0, 1, 0, 0},
                                  {0, 0, 0, 0, 1, 1, 0},
                                  {0, 0, 0, 1, 0, 0, 1}}),
        IntMatrix::square(seven, {{1, 1, 0, 0, 0, 0, 0},
                                  {0, 1, 0, 1, 1, 1, 0},
                                  {0, 0, 1, 1, 1, 1, 0},
                                  {0, 0, 0, 1, 0, 0, 1},
                                  {1, 0, 0, 0, 1, 0, 0},
                                  {0, 0, 1, 0, 0, 1, 0},
                                  {0, 0, 0, 1, 1, 1, 1}}),
        IntMatrix::square(seven, {{1, 0, 0, 0, 0, 0, 0},
                                  {0, 0, 0, 0, 1, 0, 0},
                                  {0, 0, 0, 0, 0, 1, 0},
                                  {0, 0, 0, 0, 0, 0, 1},
                                  {0, 1, 0, 0, 0, 0, 0},
                                  {0, 0, 1, 0, 0, 0, 0},
                                  {0, 0, 0, 1, 0, 0, 0}}),
    };
}

FlipPair golden_mean_pair() {
    const Labels labels = numbered_labels(2);
    return validate_flip_pair(IntMatrix::square(labels, {{1, 1}, {1, 0}}), IntMatrix::identity(labels), "golden-mean");
}

FlipPair example1_pair(const ExampleFixtures& f) { return validate_flip_pair(f.e1_A, f.e1_J, "example1 (A, J)"); }

FlipPair example1_identity_pair(const ExampleFixtures& f) {
    return validate_flip_pair(f.e1_A, IntMatrix::identity(f.e1_A.row_labels()), "example1 (A, I)");
}

FlipPair example2_pair(char which, const ExampleFixtures& f) {
    switch (which) {
        case 'A': return validate_flip_pair(f.e2_A, f.e2_J, "example2 (A, J)");
        case 'B': return validate_flip_pair(f.e2_B, f.e2_J, "example2 (B, J)");
        case 'C': return validate_flip_pair(f.e2_C, f.e2_J, "example2 (C, J)");
        default: throw InputError(std::string("example2_pair: unknown matrix '") + which + "'");
    }
}

IntPolynomial example2_charpoly() {
    const IntPolynomial t{0, 1};
    const IntPolynomial t_minus_1{-1, 1};
    return t * t_minus_1 * t_minus_1 * t_minus_1 * t_minus_1 * IntPolynomial{1, -3, 1};
}

FlipCountTriple example2_closed_form(std::size_t m) {
    if (m == 0) throw InputError("example2_closed_form: m must be at least 1");
    std::vector<Integer> s{5, 2};
    while (s.size() < m + 2) s.push_back(3 * s[s.size() - 1] - s[s.size() - 2]);
    return {m, 8 * s[m] - 3 * s[m - 1], s[m + 1], 55 * s[m] - 21 * s[m - 1]};
}

TruncatedSeries example1_identity_generating_function(std::size_t order) {
    TruncatedSeries g = TruncatedSeries::geometric(order, Rational(2), 2);
    g[0] = 0;
    return series_scale(g, Rational(2));
}

std::string format_coefficients(const TruncatedSeries& s) {
    std::string out = "[";
    for (std::size_t k = 0; k <= s.order(); ++k) out += (k ? ", " : "") + rational_to_string(s[k]);
    return out + "]";
}

namespace {

std::string format_triple(const FlipCountTriple& t) {
    return "(" + t.p_odd.get_str() + ", " + t.p_even0.get_str() + ", " + t.p_even1.get_str() + ")";
}

std::string format_sizes(const std::vector<std::size_t>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
    return out + "]";
}

class RowSink {
public:
    explicit RowSink(std::vector<ExampleRow>& rows) : rows_(rows) {}

    // compute() returns the computed text; the row passes iff it equals expected.
    void add(std::string id, std::string expected, const std::function<std::string()>& compute) {
        ExampleRow row{std::move(id), std::move(expected), "", false};
        try {
            row.computed = compute();
            row.passed = row.computed == row.expected;
        } catch (const std::exception& e) {
            row.computed = std::string("error: ") + e.what();
        }
        rows_.push_back(std::move(row));
    }

private:
    std::vector<ExampleRow>& rows_;
};

}  // namespace

std::vector<ExampleRow> run_paper_examples(const ExampleFixtures& f, const ExampleOptions& options) {
    std::vector<ExampleRow> rows;
    RowSink sink(rows);
    const std::size_t order = options.order;

    sink.add("example1/(A,J) flip pair", "valid", [&] { return (void)example1_pair(f), std::string("valid"); });
    sink.add("example1/(A,I) flip pair", "valid", [&] { return (void)example1_identity_pair(f), std::string("valid"); });
    sink.add("example1/G(A,J)", format_coefficients(TruncatedSeries(order)),
             [&] { return format_coefficients(generating_function(example1_pair(f), order)); });
    sink.add("example1/G(A,I)", format_coefficients(example1_identity_generating_function(order)),
             [&] { return format_coefficients(generating_function(example1_identity_pair(f), order)); });
    for (std::size_t m = 1; m <= options.m_max; ++m) {
        const Integer expected_even = Integer(1) << static_cast<mp_bitcnt_t>(m + 2);
        sink.add("example1/(A,I) brute counts m=" + std::to_string(m),
                 format_triple({m, 0, expected_even, 0}),
                 [&] { return format_triple(p_flip_counts_bruteforce(example1_identity_pair(f), m)); });
    }
    for (std::size_t k = 1; k <= 2; ++k) {
        sink.add("example1/(A^k, A^k) lag 2k, k=" + std::to_string(k), "shift-flip equivalence", [&] {
            const FlipPair src = example1_pair(f);
            const FlipPair dst = example1_identity_pair(f);
            (void)sfe_check(src, dst, mat_pow(src.A(), k), 2 * k, mat_pow(src.A(), k));
            return std::string("shift-flip equivalence");
        });
    }
    sink.add("example1/Lind zeta (A,J) vs (A,I)", "different", [&] {
        return lind_zeta(example1_pair(f), order) == lind_zeta(example1_identity_pair(f), order) ? "equal" : "different";
    });

    const std::string chi = example2_charpoly().to_string();
    for (char which : {'A', 'B', 'C'}) {
        const std::string name = std::string(1, which);
        sink.add("example2/(" + name + ",J) flip pair", "valid", [&] { return (void)example2_pair(which, f), std::string("valid"); });
        sink.add("example2/charpoly " + name, chi, [&] { return char_poly(example2_pair(which, f).A()).to_string(); });
    }
    for (std::size_t m = 1; m <= options.m_max; ++m) {
        const std::string expected = format_triple(example2_closed_form(m));
        for (char which : {'A', 'B', 'C'}) {
            const std::string name = std::string(1, which);
            sink.add("example2/(" + name + ",J) triple m=" + std::to_string(m), expected,
                     [&] { return format_triple(p_flip_counts(example2_pair(which, f), m)); });
            sink.add("example2/(" + name + ",J) brute triple m=" + std::to_string(m), expected,
                     [&] { return format_triple(p_flip_counts_bruteforce(example2_pair(which, f), m)); });
        }
    }
    const std::vector<std::pair<char, std::vector<std::size_t>>> profiles{
        {'A', {6, 5, 4, 3}}, {'B', {6, 5, 4, 3}}, {'C', {5, 3, 3, 3}}};
    for (const auto& [which, profile] : profiles) {
        sink.add(std::string("example2/rank profile (") + which + " - I)^j, j=1..4", format_sizes(profile),
                 [&] { return format_sizes(rank_profile(example2_pair(which, f).A(), 1, 4)); });
    }
    sink.add("example2/Lind zeta A = B = C", "equal", [&] {
        const auto a = lind_zeta(example2_pair('A', f), order);
        return a == lind_zeta(example2_pair('B', f), order) && a == lind_zeta(example2_pair('C', f), order) ? "equal"
                                                                                                               : "different";
    });
    if (options.run_search) {
        sink.add("example2/sfe search (A,J) -> (C,J), lag <= 2, entries <= 1", "none within bounds", [&] {
            SfeSearchOptions search;
            search.lag_max = 2;
            search.entry_max = 1;
            search.max_solutions = 1;
            const auto found = sfe_bounded_search(example2_pair('A', f), example2_pair('C', f), search);
            return found.empty() ? std::string("none within bounds") : "found lag " + std::to_string(found.front().lag);
        });
    }
    return rows;
}

}  // namespace shiftflip
