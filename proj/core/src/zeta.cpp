#include "shiftflip/zeta.hpp"

#include <algorithm>

#include "shiftflip/error.hpp"

namespace shiftflip {

namespace {

// Powers A^0 .. A^max, reused across m.
std::vector<IntMatrix> powers_up_to(const IntMatrix& A, std::size_t max) {
    std::vector<IntMatrix> out;
    out.reserve(max + 1);
    out.push_back(IntMatrix::identity(A.row_labels()));
    for (std::size_t k = 1; k <= max; ++k) out.push_back(mat_mul(out.back(), A));
    return out;
}

struct Diagonals {
    IntVector j;
    IntVector aj;
    IntVector ja;
};

Diagonals diagonals(const FlipPair& p) {
    return {delta(p.J()), delta(mat_mul(p.A(), p.J())), delta(mat_mul(p.J(), p.A()))};
}

FlipCountTriple triple_from(const Diagonals& d, const std::vector<IntMatrix>& powers, std::size_t m) {
    return {m, bilinear(d.j, powers[m - 1], d.aj), bilinear(d.j, powers[m], d.j), bilinear(d.ja, powers[m - 1], d.aj)};
}

}  // namespace

FlipCountTriple p_flip_counts(const FlipPair& p, std::size_t m) {
    if (m == 0) throw InputError("p_flip_counts: m must be at least 1");
    return triple_from(diagonals(p), powers_up_to(p.A(), m), m);
}

FlipCountTriple p_flip_counts_bruteforce(const FlipPair& p, std::size_t m, const EnumerationLimits& limits) {
    if (m == 0) throw InputError("p_flip_counts_bruteforce: m must be at least 1");
    return {m, Integer(static_cast<unsigned long>(count_pmn_bruteforce(p, 2 * m - 1, 0, limits))),
            Integer(static_cast<unsigned long>(count_pmn_bruteforce(p, 2 * m, 0, limits))),
            Integer(static_cast<unsigned long>(count_pmn_bruteforce(p, 2 * m, 1, limits)))};
}

TruncatedSeries generating_function(const FlipPair& p, std::size_t order) {
    TruncatedSeries g(order);
    if (order == 0) return g;
    const std::size_t m_max = (order + 1) / 2;
    const Diagonals d = diagonals(p);
    const auto powers = powers_up_to(p.A(), m_max);
    for (std::size_t m = 1; m <= m_max; ++m) {
        const FlipCountTriple c = triple_from(d, powers, m);
        g[2 * m - 1] = Rational(c.p_odd);
        if (2 * m <= order) g[2 * m] = Rational(Integer(c.p_even0 + c.p_even1), Integer(2));
    }
    for (std::size_t k = 0; k <= order; ++k) g[k].canonicalize();
    return g;
}

namespace {

// sum_{n >= 1} tr(A^n) t^{step*n} / n, scaled by `factor`.
TruncatedSeries trace_series(const IntMatrix& A, std::size_t order, std::size_t step, const Rational& factor) {
    TruncatedSeries s(order);
    if (A.rows() == 0) return s;
    IntMatrix power = IntMatrix::identity(A.row_labels());
    for (std::size_t n = 1; step * n <= order; ++n) {
        power = mat_mul(power, A);
        s[step * n] = factor * Rational(trace(power), Integer(static_cast<unsigned long>(n)));
        s[step * n].canonicalize();
    }
    return s;
}

}  // namespace

TruncatedSeries artin_mazur_zeta(const IntMatrix& A, std::size_t order) {
    if (!A.is_square()) throw InputError("artin_mazur_zeta: matrix is not square");
    return series_exp(trace_series(A, order, 1, 1));
}

TruncatedSeries lind_zeta(const FlipPair& p, std::size_t order) {
    const TruncatedSeries half_log_zeta_t2 = trace_series(p.A(), order, 2, Rational(1, 2));
    return series_exp(half_log_zeta_t2 + generating_function(p, order));
}

bool Prop31Report::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const Prop31Row& r) { return r.holds(); });
}

Prop31Report verify_prop31(const FlipPair& p, std::size_t m_max, const EnumerationLimits& limits) {
    Prop31Report report;
    // p_{k,n}(T, T o phi) is p_{k,n+1}(T, phi): (T^n o T o phi) = T^{n+1} o phi.
    const auto count = [&](std::size_t k, long n) { return count_pmn_bruteforce(p, k, n, limits); };
    for (std::size_t m = 1; m <= m_max; ++m) {
        report.rows.push_back({m, "p_{2m-1,0}(T,phi) = p_{2m-1,0}(T,T.phi)", count(2 * m - 1, 0), count(2 * m - 1, 1)});
        report.rows.push_back({m, "p_{2m,0}(T,phi) = p_{2m,1}(T,T.phi)", count(2 * m, 0), count(2 * m, 2)});
        report.rows.push_back({m, "p_{2m,1}(T,phi) = p_{2m,0}(T,T.phi)", count(2 * m, 1), count(2 * m, 1)});
    }
    return report;
}

}  // namespace shiftflip
