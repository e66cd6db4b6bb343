#include "oracles.hpp"

#include <cstdint>
#include <stdexcept>

namespace shiftflip::oracle {

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix out(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = Rational(m(r, c));
    return out;
}

Rational determinant(RationalMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const Rational factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

std::vector<Integer> char_poly_by_interpolation(const IntMatrix& A) {
    const std::size_t n = A.rows();
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (std::size_t k = 0; k <= n; ++k) {
        RationalMatrix m = to_rational(A);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) m[r][c] = -m[r][c];
            m[r][r] += static_cast<long>(k);
        }
        xs.emplace_back(static_cast<long>(k));
        ys.push_back(determinant(std::move(m)));
    }
    // sum_k y_k prod_{j != k} (t - x_j) / (x_k - x_j), expanded in ascending powers.
    std::vector<Rational> poly(n + 1, Rational(0));
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Rational> basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == k) continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= xs[j] * basis[d];
            }
            basis = std::move(next);
            denom *= xs[k] - xs[j];
        }
        for (std::size_t d = 0; d < basis.size(); ++d) poly[d] += ys[k] * basis[d] / denom;
    }
    std::vector<Integer> out;
    for (Rational& q : poly) {
        q.canonicalize();
        if (q.get_den() != 1) throw std::logic_error("interpolated characteristic polynomial is not integral");
        out.push_back(q.get_num());
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::size_t rank_right_to_left(const IntMatrix& input) {
    RationalMatrix m = to_rational(input);
    const std::size_t rows = input.rows();
    std::size_t rank = 0;
    for (std::size_t k = input.cols(); k-- > 0 && rank < rows;) {
        std::size_t pivot = rows;
        // Bottom-most nonzero row among the unused ones.
        for (std::size_t r = rows; r-- > rank;) {
            if (m[r][k] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const Rational lead = m[rank][k];
        for (Rational& x : m[rank]) x /= lead;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][k] == 0) continue;
            const Rational factor = m[r][k];
            for (std::size_t c = 0; c < input.cols(); ++c) m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

IntMatrix naive_mul(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.row_labels(), b.col_labels());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
    return out;
}

namespace {

// Calls f(word) for every word of length m over {0..n-1}.
template <typename F>
void for_each_word(std::size_t n, std::size_t m, F&& f) {
    if (n == 0) return;
    std::vector<std::size_t> w(m, 0);
    for (;;) {
        f(w);
        std::size_t i = m;
        while (i > 0 && ++w[i - 1] == n) w[--i] = 0;
        if (i == 0) return;
    }
}

bool is_cycle(const IntMatrix& A, const std::vector<std::size_t>& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (A(w[i], w[(i + 1) % w.size()]) != 1) return false;
    return true;
}

}  // namespace

std::size_t count_cycles_exhaustive(const IntMatrix& A, std::size_t m) {
    std::size_t count = 0;
    for_each_word(A.rows(), m, [&](const std::vector<std::size_t>& w) { count += is_cycle(A, w) ? 1 : 0; });
    return count;
}

std::size_t count_pmn_exhaustive(const FlipPair& p, std::size_t m, long n) {
    std::vector<std::size_t> tau(p.size());
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.J()(a, b) == 1) tau[a] = b;
    const long period = static_cast<long>(m);
    std::size_t count = 0;
    for_each_word(p.size(), m, [&](const std::vector<std::size_t>& w) {
        if (!is_cycle(p.A(), w)) return;
        for (long i = 0; i < period; ++i) {
            const long j = (((-i - n) % period) + period) % period;
            if (tau[w[static_cast<std::size_t>(j)]] != w[static_cast<std::size_t>(i)]) return;
        }
        ++count;
    });
    return count;
}

std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t order) {
    std::vector<Rational> out(order + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && i <= order; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) out[i + j] += a[i] * b[j];
    for (Rational& q : out) q.canonicalize();
    return out;
}

std::vector<Rational> exp_by_powers(const std::vector<Rational>& a, std::size_t order) {
    if (!a.empty() && a[0] != 0) throw std::invalid_argument("exp_by_powers: nonzero constant term");
    std::vector<Rational> result(order + 1, Rational(0));
    std::vector<Rational> power(order + 1, Rational(0));
    power[0] = 1;
    Rational factorial = 1;
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) {
            power = convolve(power, a, order);
            factorial *= static_cast<long>(k);
        }
        for (std::size_t d = 0; d <= order; ++d) result[d] += power[d] / factorial;
    }
    for (Rational& q : result) q.canonicalize();
    return result;
}

std::vector<Rational> inverse_sqrt_binomial(const Rational& c, std::size_t step, std::size_t order) {
    // (1 - x)^(-1/2) = sum_k binom(2k, k) / 4^k x^k
    std::vector<Rational> out(order + 1, Rational(0));
    Rational coeff = 1;
    Rational power = 1;
    for (std::size_t k = 0; k * step <= order; ++k) {
        if (k > 0) {
            coeff = coeff * Rational(static_cast<long>(2 * k - 1)) / Rational(static_cast<long>(2 * k));
            power *= c;
        }
        out[k * step] = coeff * power;
        out[k * step].canonicalize();
    }
    return out;
}

std::vector<IntMatrix> he_solutions_exhaustive(const FlipPair& src, const FlipPair& dst) {
    const std::size_t rows = src.size();
    const std::size_t cols = dst.size();
    const std::size_t cells = rows * cols;
    if (cells > 24) throw std::invalid_argument("he_solutions_exhaustive: too many cells");
    std::vector<IntMatrix> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
        IntMatrix R(src.alphabet(), dst.alphabet());
        for (std::size_t c = 0; c < cells; ++c) {
            if ((mask >> (cells - 1 - c)) & 1U) R(c / cols, c % cols) = 1;
        }
        // S(b, a) = (K R^T J)(b, a) = R(tau_J a, tau_K b), computed with explicit sums.
        IntMatrix S(dst.alphabet(), src.alphabet());
        for (std::size_t b = 0; b < cols; ++b)
            for (std::size_t a = 0; a < rows; ++a)
                for (std::size_t x = 0; x < cols; ++x)
                    for (std::size_t y = 0; y < rows; ++y) S(b, a) += dst.J()(b, x) * R(y, x) * src.J()(y, a);
        bool ok = true;
        const IntMatrix RS = naive_mul(R, S);
        const IntMatrix SR = naive_mul(S, R);
        for (std::size_t i = 0; ok && i < rows; ++i)
            for (std::size_t j = 0; ok && j < rows; ++j) ok = RS(i, j) == src.A()(i, j);
        for (std::size_t i = 0; ok && i < cols; ++i)
            for (std::size_t j = 0; ok && j < cols; ++j) ok = SR(i, j) == dst.A()(i, j);
        if (ok) out.push_back(std::move(R));
    }
    return out;
}

}  // namespace shiftflip::oracle
