#include "shiftflip/equivalence.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "shiftflip/error.hpp"

namespace shiftflip {

namespace {

void require_link_shape(const FlipPair& src, const FlipPair& dst, const IntMatrix& R, const char* op) {
    if (R.rows() != src.size() || R.cols() != dst.size()) {
        throw InputError(std::string(op) + ": R is " + std::to_string(R.rows()) + "x" + std::to_string(R.cols()) +
                         ", expected " + std::to_string(src.size()) + "x" + std::to_string(dst.size()));
    }
    if (R.row_labels() != src.alphabet() || R.col_labels() != dst.alphabet()) {
        throw InputError(std::string(op) + ": R labels do not match the source and target alphabets");
    }
}

std::string describe_entry(const IntMatrix& m, std::size_t r, std::size_t c) {
    return "(" + m.row_labels()[r] + ", " + m.col_labels()[c] + ")";
}

// First differing entry, or nothing.
std::optional<std::string> first_difference(const IntMatrix& lhs, const IntMatrix& rhs) {
    for (std::size_t r = 0; r < lhs.rows(); ++r) {
        for (std::size_t c = 0; c < lhs.cols(); ++c) {
            if (lhs(r, c) != rhs(r, c)) {
                return "entry " + describe_entry(lhs, r, c) + ": " + lhs(r, c).get_str() + " vs " + rhs(r, c).get_str();
            }
        }
    }
    return std::nullopt;
}

void require_equal(const IntMatrix& lhs, const IntMatrix& rhs, const std::string& identity) {
    if (auto diff = first_difference(lhs, rhs)) throw CheckFailure(identity, *diff);
}

}  // namespace

IntMatrix link_matrix(const FlipPair& src, const FlipPair& dst, const std::vector<std::vector<Integer>>& rows) {
    return IntMatrix::from_rows(src.alphabet(), dst.alphabet(), rows);
}

IntMatrix derive_S(const FlipPair& src, const FlipPair& dst, const IntMatrix& R) {
    require_link_shape(src, dst, R, "derive_S");
    return mat_mul(mat_mul(dst.J(), R.transposed()), src.J());
}

IntMatrix derive_R(const FlipPair& src, const FlipPair& dst, const IntMatrix& S) {
    if (S.rows() != dst.size() || S.cols() != src.size() || S.row_labels() != dst.alphabet() ||
        S.col_labels() != src.alphabet()) {
        throw InputError("derive_R: S does not have shape |target| x |source| with matching labels");
    }
    return mat_mul(mat_mul(src.J(), S.transposed()), dst.J());
}

HalfElemCert he_check(const FlipPair& src, const FlipPair& dst, const IntMatrix& R,
                      const std::optional<IntMatrix>& supplied_S) {
    require_link_shape(src, dst, R, "he_check");
    if (!R.is_zero_one()) throw CheckFailure("R zero-one", "R has an entry outside {0, 1}");
    IntMatrix S = derive_S(src, dst, R);
    if (supplied_S) {
        if (supplied_S->rows() != S.rows() || supplied_S->cols() != S.cols()) {
            throw InputError("he_check: supplied S has the wrong shape");
        }
        require_equal(supplied_S->relabeled(S.row_labels(), S.col_labels()), S, "S = KR^TJ");
    }
    if (!S.is_zero_one()) throw CheckFailure("S zero-one", "derived S has an entry outside {0, 1}");
    require_equal(src.A(), mat_mul(R, S), "A = RS");
    require_equal(dst.A(), mat_mul(S, R), "B = SR");
    return {src, dst, R, std::move(S)};
}

std::vector<HalfElemCert> he_search(const FlipPair& src, const FlipPair& dst, std::size_t max_solutions,
                                    std::size_t cell_budget) {
    const std::size_t n = src.size();
    const std::size_t d = dst.size();
    if (n * d > cell_budget) {
        throw BudgetExceeded("he_search: " + std::to_string(n) + "x" + std::to_string(d) + " = " +
                             std::to_string(n * d) + " cells exceeds the budget of " + std::to_string(cell_budget));
    }
    if (d >= 63) throw BudgetExceeded("he_search: target alphabet too large");

    std::vector<HalfElemCert> found;
    if (max_solutions == 0) return found;

    // rows[a][b] = R(a, b). With S(b, a') = R(tau_J a', tau_K b):
    //   (RS)(x, tau_J y) = sum_b R(x, b) R(y, tau_K b)         (rows x, y)
    //   (SR)(b, b')      = sum_a R(tau_J a, tau_K b) R(a, b')  (rows a, tau_J a)
    std::vector<std::vector<int>> rows(n, std::vector<int>(d, 0));
    std::vector<char> assigned(n, 0);
    const auto A = [&](Symbol x, Symbol y) { return src.allowed(x, y) ? 1 : 0; };
    const auto B = [&](Symbol x, Symbol y) { return dst.allowed(x, y) ? 1 : 0; };

    const auto rs_entry = [&](Symbol x, Symbol y) {
        int sum = 0;
        for (Symbol b = 0; b < d; ++b) sum += rows[x][b] * rows[y][dst.tau(b)];
        return sum;
    };

    // sr[b][b'] partial sums over rows a whose partner tau_J a is assigned.
    std::vector<std::vector<int>> sr(d, std::vector<int>(d, 0));
    const auto add_sr_terms = [&](Symbol a, int sign) {
        const Symbol partner = src.tau(a);
        for (Symbol b = 0; b < d; ++b) {
            const int lhs = rows[partner][dst.tau(b)];
            if (lhs == 0) continue;
            for (Symbol b2 = 0; b2 < d; ++b2) sr[b][b2] += sign * lhs * rows[a][b2];
        }
    };

    const std::uint64_t row_count = std::uint64_t{1} << d;

    const auto consistent_after = [&](Symbol r) {
        for (Symbol y = 0; y < n; ++y) {
            if (!assigned[y]) continue;
            if (rs_entry(r, y) != A(r, src.tau(y))) return false;
            if (rs_entry(y, r) != A(y, src.tau(r))) return false;
        }
        for (Symbol b = 0; b < d; ++b)
            for (Symbol b2 = 0; b2 < d; ++b2)
                if (sr[b][b2] > B(b, b2)) return false;
        return true;
    };

    // Rows whose SR contribution becomes complete once r is assigned.
    const auto completed_by = [&](Symbol r) {
        std::vector<Symbol> out;
        out.push_back(r);
        const Symbol partner = src.tau(r);
        if (partner != r && assigned[partner]) out.push_back(partner);
        if (partner != r && !assigned[partner]) out.clear();
        return out;
    };

    const auto dfs = [&](auto&& self, Symbol r) -> void {
        if (found.size() >= max_solutions) return;
        if (r == n) {
            for (Symbol b = 0; b < d; ++b)
                for (Symbol b2 = 0; b2 < d; ++b2)
                    if (sr[b][b2] != B(b, b2)) return;
            std::vector<std::vector<Integer>> entries(n, std::vector<Integer>(d));
            for (Symbol a = 0; a < n; ++a)
                for (Symbol b = 0; b < d; ++b) entries[a][b] = rows[a][b];
            found.push_back(he_check(src, dst, link_matrix(src, dst, entries)));
            return;
        }
        for (std::uint64_t mask = 0; mask < row_count; ++mask) {
            for (Symbol b = 0; b < d; ++b) rows[r][b] = static_cast<int>((mask >> (d - 1 - b)) & 1U);
            assigned[r] = 1;
            const auto completed = completed_by(r);
            for (Symbol a : completed) add_sr_terms(a, +1);
            if (consistent_after(r)) self(self, r + 1);
            for (Symbol a : completed) add_sr_terms(a, -1);
            assigned[r] = 0;
            if (found.size() >= max_solutions) return;
        }
        std::fill(rows[r].begin(), rows[r].end(), 0);
    };
    dfs(dfs, 0);
    return found;
}

Symbol gamma_block(const HalfElemCert& cert, Symbol a1, Symbol a2) {
    const FlipPair& src = cert.source;
    if (a1 >= src.size() || a2 >= src.size()) throw InputError("gamma_block: symbol outside the source alphabet");
    if (!src.allowed(a1, a2)) {
        throw InputError("gamma_block: '" + src.alphabet()[a1] + " " + src.alphabet()[a2] + "' is not admissible");
    }
    for (Symbol b = 0; b < cert.target.size(); ++b) {
        if (cert.R(a1, b) == 1 && cert.S(b, a2) == 1) return b;
    }
    throw CheckFailure("A = RS", "no intermediate symbol for '" + src.alphabet()[a1] + " " + src.alphabet()[a2] + "'");
}

PeriodicPoint gamma_point(const HalfElemCert& cert, const PeriodicPoint& x) {
    PeriodicPoint y;
    y.symbols.reserve(x.period());
    for (std::size_t i = 0; i < x.period(); ++i) {
        y.symbols.push_back(gamma_block(cert, x.symbols[i], x.at(static_cast<long>(i) + 1)));
    }
    return y;
}

Prop22Report verify_prop22(const HalfElemCert& cert, std::size_t m_max) {
    Prop22Report report;
    EnumerationLimits limits;
    limits.max_period = std::max(limits.max_period, m_max);
    for (std::size_t m = 1; m <= m_max; ++m) {
        for (const PeriodicPoint& x : enumerate_periodic(cert.source.A(), m, limits)) {
            ++report.points_checked;
            PeriodicPoint lhs = gamma_point(cert, flip_point(cert.source, x));
            PeriodicPoint rhs = shift_point(flip_point(cert.target, gamma_point(cert, x)), 1);
            if (lhs != rhs) {
                report.counterexample = PointCounterexample{x, std::move(lhs), std::move(rhs)};
                return report;
            }
        }
    }
    return report;
}

StrongChain trivial_chain(const FlipPair& p) { return {{p}, {}}; }

StrongChain concat_chains(const StrongChain& head, const StrongChain& tail) {
    if (head.pairs.empty()) return tail;
    if (tail.pairs.empty()) return head;
    if (!(head.pairs.back() == tail.pairs.front())) {
        throw InputError("concat_chains: chains do not meet at a common pair");
    }
    StrongChain out = head;
    out.pairs.insert(out.pairs.end(), tail.pairs.begin() + 1, tail.pairs.end());
    out.links.insert(out.links.end(), tail.links.begin(), tail.links.end());
    return out;
}

StrongChain reversed_chain(const StrongChain& chain) {
    StrongChain out;
    out.pairs.assign(chain.pairs.rbegin(), chain.pairs.rend());
    for (auto it = chain.links.rbegin(); it != chain.links.rend(); ++it) {
        out.links.push_back({it->target, it->source, it->S, it->R});
    }
    return out;
}

SseReport sse_verify(const StrongChain& chain) {
    SseReport report;
    report.lag = chain.lag();
    if (chain.pairs.size() != chain.links.size() + 1) {
        report.failure = "chain has " + std::to_string(chain.pairs.size()) + " pairs for " +
                         std::to_string(chain.links.size()) + " links";
        return report;
    }
    for (std::size_t i = 0; i < chain.links.size(); ++i) {
        try {
            he_check(chain.pairs[i], chain.pairs[i + 1], chain.links[i].R, chain.links[i].S);
        } catch (const CheckFailure& e) {
            report.failed_link = i;
            report.failure = e.what();
            return report;
        } catch (const InputError& e) {
            report.failed_link = i;
            report.failure = e.what();
            return report;
        }
    }
    report.passed = true;
    report.conclusion = report.lag % 2 == 0
                            ? "even lag: (X_A, sigma_A, phi_{J,A}) is conjugate to (X_B, sigma_B, phi_{K,B})"
                            : "odd lag: (X_A, sigma_A, phi_{J,A}) is conjugate to (X_B, sigma_B, sigma_B o phi_{K,B})";
    return report;
}

PeriodicPoint chain_gamma(const StrongChain& chain, const PeriodicPoint& x) {
    PeriodicPoint y = x;
    for (const HalfElemCert& link : chain.links) y = gamma_point(link, y);
    return y;
}

ShiftFlipCert sfe_check(const FlipPair& src, const FlipPair& dst, const IntMatrix& R, std::size_t lag,
                        const std::optional<IntMatrix>& supplied_S) {
    require_link_shape(src, dst, R, "sfe_check");
    if (lag == 0) throw InputError("sfe_check: lag must be at least 1");
    if (!R.is_nonnegative()) throw CheckFailure("R nonnegative", "R has a negative entry");
    IntMatrix S = derive_S(src, dst, R);
    if (supplied_S) {
        if (supplied_S->rows() != S.rows() || supplied_S->cols() != S.cols()) {
            throw InputError("sfe_check: supplied S has the wrong shape");
        }
        require_equal(supplied_S->relabeled(S.row_labels(), S.col_labels()), S, "S = KR^TJ");
    }
    require_equal(mat_pow(src.A(), lag), mat_mul(R, S), "A^k = RS");
    require_equal(mat_pow(dst.A(), lag), mat_mul(S, R), "B^k = SR");
    require_equal(mat_mul(src.A(), R), mat_mul(R, dst.A()), "AR = RB");
    if (first_difference(mat_mul(S, src.A()), mat_mul(dst.A(), S))) {
        throw std::logic_error("sfe_check: SA != BS although AR = RB and S = KR^TJ hold");
    }
    return {src, dst, R, std::move(S), lag};
}

namespace {

class SfeSearch {
public:
    SfeSearch(const FlipPair& src, const FlipPair& dst, std::size_t lag, const SfeSearchOptions& options,
              std::size_t& nodes, std::vector<ShiftFlipCert>& found)
        : src_(src), dst_(dst), lag_(lag), options_(options), nodes_(nodes), found_(found) {
        n_ = src.size();
        d_ = dst.size();
        target_rkr_ = to_long(mat_mul(mat_pow(src.A(), lag), src.J()));  // R K R^T = A^k J
        target_rjr_ = to_long(mat_mul(dst.J(), mat_pow(dst.A(), lag)));  // R^T J R = K B^k
        a_ = to_long(src.A());
        b_ = to_long(dst.A());
        rows_.assign(n_, std::vector<long>(d_, 0));
        assigned_.assign(n_, 0);
        rjr_.assign(d_, std::vector<long>(d_, 0));
        // AR = RB on row a can be checked once a and all of its successors are set.
        ar_ready_at_.assign(n_, {});
        for (Symbol a = 0; a < n_; ++a) {
            Symbol last = a;
            for (Symbol c = 0; c < n_; ++c)
                if (a_[a][c] != 0) last = std::max(last, c);
            ar_ready_at_[last].push_back(a);
        }
        build_candidates();
    }

    void run() { dfs(0); }

private:
    static std::vector<std::vector<long>> to_long(const IntMatrix& m) {
        std::vector<std::vector<long>> out(m.rows(), std::vector<long>(m.cols()));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) {
                if (!m(r, c).fits_slong_p()) throw BudgetExceeded("sfe_bounded_search: matrix entries too large");
                out[r][c] = m(r, c).get_si();
            }
        return out;
    }

    long rkr(const std::vector<long>& x, const std::vector<long>& y) const {
        long sum = 0;
        for (Symbol b = 0; b < d_; ++b) sum += x[b] * y[dst_.tau(b)];
        return sum;
    }

    void build_candidates() {
        candidates_.assign(n_, {});
        std::vector<long> v(d_, 0);
        const auto enumerate = [&](auto&& self, std::size_t pos) -> void {
            if (pos == d_) {
                for (Symbol a = 0; a < n_; ++a)
                    if (rkr(v, v) == target_rkr_[a][a]) candidates_[a].push_back(v);
                return;
            }
            for (long e = 0; e <= static_cast<long>(options_.entry_max); ++e) {
                v[pos] = e;
                self(self, pos + 1);
            }
        };
        enumerate(enumerate, 0);
    }

    void add_rjr(Symbol a, long sign) {
        const Symbol partner = src_.tau(a);
        for (Symbol b = 0; b < d_; ++b) {
            if (rows_[a][b] == 0) continue;
            for (Symbol b2 = 0; b2 < d_; ++b2) rjr_[b][b2] += sign * rows_[a][b] * rows_[partner][b2];
        }
    }

    bool consistent(Symbol r) const {
        for (Symbol y = 0; y < r; ++y) {
            if (rkr(rows_[r], rows_[y]) != target_rkr_[r][y]) return false;
            if (rkr(rows_[y], rows_[r]) != target_rkr_[y][r]) return false;
        }
        for (Symbol a : ar_ready_at_[r]) {
            for (Symbol b = 0; b < d_; ++b) {
                long ar = 0;
                long rb = 0;
                for (Symbol c = 0; c < n_; ++c) ar += a_[a][c] * rows_[c][b];
                for (Symbol c = 0; c < d_; ++c) rb += rows_[a][c] * b_[c][b];
                if (ar != rb) return false;
            }
        }
        for (Symbol b = 0; b < d_; ++b)
            for (Symbol b2 = 0; b2 < d_; ++b2)
                if (rjr_[b][b2] > target_rjr_[b][b2]) return false;
        return true;
    }

    void dfs(Symbol r) {
        if (found_.size() >= options_.max_solutions) return;
        if (r == n_) {
            if (rjr_ != target_rjr_) return;
            std::vector<std::vector<Integer>> entries(n_, std::vector<Integer>(d_));
            for (Symbol a = 0; a < n_; ++a)
                for (Symbol b = 0; b < d_; ++b) entries[a][b] = rows_[a][b];
            found_.push_back(sfe_check(src_, dst_, link_matrix(src_, dst_, entries), lag_));
            return;
        }
        for (const auto& candidate : candidates_[r]) {
            if (++nodes_ > options_.node_budget) {
                throw BudgetExceeded("sfe_bounded_search: node budget of " + std::to_string(options_.node_budget) +
                                     " exhausted");
            }
            rows_[r] = candidate;
            assigned_[r] = 1;
            // rjr sums terms R(a, b) R(tau_J a, b'); a term is final once both rows exist.
            std::vector<Symbol> completed;
            const Symbol partner = src_.tau(r);
            if (partner == r) {
                completed.push_back(r);
            } else if (assigned_[partner]) {
                completed = {r, partner};
            }
            for (Symbol a : completed) add_rjr(a, +1);
            if (consistent(r)) dfs(r + 1);
            for (Symbol a : completed) add_rjr(a, -1);
            assigned_[r] = 0;
            if (found_.size() >= options_.max_solutions) return;
        }
        std::fill(rows_[r].begin(), rows_[r].end(), 0);
    }

    const FlipPair& src_;
    const FlipPair& dst_;
    std::size_t lag_;
    const SfeSearchOptions& options_;
    std::size_t& nodes_;
    std::vector<ShiftFlipCert>& found_;

    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<std::vector<long>> target_rkr_;
    std::vector<std::vector<long>> target_rjr_;
    std::vector<std::vector<long>> a_;
    std::vector<std::vector<long>> b_;
    std::vector<std::vector<long>> rows_;
    std::vector<char> assigned_;
    std::vector<std::vector<long>> rjr_;
    std::vector<std::vector<Symbol>> ar_ready_at_;
    std::vector<std::vector<std::vector<long>>> candidates_;
};

}  // namespace

std::vector<ShiftFlipCert> sfe_bounded_search(const FlipPair& src, const FlipPair& dst,
                                              const SfeSearchOptions& options) {
    if (options.lag_max == 0) throw InputError("sfe_bounded_search: lag_max must be at least 1");
    // (entry_max + 1)^|dst| candidate rows are materialized up front.
    double row_space = 1;
    for (std::size_t i = 0; i < dst.size(); ++i) row_space *= static_cast<double>(options.entry_max + 1);
    if (row_space > static_cast<double>(options.node_budget)) {
        throw BudgetExceeded("sfe_bounded_search: " + std::to_string(options.entry_max + 1) + "^" +
                             std::to_string(dst.size()) + " candidate rows exceed the node budget");
    }
    std::vector<ShiftFlipCert> found;
    std::size_t nodes = 0;
    for (std::size_t lag = 1; lag <= options.lag_max && found.size() < options.max_solutions; ++lag) {
        SfeSearch(src, dst, lag, options, nodes, found).run();
    }
    return found;
}

}  // namespace shiftflip
