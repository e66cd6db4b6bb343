#include "shiftflip/markov_shift.hpp"

#include <algorithm>

#include "shiftflip/error.hpp"

namespace shiftflip {

TransitionGraph::TransitionGraph(const IntMatrix& A) {
    if (!A.is_square()) throw InputError("transition matrix is not square");
    if (!A.is_zero_one()) throw InputError("transition matrix is not zero-one");
    const std::size_t n = A.rows();
    allowed_.resize(n * n);
    successors_.resize(n);
    for (Symbol a = 0; a < n; ++a) {
        for (Symbol b = 0; b < n; ++b) {
            if (A(a, b) == 1) {
                allowed_[a * n + b] = 1;
                successors_[a].push_back(b);
            }
        }
    }

    // Strip symbols without a live successor or predecessor until stable.
    essential_.assign(n, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<char> has_in(n, 0);
        std::vector<char> has_out(n, 0);
        for (Symbol a = 0; a < n; ++a) {
            if (!essential_[a]) continue;
            for (Symbol b : successors_[a]) {
                if (essential_[b]) {
                    has_out[a] = 1;
                    has_in[b] = 1;
                }
            }
        }
        for (Symbol a = 0; a < n; ++a) {
            if (essential_[a] && !(has_in[a] && has_out[a])) {
                essential_[a] = 0;
                changed = true;
            }
        }
    }
}

bool TransitionGraph::is_essential() const {
    return std::all_of(essential_.begin(), essential_.end(), [](char e) { return e != 0; });
}

bool is_essential(const IntMatrix& A) { return TransitionGraph(A).is_essential(); }

namespace {

void extend_blocks(const TransitionGraph& g, std::size_t n, Word& prefix, std::vector<Word>& out) {
    if (prefix.size() == n) {
        out.push_back(prefix);
        return;
    }
    for (Symbol b : g.successors(prefix.back())) {
        if (!g.essential()[b]) continue;
        prefix.push_back(b);
        extend_blocks(g, n, prefix, out);
        prefix.pop_back();
    }
}

void extend_cycles(const TransitionGraph& g, std::size_t m, Word& prefix, std::vector<PeriodicPoint>& out) {
    if (prefix.size() == m) {
        if (g.allowed(prefix.back(), prefix.front())) out.push_back({prefix});
        return;
    }
    for (Symbol b : g.successors(prefix.back())) {
        if (!g.essential()[b]) continue;
        prefix.push_back(b);
        extend_cycles(g, m, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Word> blocks(const IntMatrix& A, std::size_t n) {
    if (n == 0) throw InputError("blocks: length must be at least 1");
    const TransitionGraph g(A);
    std::vector<Word> out;
    Word prefix;
    for (Symbol a = 0; a < g.size(); ++a) {
        if (!g.essential()[a]) continue;
        prefix.assign(1, a);
        extend_blocks(g, n, prefix, out);
    }
    return out;
}

bool is_admissible(const TransitionGraph& g, const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] >= g.size() || !g.essential()[w[i]]) return false;
        if (i + 1 < w.size() && !g.allowed(w[i], w[i + 1])) return false;
    }
    return true;
}

Word reverse_word(const Word& w) { return {w.rbegin(), w.rend()}; }

Word left(const Word& w) {
    if (w.empty()) throw InputError("left: empty word");
    return {w.begin(), w.end() - 1};
}

Word right(const Word& w) {
    if (w.empty()) throw InputError("right: empty word");
    return {w.begin() + 1, w.end()};
}

Symbol initial(const Word& w) {
    if (w.empty()) throw InputError("initial: empty word");
    return w.front();
}

Symbol terminal(const Word& w) {
    if (w.empty()) throw InputError("terminal: empty word");
    return w.back();
}

Symbol center(const Word& w) {
    if (w.size() % 2 == 0) throw InputError("center: word length " + std::to_string(w.size()) + " is even");
    return w[w.size() / 2];
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Symbol PeriodicPoint::at(long i) const { return symbols[static_cast<std::size_t>(normalize_shift(i, period()))]; }

std::vector<PeriodicPoint> enumerate_periodic(const IntMatrix& A, std::size_t m, const EnumerationLimits& limits) {
    if (m == 0) throw InputError("enumerate_periodic: period must be at least 1");
    if (m > limits.max_period) {
        throw InputError("enumerate_periodic: period " + std::to_string(m) + " exceeds the cap " +
                         std::to_string(limits.max_period));
    }
    const TransitionGraph g(A);
    std::vector<PeriodicPoint> out;
    Word prefix;
    for (Symbol a = 0; a < g.size(); ++a) {
        if (!g.essential()[a]) continue;
        prefix.assign(1, a);
        extend_cycles(g, m, prefix, out);
    }
    return out;
}

long normalize_shift(long n, std::size_t m) {
    if (m == 0) throw InputError("normalize_shift: zero period");
    const long mod = static_cast<long>(m);
    return ((n % mod) + mod) % mod;
}

PeriodicPoint shift_point(const PeriodicPoint& x, long k) {
    PeriodicPoint y;
    y.symbols.reserve(x.period());
    for (std::size_t i = 0; i < x.period(); ++i) y.symbols.push_back(x.at(static_cast<long>(i) + k));
    return y;
}

PeriodicPoint flip_point(const FlipPair& p, const PeriodicPoint& x) {
    PeriodicPoint y;
    y.symbols.reserve(x.period());
    for (std::size_t i = 0; i < x.period(); ++i) y.symbols.push_back(p.tau(x.at(-static_cast<long>(i))));
    return y;
}

bool fixed_by_shifted_flip(const FlipPair& p, const PeriodicPoint& x, long n) {
    for (std::size_t i = 0; i < x.period(); ++i) {
        if (p.tau(x.at(-static_cast<long>(i) - n)) != x.symbols[i]) return false;
    }
    return true;
}

std::size_t count_pmn_bruteforce(const FlipPair& p, std::size_t m, long n, const EnumerationLimits& limits) {
    const long shift = normalize_shift(n, m == 0 ? 1 : m);
    const auto points = enumerate_periodic(p.A(), m, limits);
    return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [&](const PeriodicPoint& x) {
        return fixed_by_shifted_flip(p, x, shift);
    }));
}

}  // namespace shiftflip
