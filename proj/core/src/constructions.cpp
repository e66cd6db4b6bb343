#include "shiftflip/constructions.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "shiftflip/error.hpp"

namespace shiftflip {

namespace {

void require_essential(const FlipPair& p, const char* op) {
    if (!is_essential(p.A())) {
        throw InputError(std::string(op) + ": pair '" + p.name() + "' has stranded symbols (not essential)");
    }
}

std::map<Word, std::size_t> index_words(const std::vector<Word>& words) {
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
    return index;
}

// s and s2 (equal length) are consecutive symbols of the higher block shift:
// they overlap in all but one symbol and the joining edge is allowed.
bool consecutive(const TransitionGraph& g, const Word& s, const Word& s2) {
    if (!g.allowed(terminal(s), terminal(s2))) return false;
    return std::equal(s.begin() + 1, s.end(), s2.begin(), s2.end() - 1);
}

Word window(const PeriodicPoint& x, long from, long to) {
    Word w;
    for (long i = from; i <= to; ++i) w.push_back(x.at(i));
    return w;
}

Word map_word(const SymbolMap& f, const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Symbol a : w) out.push_back(f(a));
    return out;
}

// tau applied symbol-wise to the reverse of w.
Word flip_with(const SymbolMap& tau, const Word& w) {
    Word out = map_word(tau, w);
    std::reverse(out.begin(), out.end());
    return out;
}

// Restricts a square zero-one system to its essential symbols.
std::vector<std::size_t> essential_indices(const IntMatrix& A) {
    const TransitionGraph g(A);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.essential()[i]) keep.push_back(i);
    return keep;
}

IntMatrix restrict_square(const IntMatrix& m, const std::vector<std::size_t>& keep, const Labels& labels) {
    IntMatrix out(labels, labels);
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < keep.size(); ++c) out(r, c) = m(keep[r], keep[c]);
    return out;
}

}  // namespace

std::string block_label(const Labels& alphabet, const Word& w) {
    const bool single = std::all_of(alphabet.begin(), alphabet.end(), [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !single) out += '.';
        out += alphabet.at(w[i]);
    }
    return out;
}

FlipPair block_pair(const FlipPair& p, std::size_t k) {
    if (k == 0) throw InputError("block_pair: block length must be at least 1");
    require_essential(p, "block_pair");
    const TransitionGraph g(p.A());
    const std::vector<Word> words = blocks(p.A(), k);
    const auto index = index_words(words);
    Labels labels;
    for (const Word& w : words) labels.push_back(block_label(p.alphabet(), w));

    IntMatrix A(labels, labels);
    IntMatrix J(labels, labels);
    for (std::size_t u = 0; u < words.size(); ++u) {
        for (std::size_t v = 0; v < words.size(); ++v) {
            if (consecutive(g, words[u], words[v])) A(u, v) = 1;
        }
        J(u, index.at(flip_word(p, words[u]))) = 1;
    }
    return validate_flip_pair(std::move(A), std::move(J), k == 1 ? p.name() : p.name() + "[" + std::to_string(k) + "]");
}

HigherBlockResult higher_block(const FlipPair& p, std::size_t n) {
    require_essential(p, "higher_block");
    HigherBlockResult result{p, trivial_chain(p), {blocks(p.A(), 1)}};
    if (p.size() == 0) return result;
    for (std::size_t k = 1; k <= n; ++k) {
        const FlipPair& lower = result.chain.pairs.back();
        FlipPair upper = block_pair(p, k + 1);
        const std::vector<Word>& short_words = result.level_blocks.back();
        std::vector<Word> long_words = blocks(p.A(), k + 1);
        const auto short_index = index_words(short_words);

        IntMatrix R(lower.alphabet(), upper.alphabet());
        IntMatrix S(upper.alphabet(), lower.alphabet());
        for (std::size_t v = 0; v < long_words.size(); ++v) {
            R(short_index.at(left(long_words[v])), v) = 1;
            S(v, short_index.at(right(long_words[v]))) = 1;
        }
        HalfElemCert link = he_check(lower, upper, R, S);
        result.chain.links.push_back(std::move(link));
        result.chain.pairs.push_back(upper);
        result.level_blocks.push_back(std::move(long_words));
    }
    result.pair = result.chain.pairs.back();
    return result;
}

// ---------------------------------------------------------------------------

PeriodicPoint apply_block_flip(const BlockFlipSpec& spec, const PeriodicPoint& x) {
    const long n = static_cast<long>(spec.window);
    PeriodicPoint y;
    for (long i = 0; i < static_cast<long>(x.period()); ++i) {
        const Word w = window(x, -i - n, -i + n);
        auto it = spec.phi.find(w);
        if (it == spec.phi.end()) throw InputError("block flip undefined on a window of the point");
        y.symbols.push_back(it->second);
    }
    return y;
}

PeriodicPoint apply_block_map(const BlockMap& map, const PeriodicPoint& x) {
    PeriodicPoint y;
    const long memory = static_cast<long>(map.memory);
    const long anticipation = static_cast<long>(map.anticipation);
    for (long i = 0; i < static_cast<long>(x.period()); ++i) {
        auto it = map.table.find(window(x, i - memory, i + anticipation));
        if (it == map.table.end()) throw InputError("block map undefined on a window of the point");
        y.symbols.push_back(it->second);
    }
    return y;
}

void validate_block_flip(const BlockFlipSpec& spec, std::size_t check_period) {
    const TransitionGraph g(spec.A);
    const std::size_t width = 2 * spec.window + 1;
    const auto domain = blocks(spec.A, width);
    const std::set<Word> admissible(domain.begin(), domain.end());
    for (const Word& w : domain) {
        if (!spec.phi.contains(w)) throw InputError("phi is not defined on an admissible block of length " + std::to_string(width));
    }
    for (const auto& [w, image] : spec.phi) {
        if (!admissible.contains(w)) throw InputError("phi is defined on a word that is not an admissible block");
        if (image >= g.size()) throw InputError("phi image outside the alphabet");
    }

    EnumerationLimits limits;
    limits.max_period = std::max(limits.max_period, check_period);
    for (std::size_t m = 1; m <= check_period; ++m) {
        for (const PeriodicPoint& x : enumerate_periodic(spec.A, m, limits)) {
            const PeriodicPoint y = apply_block_flip(spec, x);
            for (long i = 0; i < static_cast<long>(m); ++i) {
                if (!g.allowed(y.at(i), y.at(i + 1))) {
                    throw CheckFailure("phi(X_A) in X_A", "image of a period-" + std::to_string(m) + " point is not in X_A");
                }
            }
            if (apply_block_flip(spec, y) != x) {
                throw CheckFailure("phi^2 = id", "phi is not an involution on a period-" + std::to_string(m) + " point");
            }
            if (shift_point(y, 1) != apply_block_flip(spec, shift_point(x, -1))) {
                throw CheckFailure("sigma phi = phi sigma^-1", "fails on a period-" + std::to_string(m) + " point");
            }
        }
    }
}

BuiltFlipPair build_flip_pair(const BlockFlipSpec& spec, std::size_t check_period) {
    validate_block_flip(spec, check_period);
    const std::size_t n = spec.window;
    const TransitionGraph g(spec.A);

    // A window w = x_{[-2n, 2n]} determines u = x_{[-n, n]} and
    // v = reverse(phi(x)_{[-n, n]}), whose k-th symbol is Phi(w[k .. k+2n]).
    std::map<Word, std::pair<Word, Word>> letter_of_window;
    std::set<std::pair<Word, Word>> realized;
    for (const Word& w : blocks(spec.A, 4 * n + 1)) {
        Word u(w.begin() + static_cast<long>(n), w.begin() + static_cast<long>(3 * n + 1));
        Word v;
        for (std::size_t k = 0; k <= 2 * n; ++k) {
            v.push_back(spec.phi.at(Word(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k + 2 * n + 1))));
        }
        realized.emplace(u, v);
        letter_of_window.emplace(w, std::make_pair(std::move(u), std::move(v)));
    }
    const std::vector<std::pair<Word, Word>> candidates(realized.begin(), realized.end());
    std::map<std::pair<Word, Word>, std::size_t> candidate_index;
    for (std::size_t i = 0; i < candidates.size(); ++i) candidate_index.emplace(candidates[i], i);

    const Labels& base = spec.A.row_labels();
    Labels raw_labels;
    for (const auto& [u, v] : candidates) raw_labels.push_back(block_label(base, u) + "|" + block_label(base, v));

    IntMatrix A(raw_labels, raw_labels);
    IntMatrix J(raw_labels, raw_labels);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
        const auto& [u, v] = candidates[a];
        for (std::size_t b = 0; b < candidates.size(); ++b) {
            const auto& [u2, v2] = candidates[b];
            // Overlap rule plus the joining edges (needed when n = 0, implied otherwise).
            // The v-words read phi(x) backwards, hence the reversed edge.
            if (right(u) == left(u2) && right(v) == left(v2) && g.allowed(terminal(u), terminal(u2)) &&
                g.allowed(terminal(v2), terminal(v))) {
                A(a, b) = 1;
            }
            if (reverse_word(v) == u2 && reverse_word(v2) == u) J(a, b) = 1;
        }
    }

    const auto keep = essential_indices(A);
    Labels labels;
    std::vector<std::pair<Word, Word>> letters;
    std::map<std::size_t, Symbol> new_index;
    for (std::size_t i : keep) {
        new_index.emplace(i, labels.size());
        labels.push_back(raw_labels[i]);
        letters.push_back(candidates[i]);
    }
    BuiltFlipPair out{validate_flip_pair(restrict_square(A, keep, labels), restrict_square(J, keep, labels), "built"),
                      BlockMap{2 * n, 2 * n, {}}, std::move(letters)};
    for (const auto& [w, letter] : letter_of_window) {
        auto it = new_index.find(candidate_index.at(letter));
        if (it != new_index.end()) out.theta.table.emplace(w, it->second);
    }
    return out;
}

// ---------------------------------------------------------------------------

PeriodicPoint apply_one_block(const SymbolMap& psi, const PeriodicPoint& x) { return {map_word(psi, x.symbols)}; }

void validate_conjugacy(const OneBlockConjugacySpec& spec, std::size_t check_period) {
    const FlipPair& src = spec.source;
    const FlipPair& dst = spec.target;
    require_essential(src, "validate_conjugacy");
    require_essential(dst, "validate_conjugacy");
    if (spec.psi.size() != src.size()) throw InputError("psi must be defined on every source symbol");
    for (Symbol b : spec.psi.image()) {
        if (b >= dst.size()) throw InputError("psi image outside the target alphabet");
    }
    for (Symbol a = 0; a < src.size(); ++a) {
        if (spec.psi(src.tau(a)) != dst.tau(spec.psi(a))) {
            throw CheckFailure("psi tau_J = tau_K psi", "fails at symbol '" + src.alphabet()[a] + "'");
        }
        for (Symbol b = 0; b < src.size(); ++b) {
            if (src.allowed(a, b) && !dst.allowed(spec.psi(a), spec.psi(b))) {
                throw CheckFailure("psi(X_A) in X_B", "edge " + src.alphabet()[a] + " " + src.alphabet()[b] + " is not mapped to an edge");
            }
        }
    }

    const std::size_t width = 2 * spec.inverse_window + 1;
    std::map<Word, Symbol> inverse;
    for (const Word& u : blocks(src.A(), width)) {
        const Word image = map_word(spec.psi, u);
        auto [it, inserted] = inverse.emplace(image, center(u));
        if (!inserted && it->second != center(u)) {
            throw CheckFailure("inverse window", "the window " + dst.format_word(image) + " has two preimage centres");
        }
    }
    for (const Word& w : blocks(dst.A(), width)) {
        if (!inverse.contains(w)) throw CheckFailure("psi onto", "block " + dst.format_word(w) + " has no preimage");
    }

    EnumerationLimits limits;
    limits.max_period = std::max(limits.max_period, check_period);
    for (std::size_t m = 1; m <= check_period; ++m) {
        std::set<PeriodicPoint> images;
        for (const PeriodicPoint& x : enumerate_periodic(src.A(), m, limits)) {
            if (!images.insert(apply_one_block(spec.psi, x)).second) {
                throw CheckFailure("psi bijective", "two period-" + std::to_string(m) + " points share an image");
            }
        }
        if (images.size() != enumerate_periodic(dst.A(), m, limits).size()) {
            throw CheckFailure("psi bijective", "period-" + std::to_string(m) + " point counts differ");
        }
    }
}

namespace {

struct Triple {
    Word u;
    Word w;
    Word v;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct Level {
    std::vector<Triple> letters;
    std::vector<Word> words;  // u Psi(w) v over the target alphabet
    FlipPair pair;
};

Level build_level(const OneBlockConjugacySpec& spec, std::size_t k) {
    const FlipPair& src = spec.source;
    const FlipPair& dst = spec.target;
    const std::size_t i = (k - 1) / 2;
    const std::size_t j = k - 2 * i;

    std::map<Word, std::vector<Word>> preimages;
    for (const Word& w : blocks(src.A(), j)) preimages[map_word(spec.psi, w)].push_back(w);

    std::vector<Triple> candidates;
    for (const Word& y : blocks(dst.A(), k)) {
        const Word mid(y.begin() + static_cast<long>(i), y.begin() + static_cast<long>(i + j));
        auto it = preimages.find(mid);
        if (it == preimages.end()) continue;
        for (const Word& w : it->second) {
            candidates.push_back({Word(y.begin(), y.begin() + static_cast<long>(i)), w,
                                  Word(y.begin() + static_cast<long>(i + j), y.end())});
        }
    }
    std::sort(candidates.begin(), candidates.end());
    std::map<Triple, std::size_t> index;
    for (std::size_t c = 0; c < candidates.size(); ++c) index.emplace(candidates[c], c);

    const TransitionGraph gA(src.A());
    const TransitionGraph gB(dst.A());
    const auto word_of = [&](const Triple& t) { return concat(concat(t.u, map_word(spec.psi, t.w)), t.v); };

    const Labels raw = numbered_labels(candidates.size());
    IntMatrix C(raw, raw);
    IntMatrix L(raw, raw);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
        const Triple& s = candidates[a];
        const Word ws = word_of(s);
        for (std::size_t b = 0; b < candidates.size(); ++b) {
            const Triple& s2 = candidates[b];
            if (consecutive(gB, ws, word_of(s2)) && consecutive(gA, s.w, s2.w)) C(a, b) = 1;
        }
        // u' = tau_K~(v), w' = tau_J~(w), v' = tau_K~(u)
        const Triple flipped{flip_with(dst.tau(), s.v), flip_with(src.tau(), s.w), flip_with(dst.tau(), s.u)};
        auto it = index.find(flipped);
        if (it != index.end()) L(a, it->second) = 1;
    }

    const auto keep = essential_indices(C);
    Level level;
    Labels labels;
    for (std::size_t c : keep) {
        const Triple& t = candidates[c];
        level.letters.push_back(t);
        level.words.push_back(word_of(t));
        labels.push_back(k == 1 ? src.alphabet()[t.w.front()]
                                : block_label(dst.alphabet(), t.u) + "|" + block_label(src.alphabet(), t.w) + "|" +
                                      block_label(dst.alphabet(), t.v));
    }
    try {
        level.pair = validate_flip_pair(restrict_square(C, keep, labels), restrict_square(L, keep, labels),
                                        k == 1 ? src.name() : "C" + std::to_string(k));
    } catch (const CheckFailure& e) {
        throw CheckFailure("flip pair (C_k, L_k)", "k = " + std::to_string(k) + ": " + e.what());
    }
    return level;
}

// D_k(s, t) = 1 iff word(s) = l(word(t)) and t(w_s) = i(w_t).
// E_k(t, s) = 1 iff r(word(t)) = word(s) and t(w_t) = i(w_s).
std::pair<IntMatrix, IntMatrix> level_link(const Level& lower, const Level& upper) {
    IntMatrix D(lower.pair.alphabet(), upper.pair.alphabet());
    IntMatrix E(upper.pair.alphabet(), lower.pair.alphabet());
    for (std::size_t s = 0; s < lower.letters.size(); ++s) {
        for (std::size_t t = 0; t < upper.letters.size(); ++t) {
            const Triple& ls = lower.letters[s];
            const Triple& ut = upper.letters[t];
            if (lower.words[s] == left(upper.words[t]) && terminal(ls.w) == initial(ut.w)) D(s, t) = 1;
            if (right(upper.words[t]) == lower.words[s] && terminal(ut.w) == initial(ls.w)) E(t, s) = 1;
        }
    }
    return {std::move(D), std::move(E)};
}

}  // namespace

Decomposition decompose_conjugacy(const OneBlockConjugacySpec& spec, std::size_t check_period) {
    validate_conjugacy(spec, check_period);
    const std::size_t m = spec.inverse_window;
    const std::size_t top = 2 * m + 1;

    std::vector<Level> levels;
    for (std::size_t k = 1; k <= top; ++k) levels.push_back(build_level(spec, k));

    Decomposition result;
    for (const Level& level : levels) result.level_sizes.push_back(level.letters.size());

    if (!(levels.front().pair.A() == spec.source.A()) || !(levels.front().pair.J() == spec.source.J())) {
        throw CheckFailure("C_1 = A, L_1 = J", "the first level does not reproduce the source pair");
    }

    // Identify the top level with the (2m+1)-block pair of the target through
    // (u, w, v) -> u Psi(w) v.
    const HigherBlockResult target_blocks = higher_block(spec.target, 2 * m);
    const auto block_index = index_words(target_blocks.level_blocks.back());
    const Level& top_level = levels.back();
    std::vector<Symbol> recode(top_level.letters.size());
    std::vector<char> hit(target_blocks.pair.size(), 0);
    if (recode.size() != target_blocks.pair.size()) {
        throw CheckFailure("recoding", "level " + std::to_string(top) + " has " + std::to_string(recode.size()) +
                                           " symbols, the target block pair has " + std::to_string(target_blocks.pair.size()));
    }
    for (std::size_t s = 0; s < recode.size(); ++s) {
        auto it = block_index.find(top_level.words[s]);
        if (it == block_index.end() || hit[it->second]) {
            throw CheckFailure("recoding", "(u, w, v) -> u Psi(w) v is not a bijection onto target blocks");
        }
        hit[it->second] = 1;
        recode[s] = it->second;
    }
    const FlipPair recoded = permute_pair(top_level.pair, recode, target_blocks.pair.alphabet());
    if (!(recoded.A() == target_blocks.pair.A()) || !(recoded.J() == target_blocks.pair.J())) {
        throw CheckFailure("recoding", "level " + std::to_string(top) + " is not isomorphic to the target's block pair");
    }

    StrongChain chain = trivial_chain(levels.front().pair);
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
        auto [D, E] = level_link(levels[k], levels[k + 1]);
        const bool last = k + 2 == levels.size();
        const FlipPair& next = last ? target_blocks.pair : levels[k + 1].pair;
        if (last) {
            IntMatrix D2(levels[k].pair.alphabet(), next.alphabet());
            for (std::size_t r = 0; r < D.rows(); ++r)
                for (std::size_t c = 0; c < D.cols(); ++c) D2(r, recode[c]) = D(r, c);
            D = std::move(D2);
            IntMatrix E2(next.alphabet(), levels[k].pair.alphabet());
            for (std::size_t r = 0; r < E.rows(); ++r)
                for (std::size_t c = 0; c < E.cols(); ++c) E2(recode[r], c) = E(r, c);
            E = std::move(E2);
        }
        try {
            chain.links.push_back(he_check(chain.pairs.back(), next, D, E));
        } catch (const CheckFailure& e) {
            throw CheckFailure("link (D_k, E_k)", "k = " + std::to_string(k + 1) + ": " + e.what());
        }
        chain.pairs.push_back(next);
    }

    if (m == 0) {
        result.chain = std::move(chain);
        result.terminal_relabel = recode;
    } else {
        result.chain = concat_chains(chain, reversed_chain(target_blocks.chain));
        result.terminal_relabel.resize(spec.target.size());
        for (Symbol b = 0; b < spec.target.size(); ++b) result.terminal_relabel[b] = b;
    }
    result.shift = 2 * m;

    EnumerationLimits limits;
    limits.max_period = std::max(limits.max_period, check_period);
    for (std::size_t p = 1; p <= check_period; ++p) {
        for (const PeriodicPoint& x : enumerate_periodic(spec.source.A(), p, limits)) {
            if (decomposition_gamma(result, x) != shift_point(apply_one_block(spec.psi, x), static_cast<long>(result.shift))) {
                throw CheckFailure("composed gamma = sigma^{2m} psi",
                                   "fails on the point " + spec.source.format_word(x.symbols));
            }
        }
    }
    return result;
}

PeriodicPoint decomposition_gamma(const Decomposition& d, const PeriodicPoint& x) {
    PeriodicPoint y = chain_gamma(d.chain, x);
    for (Symbol& s : y.symbols) s = d.terminal_relabel.at(s);
    return y;
}

}  // namespace shiftflip
