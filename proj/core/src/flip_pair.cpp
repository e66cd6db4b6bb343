#include "shiftflip/flip_pair.hpp"

#include <algorithm>
#include <sstream>

#include "shiftflip/error.hpp"

namespace shiftflip {

SymbolMap::SymbolMap(std::vector<Symbol> image) : image_(std::move(image)) {
    for (Symbol s : image_) {
        if (s >= image_.size()) throw InputError("symbol map image out of range");
    }
}

bool SymbolMap::is_involution() const {
    for (Symbol a = 0; a < image_.size(); ++a) {
        if (image_[image_[a]] != a) return false;
    }
    return true;
}

Symbol FlipPair::symbol(std::string_view label) const {
    const auto& labels = alphabet();
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw InputError("unknown symbol '" + std::string(label) + "'");
    return static_cast<Symbol>(it - labels.begin());
}

Word FlipPair::parse_word(std::string_view text) const {
    Word w;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) w.push_back(symbol(token));
    return w;
}

std::string FlipPair::format_word(const Word& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ' ';
        out += alphabet().at(w[i]);
    }
    return out;
}

FlipPair FlipPair::renamed(std::string name) const {
    FlipPair copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

FlipPair validate_flip_pair(IntMatrix A, IntMatrix J, std::string name) {
    if (!A.is_square()) throw InputError("A is not square");
    if (!J.is_square()) throw InputError("J is not square");
    if (A.row_labels() != A.col_labels() || J.row_labels() != J.col_labels()) {
        throw InputError("row and column labels of a flip-pair matrix must agree");
    }
    if (A.row_labels() != J.row_labels()) throw InputError("A and J have different shapes or labels");
    if (!A.is_zero_one()) throw CheckFailure("zero-one", "A has an entry outside {0, 1}");
    if (!J.is_zero_one()) throw CheckFailure("zero-one", "J has an entry outside {0, 1}");

    const IntMatrix id = IntMatrix::identity(A.row_labels());
    if (mat_mul(J, J) != id) throw CheckFailure("J^2 = I", "J squared is not the identity");
    if (mat_mul(A, J) != mat_mul(J, A.transposed().relabeled(A.row_labels(), A.col_labels()))) {
        throw CheckFailure("AJ = JA^T", "A J differs from J A^T");
    }

    const std::size_t n = A.rows();
    std::vector<Symbol> image(n);
    for (Symbol a = 0; a < n; ++a) {
        // J^2 = I with J zero-one forces exactly one 1 per row.
        Symbol b = 0;
        while (J(a, b) == 0) ++b;
        image[a] = b;
    }

    FlipPair p;
    p.name_ = std::move(name);
    p.allowed_.resize(n * n);
    for (Symbol a = 0; a < n; ++a)
        for (Symbol b = 0; b < n; ++b) p.allowed_[a * n + b] = A(a, b) == 1 ? 1 : 0;
    p.A_ = std::move(A);
    p.J_ = std::move(J);
    p.tau_ = SymbolMap(std::move(image));
    return p;
}

Word apply_tau(const FlipPair& p, const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Symbol a : w) {
        if (a >= p.size()) throw InputError("symbol index " + std::to_string(a) + " outside the alphabet");
        out.push_back(p.tau(a));
    }
    return out;
}

Word flip_word(const FlipPair& p, const Word& w) {
    Word out = apply_tau(p, w);
    std::reverse(out.begin(), out.end());
    return out;
}

FlipPair permute_pair(const FlipPair& p, const std::vector<Symbol>& perm, const Labels& new_labels) {
    const std::size_t n = p.size();
    if (perm.size() != n || new_labels.size() != n) throw InputError("permute_pair: size mismatch");
    std::vector<char> hit(n, 0);
    for (Symbol s : perm) {
        if (s >= n || hit[s]) throw InputError("permute_pair: not a permutation");
        hit[s] = 1;
    }
    IntMatrix A(new_labels, new_labels);
    IntMatrix J(new_labels, new_labels);
    for (Symbol a = 0; a < n; ++a) {
        for (Symbol b = 0; b < n; ++b) {
            A(perm[a], perm[b]) = p.A()(a, b);
            J(perm[a], perm[b]) = p.J()(a, b);
        }
    }
    return validate_flip_pair(std::move(A), std::move(J), p.name());
}

}  // namespace shiftflip
