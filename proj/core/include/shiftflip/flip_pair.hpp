#ifndef SHIFTFLIP_FLIP_PAIR_HPP
#define SHIFTFLIP_FLIP_PAIR_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "shiftflip/exact_linalg.hpp"

namespace shiftflip {

/// Index of a symbol in an alphabet (position in the matrix labels).
using Symbol = std::size_t;
/// A finite word over an indexed alphabet.
using Word = std::vector<Symbol>;

/// A total map from an alphabet to itself.
class SymbolMap {
public:
    SymbolMap() = default;
    explicit SymbolMap(std::vector<Symbol> image);

    Symbol operator()(Symbol a) const { return image_.at(a); }
    std::size_t size() const noexcept { return image_.size(); }
    const std::vector<Symbol>& image() const noexcept { return image_; }
    bool is_involution() const;

    friend bool operator==(const SymbolMap&, const SymbolMap&) = default;

private:
    std::vector<Symbol> image_;
};

/// A pair (A, J) of zero-one matrices over a common alphabet with
/// A J = J A^T and J^2 = I. J is a permutation matrix of an involution
/// tau_J, and the one-block flip phi_{J,A}(x)_i = tau_J(x_{-i}) maps X_A onto
/// itself. Only validate_flip_pair constructs one.
class FlipPair {
public:
    const std::string& name() const noexcept { return name_; }
    const Labels& alphabet() const noexcept { return A_.row_labels(); }
    std::size_t size() const noexcept { return A_.rows(); }

    const IntMatrix& A() const noexcept { return A_; }
    const IntMatrix& J() const noexcept { return J_; }
    const SymbolMap& tau() const noexcept { return tau_; }
    Symbol tau(Symbol a) const { return tau_(a); }

    /// A(a, b) == 1.
    bool allowed(Symbol a, Symbol b) const { return allowed_[a * size() + b] != 0; }

    /// Index of a label; throws InputError for unknown symbols.
    Symbol symbol(std::string_view label) const;

    /// Parses a space-separated list of labels.
    Word parse_word(std::string_view text) const;
    std::string format_word(const Word& w) const;

    /// Same pair under a new name.
    FlipPair renamed(std::string name) const;

    friend bool operator==(const FlipPair& a, const FlipPair& b) { return a.A_ == b.A_ && a.J_ == b.J_; }

private:
    friend FlipPair validate_flip_pair(IntMatrix A, IntMatrix J, std::string name);

    std::string name_;
    IntMatrix A_;
    IntMatrix J_;
    SymbolMap tau_;
    std::vector<char> allowed_;
};

/// Checks the flip-pair axioms and extracts tau_J. Throws InputError for
/// shape/label problems and CheckFailure naming the violated axiom
/// ("zero-one", "J^2 = I", "AJ = JA^T") otherwise.
FlipPair validate_flip_pair(IntMatrix A, IntMatrix J, std::string name = "");

/// Symbol-wise tau_J image of a word.
Word apply_tau(const FlipPair& p, const Word& w);

/// Reverse of w with tau_J applied to every symbol.
Word flip_word(const FlipPair& p, const Word& w);

/// Simultaneous relabeling: symbol a of p becomes symbol perm[a] of the result.
FlipPair permute_pair(const FlipPair& p, const std::vector<Symbol>& perm, const Labels& new_labels);

}  // namespace shiftflip

#endif  // SHIFTFLIP_FLIP_PAIR_HPP
