#ifndef SHIFTFLIP_EXACT_LINALG_HPP
#define SHIFTFLIP_EXACT_LINALG_HPP

// Exact dense linear algebra over arbitrary-precision integers.
//
// Every matrix carries row and column labels (symbol names). Products check
// that the inner labels agree, so matrices built over constructed alphabets
// (blocks, triples, pairs of words) cannot be multiplied in the wrong basis.
// No floating point is used anywhere in this module.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shiftflip {

using Integer = mpz_class;
using Rational = mpq_class;
using Labels = std::vector<std::string>;

/// Labels "first", "first+1", ..., as decimal strings.
Labels numbered_labels(std::size_t count, std::size_t first = 1);

class IntMatrix {
public:
    /// The 0x0 matrix.
    IntMatrix() = default;

    /// Zero matrix with the given labels.
    IntMatrix(Labels row_labels, Labels col_labels);

    /// Row-major entries; entries.size() must equal rows * cols.
    IntMatrix(Labels row_labels, Labels col_labels, std::vector<Integer> entries);

    static IntMatrix from_rows(Labels row_labels, Labels col_labels,
                               const std::vector<std::vector<Integer>>& rows);

    /// Square matrix sharing one label list for rows and columns.
    static IntMatrix square(Labels labels, const std::vector<std::vector<long>>& rows);

    /// Square matrix labelled "1".."n".
    static IntMatrix square(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(Labels labels);
    static IntMatrix zero(Labels row_labels, Labels col_labels) { return {std::move(row_labels), std::move(col_labels)}; }

    std::size_t rows() const noexcept { return row_labels_.size(); }
    std::size_t cols() const noexcept { return col_labels_.size(); }
    bool is_square() const noexcept { return rows() == cols(); }

    const Labels& row_labels() const noexcept { return row_labels_; }
    const Labels& col_labels() const noexcept { return col_labels_; }

    const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
    Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols() + c]; }

    /// Entry lookup by label; throws InputError for unknown labels.
    const Integer& at(std::string_view row_label, std::string_view col_label) const;

    std::span<const Integer> entries() const noexcept { return entries_; }
    std::vector<Integer> row(std::size_t r) const;

    std::size_t row_index(std::string_view label) const;
    std::size_t col_index(std::string_view label) const;

    bool is_zero_one() const;
    bool is_nonnegative() const;
    bool is_symmetric() const;

    IntMatrix transposed() const;

    /// Same entries, new labels (sizes must match).
    IntMatrix relabeled(Labels row_labels, Labels col_labels) const;

    /// Entries equal, labels ignored.
    bool same_entries(const IntMatrix& other) const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    Labels row_labels_;
    Labels col_labels_;
    std::vector<Integer> entries_;
};

struct IntVector {
    Labels labels;
    std::vector<Integer> entries;

    friend bool operator==(const IntVector&, const IntVector&) = default;
};

/// Polynomial with integer coefficients in ascending degree order. The
/// leading coefficient is nonzero unless the polynomial is zero (empty).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> ascending);
    IntPolynomial(std::initializer_list<long> ascending);

    /// Product of (t - root) over the given roots.
    static IntPolynomial from_roots(std::span<const long> roots);

    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Integer coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

    Integer evaluate(const Integer& t) const;

    /// Human-readable form such as "t^2 - t - 1".
    std::string to_string(std::string_view var = "t") const;

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_scale(const IntMatrix& a, const Integer& factor);

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return mat_mul(a, b); }
inline IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) { return mat_add(a, b); }
inline IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return mat_sub(a, b); }

/// a^k by repeated squaring; a^0 is the identity on a's labels.
IntMatrix mat_pow(const IntMatrix& a, std::size_t k);

Integer trace(const IntMatrix& a);

/// Diagonal of a square matrix, labelled by its rows.
IntVector delta(const IntMatrix& a);

/// u^T M v with labels checked against M's rows and columns.
Integer bilinear(const IntVector& u, const IntMatrix& m, const IntVector& v);

/// det(tI - a), computed with Berkowitz's division-free algorithm.
IntPolynomial char_poly(const IntMatrix& a);

/// p(a) = sum_k p_k a^k, evaluated by Horner's rule.
IntMatrix evaluate_at(const IntPolynomial& p, const IntMatrix& a);

/// Rank over Q via fraction-free (Bareiss) elimination.
std::size_t rank_over_rationals(const IntMatrix& a);

/// rank((a - eigenvalue*I)^j) for j = 1..max_power. The sequence pins down
/// the Jordan block sizes at that eigenvalue.
std::vector<std::size_t> rank_profile(const IntMatrix& a, const Integer& eigenvalue, std::size_t max_power);

/// Jordan block sizes at an eigenvalue recovered from a rank profile: the
/// number of blocks of size >= j is rank_{j-1} - rank_j (rank_0 = n).
std::vector<std::size_t> jordan_block_sizes(std::size_t dimension, std::span<const std::size_t> profile);

}  // namespace shiftflip

#endif  // SHIFTFLIP_EXACT_LINALG_HPP
