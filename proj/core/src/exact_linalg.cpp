#include "shiftflip/exact_linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "shiftflip/error.hpp"

namespace shiftflip {

namespace {

void check_unique(const Labels& labels, const char* what) {
    std::set<std::string_view> seen;
    for (const auto& label : labels) {
        if (!seen.insert(label).second) {
            throw InputError(std::string("duplicate ") + what + " label '" + label + "'");
        }
    }
}

std::size_t find_label(const Labels& labels, std::string_view label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        throw InputError("unknown label '" + std::string(label) + "'");
    }
    return static_cast<std::size_t>(it - labels.begin());
}

void require_square(const IntMatrix& a, const char* op) {
    if (!a.is_square()) {
        throw InputError(std::string(op) + ": matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", not square");
    }
}

void require_same_shape(const IntMatrix& a, const IntMatrix& b, const char* op) {
    if (a.row_labels() != b.row_labels() || a.col_labels() != b.col_labels()) {
        throw InputError(std::string(op) + ": shape or label mismatch");
    }
}

}  // namespace

Labels numbered_labels(std::size_t count, std::size_t first) {
    Labels labels;
    labels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) labels.push_back(std::to_string(first + i));
    return labels;
}

IntMatrix::IntMatrix(Labels row_labels, Labels col_labels)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      entries_(row_labels_.size() * col_labels_.size()) {
    check_unique(row_labels_, "row");
    check_unique(col_labels_, "column");
}

IntMatrix::IntMatrix(Labels row_labels, Labels col_labels, std::vector<Integer> entries)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)), entries_(std::move(entries)) {
    check_unique(row_labels_, "row");
    check_unique(col_labels_, "column");
    if (entries_.size() != row_labels_.size() * col_labels_.size()) {
        throw InputError("matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                         std::to_string(row_labels_.size() * col_labels_.size()));
    }
}

IntMatrix IntMatrix::from_rows(Labels row_labels, Labels col_labels,
                               const std::vector<std::vector<Integer>>& rows) {
    if (rows.size() != row_labels.size()) {
        throw InputError("matrix has " + std::to_string(rows.size()) + " rows, expected " +
                         std::to_string(row_labels.size()));
    }
    std::vector<Integer> entries;
    entries.reserve(row_labels.size() * col_labels.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != col_labels.size()) {
            throw InputError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                             " entries, expected " + std::to_string(col_labels.size()));
        }
        entries.insert(entries.end(), rows[r].begin(), rows[r].end());
    }
    return {std::move(row_labels), std::move(col_labels), std::move(entries)};
}

IntMatrix IntMatrix::square(Labels labels, const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Integer>> converted;
    converted.reserve(rows.size());
    for (const auto& row : rows) converted.emplace_back(row.begin(), row.end());
    Labels cols = labels;
    return from_rows(std::move(labels), std::move(cols), converted);
}

IntMatrix IntMatrix::square(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<long>> converted;
    for (const auto& row : rows) converted.emplace_back(row);
    return square(numbered_labels(rows.size()), converted);
}

IntMatrix IntMatrix::identity(Labels labels) {
    Labels cols = labels;
    IntMatrix m(std::move(labels), std::move(cols));
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = 1;
    return m;
}

const Integer& IntMatrix::at(std::string_view row_label, std::string_view col_label) const {
    return (*this)(row_index(row_label), col_index(col_label));
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
    auto first = entries_.begin() + static_cast<std::ptrdiff_t>(r * cols());
    return {first, first + static_cast<std::ptrdiff_t>(cols())};
}

std::size_t IntMatrix::row_index(std::string_view label) const { return find_label(row_labels_, label); }
std::size_t IntMatrix::col_index(std::string_view label) const { return find_label(col_labels_, label); }

bool IntMatrix::is_zero_one() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0 || x == 1; });
}

bool IntMatrix::is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return sgn(x) >= 0; });
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = r + 1; c < cols(); ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(col_labels_, row_labels_);
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::relabeled(Labels row_labels, Labels col_labels) const {
    if (row_labels.size() != rows() || col_labels.size() != cols()) {
        throw InputError("relabel: label counts do not match the matrix shape");
    }
    return {std::move(row_labels), std::move(col_labels), entries_};
}

bool IntMatrix::same_entries(const IntMatrix& other) const {
    return rows() == other.rows() && cols() == other.cols() && entries_ == other.entries_;
}

// ---------------------------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) : coeffs_(ascending.begin(), ascending.end()) {
    normalize();
}

IntPolynomial IntPolynomial::from_roots(std::span<const long> roots) {
    IntPolynomial p{1};
    for (long root : roots) p = p * IntPolynomial{-root, 1};
    return p;
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::evaluate(const Integer& t) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::string IntPolynomial::to_string(std::string_view var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Integer& c = coeffs_[k];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || k == 0) out << mag.get_str();
        if (k >= 1) out << var;
        if (k >= 2) out << "^" << k;
    }
    return out.str();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
    return IntPolynomial(std::move(out));
}

// ---------------------------------------------------------------------------

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) {
        throw InputError("mat_mul: dimension mismatch " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    if (a.col_labels() != b.row_labels()) {
        throw InputError("mat_mul: column labels of the left factor differ from row labels of the right factor");
    }
    IntMatrix out(a.row_labels(), b.col_labels());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j) != 0) out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b) {
    require_same_shape(a, b, "mat_add");
    IntMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
    return out;
}

IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b) {
    require_same_shape(a, b, "mat_sub");
    IntMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
    return out;
}

IntMatrix mat_scale(const IntMatrix& a, const Integer& factor) {
    IntMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) *= factor;
    return out;
}

IntMatrix mat_pow(const IntMatrix& a, std::size_t k) {
    require_square(a, "mat_pow");
    if (a.row_labels() != a.col_labels()) throw InputError("mat_pow: row and column labels differ");
    IntMatrix result = IntMatrix::identity(a.row_labels());
    IntMatrix base = a;
    while (k > 0) {
        if (k & 1U) result = mat_mul(result, base);
        k >>= 1U;
        if (k > 0) base = mat_mul(base, base);
    }
    return result;
}

Integer trace(const IntMatrix& a) {
    require_square(a, "trace");
    Integer sum = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
    return sum;
}

IntVector delta(const IntMatrix& a) {
    require_square(a, "delta");
    IntVector v{a.row_labels(), {}};
    v.entries.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) v.entries.push_back(a(i, i));
    return v;
}

Integer bilinear(const IntVector& u, const IntMatrix& m, const IntVector& v) {
    if (u.labels != m.row_labels() || v.labels != m.col_labels()) {
        throw InputError("bilinear: vector labels do not match the matrix");
    }
    Integer sum = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (u.entries[i] == 0) continue;
        Integer row = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j) * v.entries[j];
        sum += u.entries[i] * row;
    }
    return sum;
}

IntPolynomial char_poly(const IntMatrix& a) {
    require_square(a, "char_poly");
    const std::size_t n = a.rows();
    // Berkowitz: grow the leading principal submatrix one row/column at a
    // time; each step multiplies the running (descending) coefficient vector
    // by a lower-triangular Toeplitz matrix.
    std::vector<Integer> desc{1};
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<Integer> column(r + 2);
        column[0] = 1;
        column[1] = -a(r, r);
        std::vector<Integer> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            Integer dot = 0;
            for (std::size_t i = 0; i < r; ++i) dot += a(r, i) * v[i];
            column[k + 2] = -dot;
            std::vector<Integer> next(r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) next[i] += a(i, j) * v[j];
            v = std::move(next);
        }
        std::vector<Integer> grown(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) grown[i] += column[i - j] * desc[j];
        desc = std::move(grown);
    }
    std::reverse(desc.begin(), desc.end());
    return IntPolynomial(std::move(desc));
}

IntMatrix evaluate_at(const IntPolynomial& p, const IntMatrix& a) {
    require_square(a, "evaluate_at");
    IntMatrix acc(a.row_labels(), a.col_labels());
    const IntMatrix id = IntMatrix::identity(a.row_labels());
    const auto& coeffs = p.coefficients();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = mat_add(mat_mul(acc, a), mat_scale(id, *it));
    }
    return acc;
}

std::size_t rank_over_rationals(const IntMatrix& a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::vector<Integer>> m(rows);
    for (std::size_t r = 0; r < rows; ++r) m[r] = a.row(r);

    std::size_t rank = 0;
    Integer previous = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer value = m[rank][c] * m[r][j] - m[r][c] * m[rank][j];
                mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
                m[r][j] = std::move(value);
            }
            m[r][c] = 0;
        }
        previous = m[rank][c];
        ++rank;
    }
    return rank;
}

std::vector<std::size_t> rank_profile(const IntMatrix& a, const Integer& eigenvalue, std::size_t max_power) {
    require_square(a, "rank_profile");
    const IntMatrix shifted = mat_sub(a, mat_scale(IntMatrix::identity(a.row_labels()), eigenvalue));
    std::vector<std::size_t> profile;
    IntMatrix power = IntMatrix::identity(a.row_labels());
    for (std::size_t j = 1; j <= max_power; ++j) {
        power = mat_mul(power, shifted);
        profile.push_back(rank_over_rationals(power));
    }
    return profile;
}

std::vector<std::size_t> jordan_block_sizes(std::size_t dimension, std::span<const std::size_t> profile) {
    if (profile.size() < 2 || profile[profile.size() - 1] != profile[profile.size() - 2]) {
        throw InputError("jordan_block_sizes: rank profile has not stabilized; raise the maximum power");
    }
    // at_least[j] = number of blocks of size >= j+1
    std::vector<std::size_t> at_least;
    std::size_t previous = dimension;
    for (std::size_t rank : profile) {
        at_least.push_back(previous - rank);
        previous = rank;
    }
    std::vector<std::size_t> sizes;
    for (std::size_t j = 0; j < at_least.size(); ++j) {
        const std::size_t next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
        for (std::size_t count = at_least[j] - next; count > 0; --count) sizes.push_back(j + 1);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

}  // namespace shiftflip
