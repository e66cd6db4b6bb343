#ifndef SHIFTFLIP_POWER_SERIES_HPP
#define SHIFTFLIP_POWER_SERIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "shiftflip/exact_linalg.hpp"

namespace shiftflip {

inline constexpr std::size_t kDefaultSeriesOrder = 16;

/// Formal power series over Q truncated at degree `order`: coefficients for
/// t^0 .. t^order are stored and everything above is discarded exactly.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order = kDefaultSeriesOrder);

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    TruncatedSeries(std::size_t order, std::vector<Rational> coeffs);

    static TruncatedSeries one(std::size_t order);
    /// The monomial t (zero if order is 0).
    static TruncatedSeries variable(std::size_t order);
    /// 1 / (1 - ratio * t^step) truncated.
    static TruncatedSeries geometric(std::size_t order, const Rational& ratio, std::size_t step = 1);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    Rational& operator[](std::size_t k) { return coeffs_.at(k); }

    bool is_zero() const;

    /// Same series cut (or zero-padded) to a new order.
    TruncatedSeries truncated(std::size_t order) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& factor);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return series_add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return series_sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }

/// exp(a) for a with zero constant term, via n*b_n = sum_k k*a_k*b_{n-k}.
TruncatedSeries series_exp(const TruncatedSeries& a);

/// log(a) for a with constant term 1.
TruncatedSeries series_log(const TruncatedSeries& a);

/// b(t) = a(t^2) at the same order.
TruncatedSeries substitute_t_squared(const TruncatedSeries& a);

/// "p/q" in lowest terms with q > 0 (always includes the denominator).
std::string rational_to_string(const Rational& q);

/// Accepts "p/q" or a bare integer; throws InputError otherwise.
Rational rational_from_string(const std::string& text);

}  // namespace shiftflip

#endif  // SHIFTFLIP_POWER_SERIES_HPP
