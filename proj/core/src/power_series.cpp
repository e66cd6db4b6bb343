#include "shiftflip/power_series.hpp"

#include <algorithm>
#include <cctype>

#include "shiftflip/error.hpp"

namespace shiftflip {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.order() != b.order()) {
        throw InputError(std::string(op) + ": order mismatch (" + std::to_string(a.order()) + " vs " +
                         std::to_string(b.order()) + ")");
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::geometric(std::size_t order, const Rational& ratio, std::size_t step) {
    TruncatedSeries s(order);
    Rational power = 1;
    for (std::size_t k = 0; k <= order; k += step) {
        s.coeffs_[k] = power;
        power *= ratio;
        if (step == 0) break;
    }
    return s;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const { return {order, coeffs_}; }

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "series_add");
    TruncatedSeries out = a;
    for (std::size_t k = 0; k <= a.order(); ++k) out[k] += b[k];
    return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "series_sub");
    TruncatedSeries out = a;
    for (std::size_t k = 0; k <= a.order(); ++k) out[k] -= b[k];
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "series_mul");
    TruncatedSeries out(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= a.order(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& factor) {
    TruncatedSeries out = a;
    for (std::size_t k = 0; k <= a.order(); ++k) out[k] *= factor;
    return out;
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
    if (a[0] != 0) throw InputError("series_exp: constant term must be 0");
    const std::size_t order = a.order();
    TruncatedSeries b(order);
    b[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational sum = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (a[k] != 0) sum += Rational(static_cast<unsigned long>(k)) * a[k] * b[n - k];
        }
        b[n] = sum / Rational(static_cast<unsigned long>(n));
    }
    return b;
}

TruncatedSeries series_log(const TruncatedSeries& a) {
    if (a[0] != 1) throw InputError("series_log: constant term must be 1");
    const std::size_t order = a.order();
    TruncatedSeries out(order);
    // From a' = a * (log a)': n*a_n = sum_{k=1}^{n} k*l_k*a_{n-k}.
    for (std::size_t n = 1; n <= order; ++n) {
        Rational sum = Rational(static_cast<unsigned long>(n)) * a[n];
        for (std::size_t k = 1; k < n; ++k) {
            if (out[k] != 0) sum -= Rational(static_cast<unsigned long>(k)) * out[k] * a[n - k];
        }
        out[n] = sum / Rational(static_cast<unsigned long>(n));
    }
    return out;
}

TruncatedSeries substitute_t_squared(const TruncatedSeries& a) {
    TruncatedSeries out(a.order());
    for (std::size_t k = 0; 2 * k <= a.order(); ++k) out[2 * k] = a[k];
    return out;
}

std::string rational_to_string(const Rational& q) {
    Rational r = q;
    r.canonicalize();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
    const auto valid_integer = [](const std::string& s, bool allow_sign) {
        std::size_t start = (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start >= s.size()) return false;
        return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                           [](unsigned char c) { return std::isdigit(c) != 0; });
    };
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false)) {
        throw InputError("not an exact rational: '" + text + "'");
    }
    Integer n(num[0] == '+' ? num.substr(1) : num);
    Integer d(den);
    if (d == 0) throw InputError("zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace shiftflip
