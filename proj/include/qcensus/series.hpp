#pragma once

// Exact truncated power series in q over arbitrary-precision integers, plus
// the q-hypergeometric building blocks: Pochhammer products, residue-class
// products and Gaussian q-binomials.
//
// Every series carries an explicit truncation order N (coefficients of q^0
// .. q^N are stored exactly).  Binary operations on mixed orders silently
// truncate to the minimum, since identity checks always fix a global order.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcensus {

// Plain-value (non-expression-template) arbitrary-precision integers and
// rationals; coefficients are exact everywhere, no floating point.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

class Series {
public:
    explicit Series(int order) {
        if (order < 0) throw std::invalid_argument("Series: order must be >= 0");
        coeffs_.assign(static_cast<std::size_t>(order) + 1, Int(0));
    }

    static Series one(int order) {
        Series s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    static Series monomial(int degree, Int coeff, int order) {
        Series s(order);
        if (degree < 0) throw std::invalid_argument("Series: monomial degree must be >= 0");
        if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = std::move(coeff);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Int& operator[](int k) const {
        if (k < 0 || k > order()) throw std::out_of_range("Series: coefficient index out of range");
        return coeffs_[static_cast<std::size_t>(k)];
    }

    Int& coeff(int k) {
        if (k < 0 || k > order()) throw std::out_of_range("Series: coefficient index out of range");
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
    }

    Series truncated(int new_order) const {
        Series s(std::min(new_order, order()));
        for (int k = 0; k <= s.order(); ++k) s.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
        return s;
    }

    // Zero-extend to a higher order.  Only meaningful when the receiver is an
    // exact polynomial (q-binomials, numerator polynomials).
    Series padded(int new_order) const {
        if (new_order <= order()) return truncated(new_order);
        Series s(new_order);
        for (int k = 0; k <= order(); ++k) s.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series s(std::min(a.order(), b.order()));
        for (int k = 0; k <= s.order(); ++k) s.coeffs_[static_cast<std::size_t>(k)] = a[k] + b[k];
        return s;
    }

    friend Series operator-(const Series& a, const Series& b) {
        Series s(std::min(a.order(), b.order()));
        for (int k = 0; k <= s.order(); ++k) s.coeffs_[static_cast<std::size_t>(k)] = a[k] - b[k];
        return s;
    }

    Series operator-() const {
        Series s(order());
        for (int k = 0; k <= order(); ++k) s.coeffs_[static_cast<std::size_t>(k)] = -coeffs_[static_cast<std::size_t>(k)];
        return s;
    }

    // Cauchy product truncated to the minimum order.
    friend Series operator*(const Series& a, const Series& b) {
        Series s(std::min(a.order(), b.order()));
        for (int i = 0; i <= s.order(); ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; i + j <= s.order(); ++j) {
                if (b[j] == 0) continue;
                s.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
            }
        }
        return s;
    }

    friend Series operator*(const Int& c, const Series& a) {
        Series s(a.order());
        for (int k = 0; k <= a.order(); ++k) s.coeffs_[static_cast<std::size_t>(k)] = c * a[k];
        return s;
    }

    Series& operator+=(const Series& b) { return *this = *this + b; }
    Series& operator-=(const Series& b) { return *this = *this - b; }
    Series& operator*=(const Series& b) { return *this = *this * b; }

    // Multiplication by q^e; coefficients shifted past the order are dropped.
    Series shifted(int e) const {
        if (e < 0) throw std::invalid_argument("Series: shift exponent must be >= 0");
        Series s(order());
        for (int k = 0; k + e <= order(); ++k) s.coeffs_[static_cast<std::size_t>(k + e)] = coeffs_[static_cast<std::size_t>(k)];
        return s;
    }

    // Multiplicative inverse up to the order; the constant term must be +1 or -1.
    Series inverse() const {
        const Int& c0 = coeffs_[0];
        if (c0 != 1 && c0 != -1)
            throw std::domain_error("Series: inverse requires constant term +1 or -1");
        Series s(order());
        s.coeffs_[0] = c0;  // 1/c0 == c0 for units of Z
        for (int k = 1; k <= order(); ++k) {
            Int acc = 0;
            for (int j = 1; j <= k; ++j) acc += coeffs_[static_cast<std::size_t>(j)] * s.coeffs_[static_cast<std::size_t>(k - j)];
            s.coeffs_[static_cast<std::size_t>(k)] = -c0 * acc;
        }
        return s;
    }

    // In-place multiplication by the elementary factors used by the product
    // builders.  All run in O(order) time.
    void mul_one_minus(int e) {  // *= (1 - q^e)
        check_exponent(e);
        for (int k = order(); k >= e; --k) coeffs_[static_cast<std::size_t>(k)] -= coeffs_[static_cast<std::size_t>(k - e)];
    }
    void mul_one_plus(int e) {  // *= (1 + q^e)
        check_exponent(e);
        for (int k = order(); k >= e; --k) coeffs_[static_cast<std::size_t>(k)] += coeffs_[static_cast<std::size_t>(k - e)];
    }
    void div_one_minus(int e) {  // *= (1 - q^e)^{-1}
        check_exponent(e);
        for (int k = e; k <= order(); ++k) coeffs_[static_cast<std::size_t>(k)] += coeffs_[static_cast<std::size_t>(k - e)];
    }
    void div_one_plus(int e) {  // *= (1 + q^e)^{-1}
        check_exponent(e);
        for (int k = e; k <= order(); ++k) coeffs_[static_cast<std::size_t>(k)] -= coeffs_[static_cast<std::size_t>(k - e)];
    }

    friend bool operator==(const Series& a, const Series& b) = default;

private:
    static void check_exponent(int e) {
        if (e < 1) throw std::domain_error("Series: factor exponent must be >= 1");
    }

    std::vector<Int> coeffs_;
};

enum class ProductMode {
    Reciprocal,  // (1 - q^e)^{-1}
    Plus,        // (1 + q^e)
    Minus,       // (1 - q^e)
};

// prod over n >= 1 with n mod modulus in `allowed` of f(q^{scale * n}), where
// f is selected by mode.  Factors with scale*n > order contribute nothing.
inline Series residue_product(int modulus, const std::set<int>& allowed, ProductMode mode, int scale,
                              int order) {
    if (modulus < 1) throw std::invalid_argument("residue_product: modulus must be >= 1");
    if (scale < 1) throw std::invalid_argument("residue_product: scale must be >= 1");
    for (int r : allowed)
        if (r < 0 || r >= modulus)
            throw std::invalid_argument("residue_product: residue out of range");
    Series s = Series::one(order);
    for (int n = 1; static_cast<long long>(scale) * n <= order; ++n) {
        if (!allowed.count(n % modulus)) continue;
        const int e = scale * n;
        switch (mode) {
            case ProductMode::Reciprocal: s.div_one_minus(e); break;
            case ProductMode::Plus: s.mul_one_plus(e); break;
            case ProductMode::Minus: s.mul_one_minus(e); break;
        }
    }
    return s;
}

inline constexpr int kInfinite = -1;

// q-Pochhammer (a)_n with a = sign * q^e: the product of (1 - sign * q^{e+t})
// over 0 <= t < n.  Pass kInfinite for n to truncate once e + t exceeds the
// order.  Every factor exponent must be >= 1 so the result is a unit series.
inline Series pochhammer(int base_exponent, int sign, int n, int order) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("pochhammer: sign must be +1 or -1");
    if (n != kInfinite && n < 0) throw std::invalid_argument("pochhammer: length must be >= 0");
    Series s = Series::one(order);
    if (n == 0) return s;
    if (base_exponent < 1)
        throw std::domain_error("pochhammer: factor exponent must be >= 1");
    for (int t = 0; n == kInfinite || t < n; ++t) {
        const long long e = static_cast<long long>(base_exponent) + t;
        if (e > order) break;
        if (sign == 1)
            s.mul_one_minus(static_cast<int>(e));
        else
            s.mul_one_plus(static_cast<int>(e));
    }
    return s;
}

inline Series poch_q(int n, int order) { return pochhammer(1, +1, n, order); }
inline Series poch_q_inf(int order) { return pochhammer(1, +1, kInfinite, order); }
inline Series poch_neg_q(int n, int order) { return pochhammer(1, -1, n, order); }
inline Series poch_neg_q_inf(int order) { return pochhammer(1, -1, kInfinite, order); }

// 1 / prod_{n>=1} (1 - q^n), the partition generating function.
inline Series inv_poch_q_inf(int order) {
    Series s = Series::one(order);
    for (int e = 1; e <= order; ++e) s.div_one_minus(e);
    return s;
}

// (q)_lambda = (q)_{l1-l2} (q)_{l2-l3} ... (q)_{ls}: the product of finite
// q-Pochhammers over consecutive differences of a weakly decreasing
// nonnegative sequence.
inline Series q_poch_lambda(const std::vector<int>& lambda, int order) {
    Series s = Series::one(order);
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        if (lambda[k] < 0)
            throw std::domain_error("q_poch_lambda: entries must be >= 0");
        if (k + 1 < lambda.size() && lambda[k] < lambda[k + 1])
            throw std::domain_error("q_poch_lambda: sequence must be weakly decreasing");
        const int diff = (k + 1 < lambda.size()) ? lambda[k] - lambda[k + 1] : lambda[k];
        s *= poch_q(diff, order);
    }
    return s;
}

// Gaussian q-binomial [M, N]: (q)_M / ((q)_N (q)_{M-N}) when M >= N >= 0, the
// zero polynomial otherwise.  Returned as an exact polynomial of degree
// N(M-N) (its own order).
inline Series q_binomial(int m, int n) {
    if (!(m >= n && n >= 0)) return Series(0);
    const int deg = n * (m - n);
    Series numer = poch_q(m, deg);
    Series denom = poch_q(n, deg) * poch_q(m - n, deg);
    return numer * denom.inverse();
}

}  // namespace qcensus
