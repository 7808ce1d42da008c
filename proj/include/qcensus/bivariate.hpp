#pragma once

// Exact power series in t truncated at a stated t-order, with coefficients
// that are integer polynomials in q.  Per-t-degree q-polynomials are exact
// (and finite) unless an optional q-cap is set, in which case q-degrees above
// the cap are dropped everywhere.

#include "qcensus/series.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace qcensus {

// Dense q-polynomial; trailing zeros trimmed, empty vector = 0.
using QPoly = std::vector<Int>;

namespace qpoly {

inline void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly add(const QPoly& a, const QPoly& b) {
    QPoly out(std::max(a.size(), b.size()), Int(0));
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
    trim(out);
    return out;
}

inline QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly out(std::max(a.size(), b.size()), Int(0));
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
    trim(out);
    return out;
}

inline QPoly mul(const QPoly& a, const QPoly& b, std::optional<int> q_cap) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size() + b.size() - 1;
    if (q_cap) n = std::min(n, static_cast<std::size_t>(*q_cap) + 1);
    QPoly out(n, Int(0));
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

inline QPoly capped(QPoly p, std::optional<int> q_cap) {
    if (q_cap && p.size() > static_cast<std::size_t>(*q_cap) + 1)
        p.resize(static_cast<std::size_t>(*q_cap) + 1);
    trim(p);
    return p;
}

inline Int eval_at_one(const QPoly& p) {
    Int s = 0;
    for (const Int& c : p) s += c;
    return s;
}

}  // namespace qpoly

class Bivariate {
public:
    explicit Bivariate(int t_order, std::optional<int> q_cap = {}) : q_cap_(q_cap) {
        if (t_order < 0) throw std::invalid_argument("Bivariate: t-order must be >= 0");
        if (q_cap && *q_cap < 0) throw std::invalid_argument("Bivariate: q-cap must be >= 0");
        tc_.assign(static_cast<std::size_t>(t_order) + 1, QPoly{});
    }

    static Bivariate one(int t_order, std::optional<int> q_cap = {}) {
        Bivariate b(t_order, q_cap);
        b.tc_[0] = {Int(1)};
        return b;
    }

    // Lift a truncated q-series to t-degree zero; the series order becomes
    // the q-cap, since nothing beyond it is known.
    static Bivariate from_series(const Series& s, int t_order) {
        Bivariate b(t_order, s.order());
        QPoly p(s.coeffs());
        qpoly::trim(p);
        b.tc_[0] = std::move(p);
        return b;
    }

    int t_order() const { return static_cast<int>(tc_.size()) - 1; }
    std::optional<int> q_cap() const { return q_cap_; }

    const QPoly& operator[](int td) const {
        if (td < 0 || td > t_order()) throw std::out_of_range("Bivariate: t-degree out of range");
        return tc_[static_cast<std::size_t>(td)];
    }

    QPoly& coeff(int td) {
        if (td < 0 || td > t_order()) throw std::out_of_range("Bivariate: t-degree out of range");
        return tc_[static_cast<std::size_t>(td)];
    }

    bool is_zero() const {
        for (const QPoly& p : tc_)
            if (!p.empty()) return false;
        return true;
    }

    friend Bivariate operator+(const Bivariate& a, const Bivariate& b) {
        Bivariate out(std::min(a.t_order(), b.t_order()), merged_cap(a, b));
        for (int td = 0; td <= out.t_order(); ++td)
            out.coeff(td) = qpoly::capped(qpoly::add(a[td], b[td]), out.q_cap_);
        return out;
    }

    friend Bivariate operator-(const Bivariate& a, const Bivariate& b) {
        Bivariate out(std::min(a.t_order(), b.t_order()), merged_cap(a, b));
        for (int td = 0; td <= out.t_order(); ++td)
            out.coeff(td) = qpoly::capped(qpoly::sub(a[td], b[td]), out.q_cap_);
        return out;
    }

    friend Bivariate operator*(const Bivariate& a, const Bivariate& b) {
        Bivariate out(std::min(a.t_order(), b.t_order()), merged_cap(a, b));
        for (int i = 0; i <= out.t_order(); ++i) {
            if (a[i].empty()) continue;
            for (int j = 0; i + j <= out.t_order(); ++j) {
                if (b[j].empty()) continue;
                out.coeff(i + j) = qpoly::add(out[i + j], qpoly::mul(a[i], b[j], out.q_cap_));
            }
        }
        return out;
    }

    Bivariate& operator*=(const Bivariate& b) { return *this = *this * b; }
    Bivariate& operator+=(const Bivariate& b) { return *this = *this + b; }
    Bivariate& operator-=(const Bivariate& b) { return *this = *this - b; }

    // Inverse with respect to t.  The t-constant coefficient must be the
    // polynomial +1 or -1, so that every coefficient of the inverse stays a
    // finite polynomial in q.
    Bivariate inverse() const {
        if (tc_[0].size() != 1 || (tc_[0][0] != 1 && tc_[0][0] != -1))
            throw std::domain_error("Bivariate: inverse requires t-constant coefficient +1 or -1");
        const Int c0 = tc_[0][0];
        Bivariate out(t_order(), q_cap_);
        out.tc_[0] = {c0};
        for (int k = 1; k <= t_order(); ++k) {
            QPoly acc;
            for (int j = 1; j <= k; ++j) acc = qpoly::add(acc, qpoly::mul(tc_[static_cast<std::size_t>(j)], out[k - j], q_cap_));
            for (Int& c : acc) c = -c0 * c;
            out.coeff(k) = qpoly::capped(std::move(acc), q_cap_);
        }
        return out;
    }

    // In-place multiplication by (1 + sign * q^a t^b), b >= 1.
    void mul_linear_factor(int q_exp, int t_exp, int sign) {
        if (t_exp < 1) throw std::domain_error("Bivariate: factor t-exponent must be >= 1");
        if (q_exp < 0) throw std::invalid_argument("Bivariate: factor q-exponent must be >= 0");
        for (int td = t_order(); td >= t_exp; --td) {
            QPoly shifted = shifted_by_qexp(tc_[static_cast<std::size_t>(td - t_exp)], q_exp);
            for (Int& c : shifted) c *= sign;
            tc_[static_cast<std::size_t>(td)] = qpoly::capped(qpoly::add(tc_[static_cast<std::size_t>(td)], shifted), q_cap_);
        }
    }

    // In-place multiplication by (1 + sign * q^a t^b)^{-1} via its geometric
    // expansion (finite in t).
    void div_linear_factor(int q_exp, int t_exp, int sign) {
        if (t_exp < 1) throw std::domain_error("Bivariate: factor t-exponent must be >= 1");
        if (q_exp < 0) throw std::invalid_argument("Bivariate: factor q-exponent must be >= 0");
        for (int td = t_exp; td <= t_order(); ++td) {
            QPoly shifted = shifted_by_qexp(tc_[static_cast<std::size_t>(td - t_exp)], q_exp);
            for (Int& c : shifted) c *= -sign;
            tc_[static_cast<std::size_t>(td)] = qpoly::capped(qpoly::add(tc_[static_cast<std::size_t>(td)], shifted), q_cap_);
        }
    }

    Bivariate with_q_cap(std::optional<int> cap) const {
        Bivariate out(t_order(), cap);
        for (int td = 0; td <= t_order(); ++td)
            out.coeff(td) = qpoly::capped(tc_[static_cast<std::size_t>(td)], cap);
        return out;
    }

    friend bool operator==(const Bivariate& a, const Bivariate& b) {
        return a.tc_ == b.tc_;  // caps are bookkeeping, not value
    }

private:
    static std::optional<int> merged_cap(const Bivariate& a, const Bivariate& b) {
        if (a.q_cap_ && b.q_cap_) return std::min(*a.q_cap_, *b.q_cap_);
        return a.q_cap_ ? a.q_cap_ : b.q_cap_;
    }

    static QPoly shifted_by_qexp(const QPoly& p, int q_exp) {
        if (p.empty()) return {};
        QPoly out(p.size() + static_cast<std::size_t>(q_exp), Int(0));
        for (std::size_t k = 0; k < p.size(); ++k) out[k + static_cast<std::size_t>(q_exp)] = p[k];
        return out;
    }

    std::vector<QPoly> tc_;
    std::optional<int> q_cap_;
};

// One family of factors (1 - q^e t^n)^power -- or (1 + q^e t^n)^power when
// plus_sign is set -- taken over all n >= 1 with n mod modulus in residues.
struct ProductFactorFamily {
    int modulus = 1;
    std::vector<int> residues = {0};
    int q_exponent = 0;
    int power = -1;
    bool plus_sign = false;
};

using SeriesValue = std::variant<Series, Bivariate>;

inline Bivariate bivariate_product(const std::vector<ProductFactorFamily>& families, int t_order,
                                   std::optional<int> q_cap = {}) {
    Bivariate out = Bivariate::one(t_order, q_cap);
    for (const ProductFactorFamily& f : families) {
        if (f.modulus < 1) throw std::domain_error("bivariate_product: modulus must be >= 1");
        if (f.power == 0) throw std::invalid_argument("bivariate_product: factor power must be nonzero");
        for (int r : f.residues)
            if (r < 0 || r >= f.modulus)
                throw std::invalid_argument("bivariate_product: residue out of range");
        const int sign = f.plus_sign ? +1 : -1;
        for (int n = 1; n <= t_order; ++n) {
            bool hit = false;
            for (int r : f.residues) hit = hit || (n % f.modulus == r);
            if (!hit) continue;
            for (int rep = 0; rep < std::abs(f.power); ++rep) {
                if (f.power > 0)
                    out.mul_linear_factor(f.q_exponent, n, sign);
                else
                    out.div_linear_factor(f.q_exponent, n, sign);
            }
        }
    }
    return out;
}

}  // namespace qcensus
