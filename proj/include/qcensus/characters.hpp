#pragma once

// Character-side series: normalized Virasoro minimal-model characters,
// residue-class product forms, fermionic multi-sums, the Andrews J and
// Corteel E families, the two summation functionals behind the fermionic
// transformation lemmas, and the label arithmetic for the quasihomogeneous
// conjecture.

#include "qcensus/census.hpp"
#include "qcensus/series.hpp"

#include <limits>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace qcensus {

namespace detail {

// Weakly decreasing nonnegative tuples of the given length whose total weight
// stays within budget.  weight(slot, v) must be nondecreasing in v; entries
// only ever add weight, which makes the prefix pruning sound.
template <typename WeightFn, typename Emit>
void for_each_decreasing_tuple(int length, long long budget, WeightFn&& weight, Emit&& emit) {
    std::vector<int> tuple(static_cast<std::size_t>(length), 0);
    auto rec = [&](auto&& self, int slot, int prev, long long used) -> void {
        if (slot == length) {
            emit(static_cast<const std::vector<int>&>(tuple));
            return;
        }
        for (int v = 0; v <= prev; ++v) {
            const long long w = weight(slot, v);
            if (used + w > budget) break;
            tuple[static_cast<std::size_t>(slot)] = v;
            self(self, slot + 1, v, used + w);
        }
    };
    if (length == 0) {
        emit(static_cast<const std::vector<int>&>(tuple));
        return;
    }
    rec(rec, 0, budget >= 0 ? std::numeric_limits<int>::max() : -1, 0);
}

inline long long triangular(long long x) { return x * (x + 1) / 2; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Virasoro minimal-model characters
// ---------------------------------------------------------------------------

struct MinimalModelLabel {
    int p = 2;
    int p_prime = 3;
    int row = 1;  // 1 <= row < p
    int col = 1;  // 1 <= col < p_prime

    bool coprime() const { return std::gcd(p, p_prime) == 1; }
};

// Delta = ((p' r - p s)^2 - (p' - p)^2) / (4 p p').
inline Rational conformal_dimension(const MinimalModelLabel& label) {
    const long long diff = static_cast<long long>(label.p_prime) * label.row -
                           static_cast<long long>(label.p) * label.col;
    const long long gap = label.p_prime - label.p;
    return Rational(Int(diff) * diff - Int(gap) * gap, Int(4) * label.p * label.p_prime);
}

// Normalized character: the alternating lattice sum
//   sum_l ( q^{l^2 p p' + l (p' r - p s)} - q^{(l p + r)(l p' + s)} )
// divided by prod (1 - q^n).  The sum is over all integers l and truncates
// once both exponents exceed the order; the label ranges are enforced, the
// coprimality of (p, p') deliberately is not (the sum formula stays
// well-defined; callers may flag non-coprime labels).
inline Series virasoro_char(const MinimalModelLabel& label, int order) {
    const long long p = label.p, pp = label.p_prime, r = label.row, s = label.col;
    if (!(1 < p && p < pp)) throw std::invalid_argument("virasoro_char: need 1 < p < p'");
    if (!(1 <= r && r < p)) throw std::invalid_argument("virasoro_char: need 1 <= r < p");
    if (!(1 <= s && s < pp)) throw std::invalid_argument("virasoro_char: need 1 <= s < p'");

    Series num(order);
    for (long long level = 0;; ++level) {
        for (long long lam : {level, -level}) {
            const long long e1 = lam * lam * p * pp + lam * (pp * r - p * s);
            const long long e2 = (lam * p + r) * (lam * pp + s);
            if (e1 >= 0 && e1 <= order) num.coeff(static_cast<int>(e1)) += 1;
            if (e2 >= 0 && e2 <= order) num.coeff(static_cast<int>(e2)) -= 1;
            if (level == 0) break;  // lambda = 0 only once
        }
        // Both exponents at |l| >= L are bounded below by p p' L (L - 2).
        if (level >= 2 && p * pp * level * (level - 2) > order) break;
    }
    for (int e = 1; e <= order; ++e) num.div_one_minus(e);
    return num;
}

// Product side of the homogeneous component-count identity:
// prod (1 + q^n) * prod over n not congruent to 0, +-(m+1) mod (r+2) of
// (1 - q^n)^{-1}.
inline Series theorem1_rhs(int r, int m, int order) {
    if (r < 1) throw std::invalid_argument("theorem1_rhs: r must be >= 1");
    if (m < 0 || m > r) throw std::invalid_argument("theorem1_rhs: m must satisfy 0 <= m <= r");
    const int mod = r + 2;
    Series s = poch_neg_q_inf(order);
    for (int n = 1; n <= order; ++n) {
        const int res = n % mod;
        if (res == 0 || res == (m + 1) % mod || res == (mod - (m + 1)) % mod) continue;
        s.div_one_minus(n);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Fermionic sums
// ---------------------------------------------------------------------------

// sum over rho_1 >= ... >= rho_r >= 0 of
//   q^{sum (rho_i^2 + rho_i)/2} / (q)_rho * (1 + sum_{i=0}^{m-1}
//   q^{sum_{j=0}^{i} (rho_{r-m+j} + 1)}).
inline Series fermionic_rho_sum(int r, int m, int order) {
    if (r < 1) throw std::invalid_argument("fermionic_rho_sum: r must be >= 1");
    if (m < 0 || m > r - 1)
        throw std::invalid_argument("fermionic_rho_sum: m must satisfy 0 <= m <= r - 1");
    Series total(order);
    detail::for_each_decreasing_tuple(
        r, order, [](int, int v) { return detail::triangular(v); },
        [&](const std::vector<int>& rho) {
            long long base = 0;
            for (int v : rho) base += detail::triangular(v);
            Series factor(order);
            factor.coeff(0) = 1;
            long long expo = 0;
            for (int i = 0; i < m; ++i) {
                expo += rho[static_cast<std::size_t>(r - m + i - 1)] + 1;
                if (base + expo <= order) factor.coeff(static_cast<int>(expo)) += 1;
            }
            total += Series::monomial(static_cast<int>(base), 1, order) *
                     q_poch_lambda(rho, order).inverse() * factor;
        });
    return total;
}

// Same sum with the alternative factor indexed by lambda_{r-1-2j} and
// m' = min(m, r - m) summands.
inline Series fermionic_alt_sum(int r, int m, int order) {
    if (r < 1) throw std::invalid_argument("fermionic_alt_sum: r must be >= 1");
    if (m < 0 || m > r - 1)
        throw std::invalid_argument("fermionic_alt_sum: m must satisfy 0 <= m <= r - 1");
    const int mprime = std::min(m, r - m);
    Series total(order);
    detail::for_each_decreasing_tuple(
        r, order, [](int, int v) { return detail::triangular(v); },
        [&](const std::vector<int>& lam) {
            long long base = 0;
            for (int v : lam) base += detail::triangular(v);
            Series factor(order);
            factor.coeff(0) = 1;
            long long expo = 0;
            for (int i = 0; i < mprime; ++i) {
                expo += lam[static_cast<std::size_t>(r - 2 - 2 * i)] + 1;
                if (base + expo <= order) factor.coeff(static_cast<int>(expo)) += 1;
            }
            total += Series::monomial(static_cast<int>(base), 1, order) *
                     q_poch_lambda(lam, order).inverse() * factor;
        });
    return total;
}

// Odd-rank reduction (r = 2k + 1): (-q)_inf * sum over lambda_1 >= ... >=
// lambda_k of q^{sum (lambda_i^2 + lambda_i)} / (q)_lambda * (1 + sum_{i <
// m} q^{sum_{j<=i} (lambda_{k-j} + 1)}).
inline Series reduced_sum_odd(int k, int m, int order) {
    if (k < 0) throw std::invalid_argument("reduced_sum_odd: k must be >= 0");
    if (m < 0 || m > k) throw std::invalid_argument("reduced_sum_odd: m must satisfy 0 <= m <= k");
    Series inner(order);
    detail::for_each_decreasing_tuple(
        k, order, [](int, int v) { return static_cast<long long>(v) * v + v; },
        [&](const std::vector<int>& lam) {
            long long base = 0;
            for (int v : lam) base += static_cast<long long>(v) * v + v;
            Series factor(order);
            factor.coeff(0) = 1;
            long long expo = 0;
            for (int i = 0; i < m; ++i) {
                expo += lam[static_cast<std::size_t>(k - i - 1)] + 1;
                if (base + expo <= order) factor.coeff(static_cast<int>(expo)) += 1;
            }
            inner += Series::monomial(static_cast<int>(base), 1, order) *
                     q_poch_lambda(lam, order).inverse() * factor;
        });
    return poch_neg_q_inf(order) * inner;
}

// Even-rank reduction (r = 2k): sum over lambda_1 >= ... >= lambda_k of
// (-q)_{lambda_1} q^{(lambda_1^2+lambda_1)/2 + sum_{i>=2}(lambda_i^2 +
// lambda_i)} / (q)_lambda * (1 + sum_{i < m} q^{sum_{j<=i} (lambda_{k-j} + 1)}).
inline Series reduced_sum_even(int k, int m, int order) {
    if (k < 1) throw std::invalid_argument("reduced_sum_even: k must be >= 1");
    if (m < 0 || m > k) throw std::invalid_argument("reduced_sum_even: m must satisfy 0 <= m <= k");
    Series total(order);
    detail::for_each_decreasing_tuple(
        k, order,
        [](int slot, int v) {
            return slot == 0 ? detail::triangular(v) : static_cast<long long>(v) * v + v;
        },
        [&](const std::vector<int>& lam) {
            long long base = detail::triangular(lam[0]);
            for (std::size_t i = 1; i < lam.size(); ++i)
                base += static_cast<long long>(lam[i]) * lam[i] + lam[i];
            Series factor(order);
            factor.coeff(0) = 1;
            long long expo = 0;
            for (int i = 0; i < m; ++i) {
                expo += lam[static_cast<std::size_t>(k - i - 1)] + 1;
                if (base + expo <= order) factor.coeff(static_cast<int>(expo)) += 1;
            }
            total += Series::monomial(static_cast<int>(base), 1, order) *
                     poch_neg_q(lam[0], order) * q_poch_lambda(lam, order).inverse() * factor;
        });
    return total;
}

// ---------------------------------------------------------------------------
// Andrews J and Corteel E families (at x and a equal to integer powers of q)
// ---------------------------------------------------------------------------

// J_{k,i}(0, q^e, q) = sum over lambda_1 >= ... >= lambda_{k-1} of
//   q^{e |lambda| + lambda_1^2 + ... + lambda_{k-1}^2 + lambda_i + ... +
//   lambda_{k-1}} / (q)_lambda,  for 1 <= i <= k and e >= 0.
inline Series andrews_j(int k, int i, int x_exponent, int order) {
    if (k < 1) throw std::invalid_argument("andrews_j: k must be >= 1");
    if (i < 1 || i > k) throw std::invalid_argument("andrews_j: index must satisfy 1 <= i <= k");
    if (x_exponent < 0) throw std::invalid_argument("andrews_j: x exponent must be >= 0");
    Series total(order);
    const int len = k - 1;
    detail::for_each_decreasing_tuple(
        len, order,
        [&](int slot, int v) {
            long long w = static_cast<long long>(v) * v + static_cast<long long>(x_exponent) * v;
            if (slot + 1 >= i) w += v;  // linear tail lambda_i + ... + lambda_{k-1}
            return w;
        },
        [&](const std::vector<int>& lam) {
            long long expo = 0;
            for (int slot = 0; slot < len; ++slot) {
                const long long v = lam[static_cast<std::size_t>(slot)];
                expo += v * v + static_cast<long long>(x_exponent) * v;
                if (slot + 1 >= i) expo += v;
            }
            total += Series::monomial(static_cast<int>(expo), 1, order) *
                     q_poch_lambda(lam, order).inverse();
        });
    return total;
}

// E_{k+1,i}(q^e, q) = sum over lambda_1 >= ... >= lambda_k of
//   q^{(lambda_1^2+lambda_1)/2 + sum_{j>=2} lambda_j^2 + sum_{j>=i} lambda_j}
//   * (-q^{-e})_{lambda_1} * q^{e lambda_1} / (q)_lambda.
// Exponents must stay nonnegative, which restricts e to {-1, 0}; e = -1 is
// the evaluation point a = 1/q.
inline Series corteel_e(int k, int i, int a_exponent, int order) {
    if (k < 1) throw std::invalid_argument("corteel_e: k must be >= 1");
    if (i < 1 || i > k + 1)
        throw std::invalid_argument("corteel_e: index must satisfy 1 <= i <= k + 1");
    if (a_exponent > 0 || a_exponent < -1)
        throw std::domain_error("corteel_e: a exponent must be -1 or 0 to keep all monomial exponents nonnegative");
    const int m = i - 1;
    const int e = a_exponent;
    Series total(order);
    detail::for_each_decreasing_tuple(
        k, order,
        [&](int slot, int v) {
            long long w = slot == 0 ? detail::triangular(v) + static_cast<long long>(e) * v
                                    : static_cast<long long>(v) * v;
            if (slot + 1 > m) w += v;
            return w;
        },
        [&](const std::vector<int>& lam) {
            long long expo = detail::triangular(lam[0]) + static_cast<long long>(e) * lam[0];
            if (m == 0) expo += lam[0];
            for (int slot = 1; slot < k; ++slot) {
                const long long v = lam[static_cast<std::size_t>(slot)];
                expo += v * v;
                if (slot + 1 > m) expo += v;
            }
            Series poch = Series::one(order);
            for (int t = 0; t < lam[0]; ++t) {
                const int fe = t - e;
                if (fe == 0)
                    poch = Int(2) * poch;
                else if (fe <= order)
                    poch.mul_one_plus(fe);
            }
            total += Series::monomial(static_cast<int>(expo), 1, order) * poch *
                     q_poch_lambda(lam, order).inverse();
        });
    return total;
}

// ---------------------------------------------------------------------------
// The two summation functionals and a small polynomial algebra for building
// their arguments
// ---------------------------------------------------------------------------

struct SparseTerm {
    Int coeff;
    std::vector<int> x_exponents;  // one exponent per variable x_1..x_r
    int q_exponent = 0;
};
using SparsePoly = std::vector<SparseTerm>;

namespace detail {

inline void validate_sparse(int nvars, const SparsePoly& poly, const char* who) {
    for (const SparseTerm& t : poly) {
        if (static_cast<int>(t.x_exponents.size()) != nvars)
            throw std::invalid_argument(std::string(who) + ": exponent vector length mismatch");
        for (int e : t.x_exponents)
            if (e < 0) throw std::invalid_argument(std::string(who) + ": negative x exponent");
        if (t.q_exponent < 0) throw std::invalid_argument(std::string(who) + ": negative q exponent");
    }
}

inline void add_evaluated(Series& factor, const SparsePoly& poly, const std::vector<int>& lam,
                          long long base, int order) {
    for (const SparseTerm& t : poly) {
        long long expo = t.q_exponent;
        for (std::size_t v = 0; v < lam.size(); ++v)
            expo += static_cast<long long>(t.x_exponents[v]) * lam[v];
        if (base + expo <= order) factor.coeff(static_cast<int>(expo)) += t.coeff;
    }
}

}  // namespace detail

// A[P] = sum over lambda_1 >= ... >= lambda_r of
//   q^{sum (lambda_i^2 + lambda_i)/2} / (q)_lambda * P(q^{lambda_1}, ...,
//   q^{lambda_r}, q).
inline Series approx_functional(int r, const SparsePoly& poly, int order) {
    if (r < 1) throw std::invalid_argument("approx_functional: r must be >= 1");
    detail::validate_sparse(r, poly, "approx_functional");
    Series total(order);
    detail::for_each_decreasing_tuple(
        r, order, [](int, int v) { return detail::triangular(v); },
        [&](const std::vector<int>& lam) {
            long long base = 0;
            for (int v : lam) base += detail::triangular(v);
            Series factor(order);
            detail::add_evaluated(factor, poly, lam, base, order);
            if (factor.is_zero()) return;
            total += Series::monomial(static_cast<int>(base), 1, order) *
                     q_poch_lambda(lam, order).inverse() * factor;
        });
    return total;
}

// A2[P] = sum over lambda_1 >= ... >= lambda_k of
//   (-q)_{lambda_1} q^{(lambda_1^2-lambda_1)/2 + sum_{i>=2} lambda_i^2} /
//   (q)_lambda * P(q^{lambda}, q).
inline Series approx2_functional(int k, const SparsePoly& poly, int order) {
    if (k < 1) throw std::invalid_argument("approx2_functional: k must be >= 1");
    detail::validate_sparse(k, poly, "approx2_functional");
    Series total(order);
    detail::for_each_decreasing_tuple(
        k, order,
        [](int slot, int v) {
            return slot == 0 ? static_cast<long long>(v) * (v - 1) / 2
                             : static_cast<long long>(v) * v;
        },
        [&](const std::vector<int>& lam) {
            long long base = static_cast<long long>(lam[0]) * (lam[0] - 1) / 2;
            for (std::size_t i = 1; i < lam.size(); ++i)
                base += static_cast<long long>(lam[i]) * lam[i];
            Series factor(order);
            detail::add_evaluated(factor, poly, lam, base, order);
            if (factor.is_zero()) return;
            total += Series::monomial(static_cast<int>(base), 1, order) *
                     poch_neg_q(lam[0], order) * q_poch_lambda(lam, order).inverse() * factor;
        });
    return total;
}

// Polynomials in x_1..x_r and q with the boundary conventions x_{s<1} = 0 and
// x_{s>r} = 1, used to state the transformation lemmas.
class ApproxPoly {
public:
    explicit ApproxPoly(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw std::invalid_argument("ApproxPoly: need at least one variable");
    }

    static ApproxPoly constant(int nvars, Int c) {
        ApproxPoly p(nvars);
        if (c != 0) p.terms_[{std::vector<int>(static_cast<std::size_t>(nvars), 0), 0}] = std::move(c);
        return p;
    }

    static ApproxPoly one(int nvars) { return constant(nvars, 1); }
    static ApproxPoly zero(int nvars) { return ApproxPoly(nvars); }

    static ApproxPoly var(int nvars, int s) {
        if (s < 1) return zero(nvars);
        if (s > nvars) return one(nvars);
        ApproxPoly p(nvars);
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(s - 1)] = 1;
        p.terms_[{std::move(e), 0}] = 1;
        return p;
    }

    static ApproxPoly q_power(int nvars, int e) {
        if (e < 0) throw std::invalid_argument("ApproxPoly: negative q exponent");
        ApproxPoly p(nvars);
        p.terms_[{std::vector<int>(static_cast<std::size_t>(nvars), 0), e}] = 1;
        return p;
    }

    int nvars() const { return nvars_; }

    friend ApproxPoly operator+(const ApproxPoly& a, const ApproxPoly& b) {
        a.check_same(b);
        ApproxPoly out = a;
        for (const auto& [key, c] : b.terms_) {
            auto [it, fresh] = out.terms_.try_emplace(key, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
        return out;
    }

    friend ApproxPoly operator-(const ApproxPoly& a, const ApproxPoly& b) { return a + (Int(-1) * b); }

    friend ApproxPoly operator*(const Int& c, const ApproxPoly& a) {
        ApproxPoly out(a.nvars_);
        if (c == 0) return out;
        for (const auto& [key, v] : a.terms_) out.terms_[key] = c * v;
        return out;
    }

    friend ApproxPoly operator*(const ApproxPoly& a, const ApproxPoly& b) {
        a.check_same(b);
        ApproxPoly out(a.nvars_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                std::vector<int> e = ka.first;
                for (std::size_t v = 0; v < e.size(); ++v) e[v] += kb.first[v];
                auto key = std::make_pair(std::move(e), ka.second + kb.second);
                auto [it, fresh] = out.terms_.try_emplace(std::move(key), ca * cb);
                if (!fresh) {
                    it->second += ca * cb;
                    if (it->second == 0) out.terms_.erase(it);
                }
            }
        return out;
    }

    SparsePoly sparse() const {
        SparsePoly out;
        out.reserve(terms_.size());
        for (const auto& [key, c] : terms_) out.push_back({c, key.first, key.second});
        return out;
    }

private:
    void check_same(const ApproxPoly& b) const {
        if (nvars_ != b.nvars_) throw std::invalid_argument("ApproxPoly: variable count mismatch");
    }

    int nvars_;
    std::map<std::pair<std::vector<int>, int>, Int> terms_;
};

inline Series approx_functional(int r, const ApproxPoly& poly, int order) {
    return approx_functional(r, poly.sparse(), order);
}

inline Series approx2_functional(int k, const ApproxPoly& poly, int order) {
    return approx2_functional(k, poly.sparse(), order);
}

// ---------------------------------------------------------------------------
// FFJMM labels: the s = 2 character, the tau/sigma label symmetries, and the
// label construction for the quasihomogeneous conjecture
// ---------------------------------------------------------------------------

struct FfjmmLabel {
    int p = 0;
    int p_prime = 0;
    std::vector<int> abar;
    std::vector<int> bbar;

    bool admissible() const {
        if (p < 0 || p_prime < 0 || p == p_prime) return false;
        if (abar.size() != bbar.size()) return false;
        long long sa = 0, sb = 0;
        for (int a : abar) {
            if (a < 0) return false;
            sa += a + 1;
        }
        for (int b : bbar) {
            if (b < 0) return false;
            sb += b + 1;
        }
        return p - 1 - sa >= 0 && p_prime - 1 - sb >= 0;
    }
};

// chi^{p,p'}_{a1,b1} = (q)_inf^{-1} * normalized character with label
// (a1 + 1, b1 + 1); valid for coprime p' > p > 1 and in-range a1, b1.
inline Series ffjmm_char_s2(int p, int p_prime, int a1, int b1, int order) {
    if (!(p_prime > p && p > 1))
        throw std::invalid_argument("ffjmm_char_s2: need p' > p > 1");
    if (std::gcd(p, p_prime) != 1)
        throw std::invalid_argument("ffjmm_char_s2: p and p' must be coprime");
    if (a1 < 0 || a1 > p - 2)
        throw std::invalid_argument("ffjmm_char_s2: need 0 <= a1 <= p - 2");
    if (b1 < 0 || b1 > p_prime - 2)
        throw std::invalid_argument("ffjmm_char_s2: need 0 <= b1 <= p' - 2");
    Series s = virasoro_char({p, p_prime, a1 + 1, b1 + 1}, order);
    for (int e = 1; e <= order; ++e) s.div_one_minus(e);
    return s;
}

// tau(c, m)_i = c_{i+1} and sigma(c, m)_i = c_{s+1-i}, where the extension
// c_s = m - s - sum c_i makes (c_1..c_s) a cyclic vector: tau shifts it and
// sigma reverses it.
inline std::pair<std::vector<int>, std::vector<int>> tau_sigma(const std::vector<int>& cbar, int m) {
    const int s = static_cast<int>(cbar.size()) + 1;
    long long sum = 0;
    for (int c : cbar) sum += c;
    std::vector<int> ext = cbar;
    ext.push_back(static_cast<int>(m - s - sum));
    std::vector<int> tau, sigma;
    tau.reserve(cbar.size());
    sigma.reserve(cbar.size());
    for (int i = 0; i + 1 < s; ++i) tau.push_back(ext[static_cast<std::size_t>(i + 1)]);
    for (int i = 0; i + 1 < s; ++i) sigma.push_back(ext[static_cast<std::size_t>(s - 1 - i)]);
    return {std::move(tau), std::move(sigma)};
}

enum class InverseRoute { Alpha, Beta };

// Label (p, p') = (alpha+beta, alpha+beta+r) with abar = 0 and bbar the
// multiplicity vector of the framing weights, re-indexed by the modular
// inverse of alpha (or of beta) and with the last coordinate dropped.
// Requires 0 <= w_i < alpha + beta.
inline FfjmmLabel conjecture1_label(const Cocharacter& c, InverseRoute route = InverseRoute::Alpha) {
    const int s = c.alpha() + c.beta();
    for (int w : c.weights())
        if (w < 0 || w >= s)
            throw std::invalid_argument("conjecture1_label: weights must satisfy 0 <= w_i < alpha + beta");
    std::vector<int> counts(static_cast<std::size_t>(s), 0);
    for (int w : c.weights()) counts[static_cast<std::size_t>(w)] += 1;
    const int unit = (route == InverseRoute::Alpha ? c.alpha() : c.beta()) % s;
    int inv = -1;
    for (int x = 1; x < s; ++x)
        if (unit * x % s == 1) {
            inv = x;
            break;
        }
    if (s == 1 || inv == -1) throw std::invalid_argument("conjecture1_label: no modular inverse");
    FfjmmLabel label;
    label.p = s;
    label.p_prime = s + c.rank();
    label.abar.assign(static_cast<std::size_t>(s - 1), 0);
    label.bbar.reserve(static_cast<std::size_t>(s - 1));
    for (int i = 0; i + 1 < s; ++i)
        label.bbar.push_back(counts[static_cast<std::size_t>(static_cast<long long>(inv) * i % s)]);
    return label;
}

}  // namespace qcensus
