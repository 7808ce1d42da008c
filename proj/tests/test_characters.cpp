#include "qcensus/characters.hpp"

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qcensus;
using qtest::S;

TEST_CASE("conformal dimensions") {
    REQUIRE(conformal_dimension({2, 5, 1, 1}) == Rational(0));
    REQUIRE(conformal_dimension({2, 5, 1, 2}) == Rational(-1, 5));
    SECTION("invariant under label reflection") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 30; ++trial) {
            const int p = 2 + static_cast<int>(rng() % 5);
            const int pp = p + 1 + static_cast<int>(rng() % 5);
            const int r = 1 + static_cast<int>(rng() % (p - 1));
            const int s = 1 + static_cast<int>(rng() % (pp - 1));
            REQUIRE(conformal_dimension({p, pp, r, s}) ==
                    conformal_dimension({p, pp, p - r, pp - s}));
        }
    }
}

TEST_CASE("normalized characters") {
    REQUIRE(virasoro_char({2, 5, 1, 2}, 4) == S({1, 1, 1, 1, 2}));
    REQUIRE(virasoro_char({2, 4, 1, 2}, 5) == S({1, 1, 0, 1, 1, 1}));
    REQUIRE(virasoro_char({2, 4, 1, 1}, 4) == S({1, 0, 1, 0, 1}));
    REQUIRE_THROWS_AS(virasoro_char({2, 5, 2, 1}, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(virasoro_char({5, 2, 1, 1}, 4), std::invalid_argument);
    SECTION("reflection symmetry at order 20") {
        REQUIRE(virasoro_char({2, 5, 1, 2}, 20) == virasoro_char({2, 5, 1, 3}, 20));
        REQUIRE(virasoro_char({3, 4, 1, 2}, 20) == virasoro_char({3, 4, 2, 2}, 20));
    }
    SECTION("Rogers-Ramanujan product form") {
        REQUIRE(virasoro_char({2, 5, 1, 2}, 20) ==
                residue_product(5, {1, 4}, ProductMode::Reciprocal, 1, 20));
    }
}

TEST_CASE("product side of the component-count identity") {
    REQUIRE(theorem1_rhs(1, 0, 5) == S({1, 1, 1, 2, 2, 3}));
    REQUIRE(theorem1_rhs(3, 1, 4) == S({1, 2, 3, 5, 8}));
    REQUIRE(theorem1_rhs(2, 0, 4) == S({1, 1, 2, 3, 4}));
    REQUIRE(theorem1_rhs(2, 2, 8) == theorem1_rhs(2, 0, 8));  // m = r mirrors m = 0
    REQUIRE_THROWS_AS(theorem1_rhs(2, 3, 4), std::invalid_argument);
    SECTION("for odd rank the restricted product is a normalized character") {
        for (int r : {1, 3, 5})
            for (int m = 0; m <= r; ++m)
                REQUIRE(theorem1_rhs(r, m, 16) ==
                        poch_neg_q_inf(16) * virasoro_char({2, r + 2, 1, m + 1}, 16));
    }
}

TEST_CASE("fermionic sums") {
    REQUIRE(fermionic_rho_sum(1, 0, 5) == S({1, 1, 1, 2, 2, 3}));
    REQUIRE(fermionic_rho_sum(2, 1, 3) == S({1, 2, 2, 4}));
    REQUIRE_THROWS_AS(fermionic_rho_sum(2, 2, 3), std::invalid_argument);
    SECTION("coefficients count S(r,m) tuples") {
        for (int r = 1; r <= 4; ++r)
            for (int m = 0; m <= r - 1; ++m) {
                Series sum = fermionic_rho_sum(r, m, 8);
                for (int n = 0; n <= 8; ++n)
                    REQUIRE(sum[n] == Int(count_s_tuples(r, m, n)));
            }
    }
    SECTION("alternative factor indexing agrees") {
        for (int r = 1; r <= 4; ++r)
            for (int m = 0; m <= r - 1; ++m)
                REQUIRE(fermionic_rho_sum(r, m, 10) == fermionic_alt_sum(r, m, 10));
    }
    SECTION("half-rank reductions") {
        REQUIRE(reduced_sum_even(1, 1, 3) == S({1, 2, 2, 4}));
        REQUIRE(reduced_sum_even(1, 0, 3) == S({1, 1, 2, 3}));
        for (int k = 1; k <= 2; ++k)
            for (int m = 0; m <= k; ++m) {
                REQUIRE(reduced_sum_odd(k, m, 10) == fermionic_rho_sum(2 * k + 1, m, 10));
                REQUIRE(reduced_sum_even(k, m, 10) == fermionic_rho_sum(2 * k, m, 10));
            }
        // rank 1 corresponds to k = 0 with an empty inner sum
        REQUIRE(reduced_sum_odd(0, 0, 6) == fermionic_rho_sum(1, 0, 6));
    }
}

TEST_CASE("Andrews J functions") {
    REQUIRE(andrews_j(2, 2, 0, 4) == S({1, 1, 1, 1, 2}));
    REQUIRE(andrews_j(1, 1, 0, 3) == Series::one(3));
    REQUIRE_THROWS_AS(andrews_j(2, 3, 0, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(andrews_j(2, 2, -1, 4), std::invalid_argument);
    SECTION("contiguous relation") {
        for (int k = 2; k <= 4; ++k)
            for (int i = 2; i <= k; ++i) {
                Series lhs = andrews_j(k, i, 0, 12) - andrews_j(k, i - 1, 0, 12);
                Series rhs = Series::monomial(i - 1, 1, 12) * andrews_j(k, k - i + 1, 1, 12);
                REQUIRE(lhs == rhs);
            }
    }
    SECTION("product form at modulus 2k + 3") {
        for (int k = 1; k <= 2; ++k)
            for (int m = 0; m <= k; ++m) {
                std::set<int> allowed;
                for (int res = 1; res < 2 * k + 3; ++res)
                    if (res != m + 1 && res != 2 * k + 2 - m) allowed.insert(res);
                REQUIRE(andrews_j(k + 1, m + 1, 0, 12) ==
                        residue_product(2 * k + 3, allowed, ProductMode::Reciprocal, 1, 12));
            }
    }
}

TEST_CASE("Corteel E functions") {
    REQUIRE(corteel_e(1, 2, -1, 2) == S({2, 3, 4}));
    REQUIRE(corteel_e(1, 1, -1, 3) == S({1, 1, 2, 3}));
    REQUIRE_THROWS_AS(corteel_e(1, 2, -2, 3), std::domain_error);
    REQUIRE_THROWS_AS(corteel_e(1, 2, 1, 3), std::domain_error);
    REQUIRE_THROWS_AS(corteel_e(1, 3, -1, 3), std::invalid_argument);
}

TEST_CASE("summation functionals") {
    REQUIRE(approx_functional(1, ApproxPoly::one(1), 5) == S({1, 1, 1, 2, 2, 3}));
    REQUIRE(approx2_functional(1, ApproxPoly::one(1), 2) == S({2, 3, 4}));
    SECTION("input validation") {
        SparsePoly bad_len = {{Int(1), {0, 0}, 0}};
        REQUIRE_THROWS_AS(approx_functional(1, bad_len, 4), std::invalid_argument);
        SparsePoly bad_exp = {{Int(1), {-1}, 0}};
        REQUIRE_THROWS_AS(approx_functional(1, bad_exp, 4), std::invalid_argument);
        SparsePoly bad_q = {{Int(1), {0}, -2}};
        REQUIRE_THROWS_AS(approx_functional(1, bad_q, 4), std::invalid_argument);
    }
    SECTION("shift lemma, boundary case x_0 = 0") {
        const int r = 2;
        ApproxPoly lhs = ApproxPoly::var(r, 1) *
                         (ApproxPoly::one(r) + ApproxPoly::q_power(r, 1) * ApproxPoly::var(r, 2));
        ApproxPoly rhs = ApproxPoly::var(r, 2);
        REQUIRE(approx_functional(r, lhs - rhs, 10).is_zero());
    }
    SECTION("even-case main transformation instance") {
        const int k = 2, m = 1;
        ApproxPoly lhs = ApproxPoly::var(k, 2);  // prod_{i>m} x_i
        ApproxPoly bracket = Int(2) * ApproxPoly::one(k) +
                             ApproxPoly::q_power(k, 1) * ApproxPoly::var(k, 2);
        ApproxPoly rhs = bracket * ApproxPoly::var(k, 1) * ApproxPoly::var(k, 2);
        REQUIRE(approx2_functional(k, lhs - rhs, 10).is_zero());
    }
}

TEST_CASE("FFJMM characters at s = 2") {
    SECTION("composition of the two formulas") {
        Series lhs = ffjmm_char_s2(3, 4, 0, 0, 6);
        Series rhs = virasoro_char({3, 4, 1, 1}, 6);
        for (int e = 1; e <= 6; ++e) rhs.div_one_minus(e);
        REQUIRE(lhs == rhs);
        REQUIRE(ffjmm_char_s2(2, 5, 0, 1, 8) ==
                inv_poch_q_inf(8) * virasoro_char({2, 5, 1, 2}, 8));
    }
    REQUIRE_THROWS_AS(ffjmm_char_s2(2, 4, 0, 1, 4), std::invalid_argument);  // gcd 2
    REQUIRE_THROWS_AS(ffjmm_char_s2(1, 3, 0, 0, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(ffjmm_char_s2(2, 5, 1, 1, 4), std::invalid_argument);  // a1 > p - 2
    REQUIRE_THROWS_AS(ffjmm_char_s2(2, 5, 0, 4, 4), std::invalid_argument);  // b1 > p' - 2
}

TEST_CASE("tau and sigma label transforms") {
    auto [tau, sigma] = tau_sigma({1, 2}, 10);
    REQUIRE(tau == std::vector<int>{2, 4});
    REQUIRE(sigma == std::vector<int>{4, 2});
    SECTION("sigma is an involution, tau has order s") {
        std::mt19937 rng(17);
        for (int trial = 0; trial < 30; ++trial) {
            const int len = 1 + static_cast<int>(rng() % 4);
            const int m = static_cast<int>(rng() % 20);
            std::vector<int> c(static_cast<std::size_t>(len));
            for (int& v : c) v = static_cast<int>(rng() % 5);
            REQUIRE(tau_sigma(tau_sigma(c, m).second, m).second == c);
            std::vector<int> iter = c;
            for (int reps = 0; reps < len + 1; ++reps) iter = tau_sigma(iter, m).first;
            REQUIRE(iter == c);
        }
    }
}

TEST_CASE("quasihomogeneous label construction") {
    SECTION("pinned examples") {
        auto lab = conjecture1_label(Cocharacter(1, 1, Cocharacter::ones_vector(5, 2)));
        REQUIRE(lab.p == 2);
        REQUIRE(lab.p_prime == 7);
        REQUIRE(lab.abar == std::vector<int>{0});
        REQUIRE(lab.bbar == std::vector<int>{3});  // r - m

        lab = conjecture1_label(Cocharacter(1, 2, {0}));
        REQUIRE(lab.p == 3);
        REQUIRE(lab.p_prime == 4);
        REQUIRE(lab.bbar == std::vector<int>{1, 0});

        lab = conjecture1_label(Cocharacter(2, 3, {0}));
        REQUIRE(lab.p == 5);
        REQUIRE(lab.p_prime == 6);
        REQUIRE(lab.bbar == std::vector<int>{1, 0, 0, 0});
    }
    SECTION("weights out of range are rejected") {
        REQUIRE_THROWS_AS(conjecture1_label(Cocharacter(1, 1, {2, 0})), std::invalid_argument);
        REQUIRE_THROWS_AS(conjecture1_label(Cocharacter(1, 2, {-1})), std::invalid_argument);
    }
    SECTION("labels are always admissible") {
        std::mt19937 rng(29);
        for (int trial = 0; trial < 40; ++trial) {
            const int alpha = 1 + static_cast<int>(rng() % 4);
            int beta = 1 + static_cast<int>(rng() % 4);
            while (std::gcd(alpha, beta) != 1) ++beta;
            const int s = alpha + beta;
            const int r = 1 + static_cast<int>(rng() % 4);
            std::vector<int> w(static_cast<std::size_t>(r));
            for (int& v : w) v = static_cast<int>(rng() % s);
            REQUIRE(conjecture1_label(Cocharacter(alpha, beta, w)).admissible());
        }
    }
    SECTION("the beta-inverse route lands in the tau/sigma orbit") {
        std::mt19937 rng(31);
        for (int trial = 0; trial < 40; ++trial) {
            const int alpha = 1 + static_cast<int>(rng() % 4);
            int beta = 1 + static_cast<int>(rng() % 4);
            while (std::gcd(alpha, beta) != 1) ++beta;
            const int s = alpha + beta;
            const int r = 1 + static_cast<int>(rng() % 4);
            std::vector<int> w(static_cast<std::size_t>(r));
            for (int& v : w) v = static_cast<int>(rng() % s);
            Cocharacter c(alpha, beta, w);
            FfjmmLabel via_alpha = conjecture1_label(c, InverseRoute::Alpha);
            FfjmmLabel via_beta = conjecture1_label(c, InverseRoute::Beta);
            // beta route = sigma applied after tau, acting with m = p'
            auto shifted = tau_sigma(via_alpha.bbar, via_alpha.p_prime).first;
            auto expected = tau_sigma(shifted, via_alpha.p_prime).second;
            REQUIRE(via_beta.bbar == expected);
            REQUIRE(via_beta.admissible());
        }
    }
}
