#include "qcensus/bivariate.hpp"
#include "qcensus/serialize.hpp"
#include "qcensus/series.hpp"

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qcensus;
using qtest::S;

namespace {

Series random_series(std::mt19937& rng, int order, bool unit_constant = false) {
    Series s(order);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int k = 0; k <= order; ++k) s.coeff(k) = coeff(rng);
    if (unit_constant) s.coeff(0) = (rng() % 2) ? 1 : -1;
    return s;
}

}  // namespace

TEST_CASE("series multiplication") {
    REQUIRE(S({1, 1, 0}) * S({1, -1, 0}) == S({1, 0, -1}));
    REQUIRE(S({1, 1, 1}) * S({1, 1, 1}) == S({1, 2, 3}));
    Series a = S({3, -1, 4, 1, -5});
    REQUIRE(a * Series::one(a.order()) == a);
    SECTION("mixed orders truncate to the minimum") {
        REQUIRE((S({1, 2, 3, 4}) * S({1, 1})).order() == 1);
        REQUIRE((S({1, 2, 3, 4}) + S({1, 1})) == S({2, 3}));
    }
}

TEST_CASE("series inversion") {
    REQUIRE(S({1, -1, 0, 0}).inverse() == S({1, 1, 1, 1}));
    REQUIRE(Series::one(3).inverse() == Series::one(3));
    REQUIRE(poch_q(2, 4).inverse() == S({1, 1, 2, 2, 3}));
    REQUIRE_THROWS_AS(S({2, 1}).inverse(), std::domain_error);
    REQUIRE_THROWS_AS(S({0, 1}).inverse(), std::domain_error);
    SECTION("two-sided inverse up to order") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            Series a = random_series(rng, 12, true);
            REQUIRE(a * a.inverse() == Series::one(12));
            REQUIRE(a.inverse() * a == Series::one(12));
        }
    }
}

TEST_CASE("ring laws hold exactly at fixed order") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        Series a = random_series(rng, 12), b = random_series(rng, 12), c = random_series(rng, 12);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("residue products") {
    REQUIRE(residue_product(4, {1, 3}, ProductMode::Reciprocal, 1, 3) == S({1, 1, 1, 2}));
    REQUIRE(residue_product(1, {0}, ProductMode::Plus, 1, 5) == S({1, 1, 1, 2, 2, 3}));
    REQUIRE(residue_product(4, {2}, ProductMode::Reciprocal, 1, 4) == S({1, 0, 1, 0, 1}));
    REQUIRE_THROWS_AS(residue_product(0, {0}, ProductMode::Plus, 1, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(residue_product(4, {4}, ProductMode::Plus, 1, 3), std::invalid_argument);
    SECTION("Euler: prod(1+q^n) = 1/prod(1-q^{2n-1}) to order 30") {
        Series plus = residue_product(1, {0}, ProductMode::Plus, 1, 30);
        Series odd_minus = residue_product(2, {1}, ProductMode::Minus, 1, 30);
        REQUIRE(plus == odd_minus.inverse());
    }
}

TEST_CASE("pochhammer products") {
    REQUIRE(poch_q(2, 3) == S({1, -1, -1, 1}));
    REQUIRE(poch_neg_q_inf(4) == S({1, 1, 1, 2, 2}));
    REQUIRE(pochhammer(2, -1, 1, 4) == S({1, 0, 1, 0, 0}));
    REQUIRE(pochhammer(5, 1, 0, 3) == Series::one(3));  // empty product
    REQUIRE_THROWS_AS(pochhammer(0, 1, 2, 5), std::domain_error);
    REQUIRE_THROWS_AS(pochhammer(0, 1, kInfinite, 5), std::domain_error);
}

TEST_CASE("q_poch_lambda") {
    REQUIRE(q_poch_lambda({1, 0}, 2) == S({1, -1, 0}));
    REQUIRE(q_poch_lambda({2, 1}, 2) == S({1, -2, 1}));
    REQUIRE(q_poch_lambda({0, 0, 0}, 2) == Series::one(2));
    REQUIRE(q_poch_lambda({}, 2) == Series::one(2));
    REQUIRE_THROWS_AS(q_poch_lambda({1, 2}, 4), std::domain_error);
    REQUIRE_THROWS_AS(q_poch_lambda({2, -1}, 4), std::domain_error);
}

TEST_CASE("q-binomials") {
    REQUIRE(q_binomial(4, 2) == S({1, 1, 2, 1, 1}));
    REQUIRE(q_binomial(7, 0) == Series::one(0));
    REQUIRE(q_binomial(3, 5).is_zero());
    REQUIRE(q_binomial(3, -1).is_zero());
    SECTION("Pascal-type recursion for 0 <= N <= M <= 12") {
        for (int m = 1; m <= 12; ++m)
            for (int n = 0; n <= m; ++n) {
                const int deg = std::max(1, n * (m - n));
                Series lhs = q_binomial(m, n).padded(deg);
                Series rhs = q_binomial(m - 1, n).padded(deg) +
                             Series::monomial(m - n, 1, deg) * q_binomial(m - 1, n - 1).padded(deg);
                REQUIRE(lhs == rhs);
            }
    }
}

TEST_CASE("series serialization") {
    Series s = S({1, 0, -2});
    Json j = series_to_json(s);
    REQUIRE(j["order"] == 2);
    REQUIRE(j["coeffs"] == Json::array({1, 0, -2}));
    REQUIRE(series_to_csv(s) == "degree,coefficient\n0,1\n1,0\n2,-2\n");
    SECTION("huge coefficients fall back to decimal strings") {
        Series big(0);
        big.coeff(0) = Int("123456789012345678901234567890");
        REQUIRE(series_to_json(big)["coeffs"][0] == "123456789012345678901234567890");
    }
}

TEST_CASE("bivariate arithmetic") {
    SECTION("inverse with respect to t") {
        Bivariate one_minus_t = Bivariate::one(4);
        one_minus_t.mul_linear_factor(0, 1, -1);  // 1 - t
        Bivariate inv = one_minus_t.inverse();
        for (int td = 0; td <= 4; ++td) REQUIRE(inv[td] == QPoly{Int(1)});
        REQUIRE((one_minus_t * inv) == Bivariate::one(4));
    }
    SECTION("inverse requires a unit t-constant") {
        Bivariate b = Bivariate::one(3);
        b.coeff(0) = {Int(1), Int(1)};  // 1 + q
        REQUIRE_THROWS_AS(b.inverse(), std::domain_error);
    }
    SECTION("q-cap drops high q-degrees") {
        Bivariate capped = Bivariate::one(2, 1);
        capped.mul_linear_factor(1, 1, 1);  // 1 + q t
        Bivariate square = capped * capped;  // (1 + q t)^2 with q-degrees capped at 1
        REQUIRE(square[1] == QPoly{Int(0), Int(2)});
        REQUIRE(square[2].empty());  // the q^2 t^2 term falls above the cap
    }
}

TEST_CASE("bivariate products") {
    SECTION("empty factor list") {
        REQUIRE(bivariate_product({}, 3) == Bivariate::one(3));
    }
    SECTION("conjectured rank-2 product, equal weights, to t^2") {
        std::vector<ProductFactorFamily> families = {
            {4, {1, 2, 3}, 0, -1, false},
            {4, {1, 2, 3}, 1, -1, false},
            {4, {0}, 1, -1, false},
            {4, {0}, 2, -1, false},
        };
        Bivariate rhs = bivariate_product(families, 2);
        REQUIRE(rhs[0] == QPoly{Int(1)});
        REQUIRE(rhs[1] == QPoly{Int(1), Int(1)});
        REQUIRE(rhs[2] == QPoly{Int(2), Int(2), Int(1)});
    }
    SECTION("rank-1 product with alpha + beta = 3: t^3 coefficient is 2 + q") {
        std::vector<ProductFactorFamily> families = {
            {3, {1, 2}, 0, -1, false},
            {3, {0}, 1, -1, false},
        };
        Bivariate rhs = bivariate_product(families, 3);
        REQUIRE(rhs[3] == QPoly{Int(2), Int(1)});
    }
    SECTION("validation") {
        REQUIRE_THROWS_AS(bivariate_product({{0, {0}, 0, -1, false}}, 2), std::domain_error);
        REQUIRE_THROWS_AS(bivariate_product({{2, {1}, 0, 0, false}}, 2), std::invalid_argument);
        REQUIRE_THROWS_AS(bivariate_product({{2, {2}, 0, -1, false}}, 2), std::invalid_argument);
    }
    SECTION("serialization") {
        Bivariate b = bivariate_product({{1, {0}, 1, -1, false}}, 2);  // 1/(1 - q t^n)
        Json j = bivariate_to_json(b);
        REQUIRE(j["t_order"] == 2);
        REQUIRE(j["q_cap"].is_null());
        REQUIRE(bivariate_to_csv(b).rfind("t_degree,q_degree,coefficient\n", 0) == 0);
    }
}
