#include <ogf/series.hpp>

#include <doctest.h>

#include "testutil.hpp"

#include <stdexcept>

using namespace ogf;
using namespace testutil;

TEST_CASE("construction zero-pads and keeps coefficients canonical") {
    CHECK(S({1, 1}, 4) == S({1, 1, 0, 0, 0}, 4));
    CHECK(S({0, 1, 1}, 3).coeff(2) == 1);
    CHECK(SQ({"1/2", "-2/4"}, 2) == SQ({"1/2", "-1/2", "0"}, 2));
    CHECK_THROWS_AS(Series({}, -1), std::invalid_argument);
    CHECK_THROWS_AS(S({1, 2, 3}, 1), std::invalid_argument);
    CHECK_THROWS_AS(S({1}, 1).coeff(2), std::out_of_range);
    CHECK_THROWS_AS(S({1}, 1).coeff(-1), std::out_of_range);
}

TEST_CASE("additive structure") {
    std::mt19937 rng(101);
    const Series s = random_series(rng, 8);
    CHECK((s + Rational(-1) * s).is_zero());
    CHECK(s - s == Series::zero(8));
    // mixed orders re-truncate to the smaller one
    CHECK((S({1, 2, 3}, 4) + S({1}, 2)).order() == 2);
}

TEST_CASE("multiplication examples") {
    const Series geo = S({1, 1, 1, 1}, 3);     // 1/(1-x)
    const Series one_minus = S({1, -1}, 3);
    CHECK(geo * one_minus == Series::one(3));

    const Series g = S({0, 1, 1}, 4);          // x + x^2
    CHECK(g * g == S({0, 0, 1, 2, 1}, 4));
}

TEST_CASE("multiplication commutes (random)") {
    std::mt19937 rng(102);
    for (int rep = 0; rep < 25; ++rep) {
        const Series a = random_series(rng, 12);
        const Series b = random_series(rng, 12);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("pow_trunc matches examples and the repeated-product oracle") {
    const Series xg = S({0, 1, 1, 1, 1, 1}, 5);  // x/(1-x)
    CHECK(pow_trunc(xg, 3) == S({0, 0, 0, 1, 3, 6}, 5));
    CHECK(pow_trunc(S({0, 1, 1}, 4), 2) == S({0, 0, 1, 2, 1}, 4));

    std::mt19937 rng(103);
    for (int rep = 0; rep < 10; ++rep) {
        const Series a = random_series(rng, 12);
        CHECK(pow_trunc(a, 0) == Series::one(12));
        for (int k = 1; k <= 8; ++k) CHECK(pow_trunc(a, k) == naive_power(a, k));
    }
    CHECK_THROWS_AS(pow_trunc(xg, -1), std::invalid_argument);
}

TEST_CASE("derivative") {
    CHECK(derivative(S({0, 1, 1, 2, 5}, 4)) == S({1, 2, 6, 20}, 3));
    CHECK(derivative(S({7}, 3)) == Series::zero(2));
    CHECK(derivative(SQ({"0", "1", "0", "-1/3", "0", "1/5"}, 5)) ==
          S({1, 0, -1, 0, 1}, 4));
    CHECK_THROWS_AS(derivative(S({1}, 0)), std::invalid_argument);
}

TEST_CASE("integrate0") {
    CHECK(integrate0(S({1, 2, 6}, 2)) == S({0, 1, 1, 2}, 3));
    CHECK(integrate0(Series::zero(3)) == Series::zero(4));
    CHECK(integrate0(S({1, 1, 2, 5, 14}, 4)) ==
          SQ({"0", "1", "1/2", "2/3", "5/4", "14/5"}, 5));
}

TEST_CASE("derivative undoes integrate0 (random)") {
    std::mt19937 rng(104);
    for (int rep = 0; rep < 25; ++rep) {
        const Series a = random_series(rng, 10);
        CHECK(derivative(integrate0(a)) == a);
    }
}

TEST_CASE("reciprocal") {
    CHECK(reciprocal(S({1, -1}, 4)) == S({1, 1, 1, 1, 1}, 4));
    CHECK(reciprocal(Series::one(3)) == Series::one(3));
    // (1-2x)/(1-x) expands to 1 - x - x^2 - x^3; its reciprocal is (1-x)/(1-2x)
    CHECK(reciprocal(S({1, -1, -1, -1}, 3)) == S({1, 1, 2, 4}, 3));
    CHECK_THROWS_WITH_AS(reciprocal(S({0, 1}, 1)), "not invertible as a power series",
                         std::invalid_argument);
}

TEST_CASE("reciprocal multiplies back to one (random)") {
    std::mt19937 rng(105);
    for (int rep = 0; rep < 25; ++rep) {
        const Series a = random_series_with_c0(rng, 12, random_nonzero_rational(rng));
        CHECK(a * reciprocal(a) == Series::one(12));
    }
}

TEST_CASE("compose") {
    const Series s = SQ({"1", "-2/3", "0", "5"}, 3);
    CHECK(compose(s, Series::x(3)) == s);

    // outer = ln(1-x) + 2x, inner = (1-sqrt(1-4x))/2: the composition is the
    // antiderivative of the Catalan generating function
    const Series outer = SQ({"0", "1", "-1/2", "-1/3", "-1/4", "-1/5"}, 5);
    const Series inner = S({0, 1, 1, 2, 5, 14}, 5);
    CHECK(compose(outer, inner) == SQ({"0", "1", "1/2", "2/3", "5/4", "14/5"}, 5));

    CHECK(compose(S({1, 1, 1, 1}, 3), S({0, 1, -1, 1}, 3)) == S({1, 1}, 3));
    CHECK_THROWS_AS(compose(s, Series::one(3)), std::invalid_argument);
}

TEST_CASE("revert examples") {
    CHECK(revert(Series::x(3)) == Series::x(3));
    CHECK(revert(S({0, 1, 1, 1, 1, 1}, 5)) == S({0, 1, -1, 1, -1, 1}, 5));
    // C = x + C^2, so the inverse of the Catalan series is t - t^2
    CHECK(revert(S({0, 1, 1, 2, 5}, 4)) == S({0, 1, -1, 0, 0}, 4));
    CHECK_THROWS_WITH_AS(revert(S({1, 1}, 1)), "no compositional inverse", std::invalid_argument);
    CHECK_THROWS_WITH_AS(revert(S({0, 0, 1}, 2)), "no compositional inverse", std::invalid_argument);
}

TEST_CASE("revert composes back to x (random)") {
    std::mt19937 rng(106);
    for (int rep = 0; rep < 20; ++rep) {
        Series a = random_series(rng, 9);
        std::vector<Rational> c = a.coeffs();
        c[0] = 0;
        c[1] = random_nonzero_rational(rng);
        a = Series(std::move(c), 9);
        const Series w = revert(a);
        CHECK(compose(a, w) == Series::x(9));
        CHECK(compose(w, a) == Series::x(9));
    }
}

TEST_CASE("mul_x and div_x") {
    const Series s = SQ({"1", "1/2"}, 1);
    CHECK(div_x(mul_x(s)) == s);
    CHECK(mul_x(s) == SQ({"0", "1", "1/2"}, 2));
    CHECK_THROWS_AS(div_x(S({1, 1}, 1)), std::invalid_argument);
    CHECK_THROWS_AS(div_x(S({1}, 0)), std::invalid_argument);
}

TEST_CASE("resized pads and truncates") {
    const Series s = S({1, 2, 3}, 2);
    CHECK(s.resized(4) == S({1, 2, 3, 0, 0}, 4));
    CHECK(s.resized(1) == S({1, 2}, 1));
    CHECK(s.resized(2) == s);
}
