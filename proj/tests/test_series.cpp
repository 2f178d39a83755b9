#include <catch2/catch_amalgamated.hpp>

#include "chamber/series.hpp"

using namespace chamber;

TEST_CASE("elementary series have the textbook coefficients", "[series]") {
    PowerSeries cos = PowerSeries::cos_x(6);
    CHECK(cos.coeff(0) == Rat(1));
    CHECK(cos.coeff(1) == Rat(0));
    CHECK(cos.coeff(2) == Rat(-1, 2));
    CHECK(cos.coeff(4) == Rat(1, 24));
    CHECK(cos.coeff(6) == Rat(-1, 720));

    PowerSeries sin = PowerSeries::sin_x(5);
    CHECK(sin.coeff(1) == Rat(1));
    CHECK(sin.coeff(3) == Rat(-1, 6));
    CHECK(sin.coeff(5) == Rat(1, 120));

    PowerSeries exp_neg = PowerSeries::exp_x(4, -1);
    CHECK(exp_neg.coeff(0) == Rat(1));
    CHECK(exp_neg.coeff(1) == Rat(-1));
    CHECK(exp_neg.coeff(2) == Rat(1, 2));
    CHECK(exp_neg.coeff(3) == Rat(-1, 6));

    PowerSeries cosh2 = PowerSeries::cosh_x(4, 2);
    CHECK(cosh2.coeff(2) == Rat(2));      // 4/2!
    CHECK(cosh2.coeff(4) == Rat(2, 3));   // 16/4!
}

TEST_CASE("reciprocal inverts multiplicatively", "[series]") {
    PowerSeries f = PowerSeries::cos_x(10) - PowerSeries::sin_x(10);
    PowerSeries product = f * f.reciprocal();
    CHECK(product.coeff(0) == Rat(1));
    for (int k = 1; k <= 10; ++k) CHECK(product.coeff(k) == Rat(0));
}

TEST_CASE("reciprocal requires a unit constant term", "[series]") {
    CHECK_THROWS_AS(PowerSeries::sin_x(4).reciprocal(), std::invalid_argument);
}

TEST_CASE("egf_integer_coeffs rejects non-integers", "[series]") {
    PowerSeries half = PowerSeries::constant(Rat(1, 2), 3);
    CHECK_THROWS_AS(half.egf_integer_coeffs(), std::runtime_error);
}
