#include <doctest.h>

#include "jradii/sqrt_rational.hpp"

#include <random>

using namespace jradii;

TEST_SUITE_BEGIN("numerics");

TEST_CASE("construction reduces and validates") {
    SqrtRational a(6, 24);
    CHECK(a.num() == 1);
    CHECK(a.den() == 4);
    CHECK(SqrtRational(0, 7).num() == 0);
    CHECK(SqrtRational(0, 7).den() == 1);
    CHECK_THROWS_AS(SqrtRational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(SqrtRational(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(SqrtRational(1, -2), std::invalid_argument);
}

TEST_CASE("multiplication on known values") {
    CHECK(SqrtRational(1, 2) * SqrtRational(1, 2) == SqrtRational(1, 4));
    // duality product at d=5, j=2: sqrt(d/j) * sqrt(j/d) = 1
    CHECK(SqrtRational(5, 2) * SqrtRational(2, 5) == SqrtRational::one());
    CHECK(SqrtRational(2, 3) * SqrtRational(3, 8) == SqrtRational(1, 4));
}

TEST_CASE("ordering compares exact squares") {
    CHECK(SqrtRational(3, 8) > SqrtRational(1, 3));
    CHECK(SqrtRational(0, 1) == SqrtRational(0, 5));
    CHECK(SqrtRational(5, 9) > SqrtRational(4, 9));
    CHECK(SqrtRational(1, 3) < SqrtRational(3, 8));
}

TEST_CASE("value is accurate") {
    CHECK(SqrtRational(1, 4).value() == 0.5);
    CHECK(SqrtRational(9, 1).value() == 3.0);
    CHECK(SqrtRational(2, 1).value() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    // big integers survive the double rendering
    BigInt big = BigInt(1) << 200;
    CHECK(SqrtRational(big * 4, big).value() == 2.0);
}

TEST_CASE("rendering") {
    CHECK(SqrtRational(3, 4).str() == "sqrt(3/4)");
    CHECK(SqrtRational(5, 1).str() == "sqrt(5)");
    CHECK((SqrtRational(5, 2) * SqrtRational(2, 5)).str() == "sqrt(1)");
}

TEST_CASE("multiplication is commutative and associative on random reduced inputs") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> dist(0, 5000);
    for (int i = 0; i < 1000; ++i) {
        SqrtRational a(dist(rng), dist(rng) + 1);
        SqrtRational b(dist(rng), dist(rng) + 1);
        SqrtRational c(dist(rng), dist(rng) + 1);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        // always reduced
        SqrtRational p = a * b;
        CHECK(boost::multiprecision::gcd(p.num(), p.den()) == 1);
        CHECK(p.den() > 0);
    }
}

TEST_SUITE_END();
