#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhv/errors.hpp"
#include "mhv/scalar.hpp"

using namespace mhv;

TEST_CASE("parse and canonical rendering") {
    CHECK(Scalar::parse("2/4").str() == "1/2");
    CHECK(Scalar::parse("-6/4").str() == "-3/2");
    CHECK(Scalar::parse("7").str() == "7");
    CHECK(Scalar::parse("+3/9").str() == "1/3");
    CHECK(Scalar::parse("0/5").str() == "0");
    CHECK(Scalar(4, -6).str() == "-2/3"); // denominator normalized positive
}

TEST_CASE("rejects non-rational literals") {
    for (const char* bad : {"1.5", "x", "", "1/", "/2", "1e3", "2 /3", "--1"}) {
        CHECK_THROWS_AS(Scalar::parse(bad), MhvError);
    }
    CHECK_THROWS_WITH_AS(Scalar::parse("3/0"), doctest::Contains("DivisionByZero"), MhvError);
}

TEST_CASE("arithmetic is exact and overflow-free") {
    // 1/1 + 1/2 + ... + 1/40 has a huge denominator; everything stays exact.
    Scalar sum(0);
    for (long long k = 1; k <= 40; ++k) sum += Scalar(1, k);
    Scalar back(0);
    for (long long k = 40; k >= 1; --k) back += Scalar(1, k);
    CHECK(sum == back);
    CHECK(!sum.is_integer());

    Scalar big = Scalar(10).pow(30) + Scalar(1);
    CHECK(big - Scalar(10).pow(30) == Scalar(1));
    CHECK((Scalar(2, 3) * Scalar(3, 2)).is_one());
    CHECK(Scalar(5, 7) / Scalar(5, 7) == Scalar(1));
}

TEST_CASE("powers") {
    CHECK(Scalar(2).pow(10) == Scalar(1024));
    CHECK(Scalar(2).pow(-3) == Scalar(1, 8));
    CHECK(Scalar(-2, 3).pow(3) == Scalar(-8, 27));
    CHECK(Scalar(0).pow(0) == Scalar(1));
    CHECK_THROWS_AS(Scalar(0).pow(-1), MhvError);
}

TEST_CASE("binomial") {
    CHECK(Scalar::binomial(6, 3) == Scalar(20));
    CHECK(Scalar::binomial(5, 0) == Scalar(1));
    CHECK(Scalar::binomial(5, 7) == Scalar(0));
    CHECK(Scalar::binomial(5, -1) == Scalar(0));
}

TEST_CASE("half-index helper") {
    CHECK(half(-11).str() == "-11/2");
    CHECK(half(4).str() == "2");
}
