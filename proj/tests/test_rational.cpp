#include "dgcalc/rational.hpp"

#include <doctest.h>
#include <random>

using dgcalc::BigInt;
using dgcalc::Rational;

TEST_CASE("bigint small arithmetic matches long long") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> dist(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        long long a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).str() == std::to_string(a + b));
        CHECK((BigInt(a) - BigInt(b)).str() == std::to_string(a - b));
        CHECK((BigInt(a) * BigInt(b)).str() == std::to_string(a * b));
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).str() == std::to_string(a / b));
            CHECK((BigInt(a) % BigInt(b)).str() == std::to_string(a % b));
        }
    }
}

TEST_CASE("bigint divmod identity on large operands") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long long> dist(1, 1ll << 62);
    for (int i = 0; i < 400; ++i) {
        BigInt a(dist(rng));
        for (int k = 0; k < 4; ++k) a = a * BigInt(dist(rng));
        BigInt b(dist(rng));
        if (i % 3 == 0) b = b * BigInt(dist(rng));
        if (i % 2 == 0) a = -a;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
    }
}

TEST_CASE("bigint factorial round trip") {
    BigInt f(1);
    for (long long i = 2; i <= 30; ++i) f = f * BigInt(i);
    CHECK(f.str() == "265252859812191058636308480000000");
    CHECK(BigInt::from_decimal(f.str()) == f);
    for (long long i = 2; i <= 30; ++i) f = f / BigInt(i);
    CHECK(f.str() == "1");
}

TEST_CASE("rational normalization and arithmetic") {
    Rational a = Rational::from_string("6/4");
    CHECK(a.str() == "3/2");
    Rational b = Rational::from_string("-2/6");
    CHECK(b.str() == "-1/3");
    CHECK((a + b).str() == "7/6");
    CHECK((a * b).str() == "-1/2");
    CHECK((a / b).str() == "-9/2");
    CHECK((b - b).is_zero());
    CHECK(Rational(0).str() == "0");
    CHECK_THROWS(Rational(BigInt(1), BigInt(0)));
}
