#include <doctest.h>

#include "edcert/arith.hpp"
#include "edcert/factor.hpp"
#include "support/generators.hpp"

using namespace edcert;
using edcert::testing::Rng;

namespace {

BigInt multiply_back(const Factorization& f) {
    BigInt r = 1;
    for (const auto& [p, e] : f.primes) r *= testing::ipow(p, e);
    for (const auto& c : f.unfactored) r *= c;
    return r;
}

} // namespace

TEST_CASE("gcd") {
    CHECK(gcd(12, 8) == 4);
    CHECK(gcd(0, 0) == 0);
    CHECK(gcd(0, -17) == 17);
    CHECK(gcd(-12, 18) == 6);
    CHECK(gcd(205, 4) == 1);
}

TEST_CASE("rational normalization") {
    const Rational q(BigInt(-2), BigInt(-4));
    CHECK(q.num() == 1);
    CHECK(q.den() == 2);
    CHECK(Rational(BigInt(3), BigInt(-6)) == Rational(BigInt(-1), BigInt(2)));
    CHECK(Rational(BigInt(0), BigInt(-5)).den() == 1);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("-6/4") == Rational(BigInt(-3), BigInt(2)));
    CHECK(Rational::parse("+7") == 7);
    CHECK(Rational::parse("205/256").str() == "205/256");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(5).exact_str() == "5/1");
    CHECK(Rational(BigInt(-1), BigInt(3)).exact_str() == "-1/3");
    CHECK_THROWS(Rational::parse("1/-2"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse(""));
    CHECK(Rational::parse("123456789012345678901234567890").num() ==
          BigInt("123456789012345678901234567890"));
}

TEST_CASE("rational field axioms on random values") {
    Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational a = testing::random_rational(rng, 40);
        const Rational b = testing::random_rational(rng, 40);
        const Rational c = testing::random_rational(rng, 40);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == 0);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == 1);
            CHECK(b / a * a == b);
        }
        CHECK(gcd(a.num(), a.den()) == 1);
        CHECK(a.den() > 0);
    }
}

TEST_CASE("rational ordering and powers") {
    CHECK(Rational(BigInt(-1), BigInt(2)) < Rational(0));
    CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(-2), BigInt(3)).pow(3) == Rational(BigInt(-8), BigInt(27)));
    CHECK(Rational(7).pow(0) == 1);
}

TEST_CASE("factor examples") {
    auto f12 = factor(12);
    CHECK(f12.complete);
    CHECK(f12.primes == std::map<BigInt, unsigned>{{2, 2}, {3, 1}});

    auto f9 = factor(-9);
    CHECK(f9.primes == std::map<BigInt, unsigned>{{3, 2}});

    auto f205 = factor(205);
    CHECK(f205.primes == std::map<BigInt, unsigned>{{5, 1}, {41, 1}});

    CHECK(factor(1).primes.empty());
    CHECK(factor(-1).primes.empty());
    CHECK_THROWS_AS(factor(0), std::invalid_argument);
}

TEST_CASE("factor beyond the trial bound uses rho") {
    // 2^68 + 1 = 17^2 * 354689 * 2879347902817
    const BigInt n = testing::ipow(2, 68) + 1;
    const auto f = factor(n);
    CHECK(f.complete);
    CHECK(f.primes == std::map<BigInt, unsigned>{{17, 2}, {354689, 1}, {BigInt("2879347902817"), 1}});

    // Semiprime with both factors above a tiny trial bound.
    const BigInt p("1000000007"), q("998244353");
    const auto g = factor(p * q * q, FactorEffort{100, 1'000'000});
    CHECK(g.complete);
    CHECK(g.primes == std::map<BigInt, unsigned>{{q, 2}, {p, 1}});
}

TEST_CASE("factor reports incomplete when the budget runs out") {
    const BigInt p("170141183460469231731687303715884105727"); // 2^127 - 1
    const BigInt q("618970019642690137449562111");             // 2^89 - 1
    const auto f = factor(p * q, FactorEffort{1000, 4});
    CHECK_FALSE(f.complete);
    CHECK(f.unfactored == std::vector<BigInt>{p * q});
    CHECK(multiply_back(f) == p * q);
}

TEST_CASE("factor multiplies back") {
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        BigInt n = testing::uniform(rng, 1, 1'000'000);
        n *= testing::uniform(rng, 1, 1'000'000);
        if (testing::coin(rng, 0.5)) n = -n;
        const auto f = factor(n);
        REQUIRE(f.complete);
        CHECK(multiply_back(f) == abs(n));
        for (const auto& [p, e] : f.primes) CHECK(is_probable_prime(p));
    }
}
