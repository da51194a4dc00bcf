#include <doctest.h>

#include "edcert/errors.hpp"
#include "edcert/poly.hpp"
#include "support/generators.hpp"

using namespace edcert;
using edcert::testing::poly_from;
using edcert::testing::Rng;

namespace {

const Rational quarter(BigInt(1), BigInt(4));

FormalPoly cyclotomic(long p) {
    return FormalPoly(std::vector<Rational>(static_cast<std::size_t>(p), Rational(1)));
}

// A(x + t) by expanding sum a_k (x + t)^k with repeated multiplication; shares
// nothing with taylor_shift.
FormalPoly shift_by_expansion(const FormalPoly& a, const Rational& t) {
    const FormalPoly linear({t, Rational(1)});
    FormalPoly power = FormalPoly::constant(1);
    FormalPoly acc = FormalPoly::zero(a.formal_degree());
    for (std::size_t k = 0; k <= a.formal_degree(); ++k) {
        acc = add(acc, mul(FormalPoly::constant(a[k]), power));
        power = mul(power, linear);
    }
    return acc.with_formal_degree(a.formal_degree());
}

} // namespace

TEST_CASE("construction and formal degree") {
    const FormalPoly a = poly_from({1, 0, 0});
    CHECK(a.formal_degree() == 2);
    CHECK(*a.actual_degree() == 0);
    CHECK(FormalPoly::zero(3).formal_degree() == 3);
    CHECK(FormalPoly::zero(3).is_zero());
    CHECK_FALSE(FormalPoly::zero(3).actual_degree().has_value());
    CHECK(a[7] == 0);
    CHECK(FormalPoly(std::vector<Rational>{1, 2}, 4).formal_degree() == 4);
    CHECK_THROWS_AS(FormalPoly(std::vector<Rational>{1, 2, 3}, 1), std::invalid_argument);
    CHECK_THROWS_AS(FormalPoly(std::vector<Rational>{}), std::invalid_argument);
    CHECK(poly_from({1, 2}) != poly_from({1, 2, 0}));
}

TEST_CASE("add") {
    const FormalPoly s = add(poly_from({1, 0, 1}), poly_from({0, 0, -1}));
    CHECK(s == poly_from({1, 0, 0}));
    CHECK(s.formal_degree() == 2);
    const FormalPoly a = poly_from({3, -1, 2});
    CHECK(add(a, FormalPoly::zero(2)) == a);
    CHECK(add(poly_from({2, 1}), poly_from({4, 1})) == poly_from({6, 2}));
    CHECK(add(poly_from({1}), poly_from({0, 0, 5})).formal_degree() == 2);
}

TEST_CASE("mul") {
    CHECK(mul(poly_from({2, 1}), poly_from({4, 1})) == poly_from({8, 6, 1}));
    const FormalPoly a = poly_from({3, -1, 2});
    CHECK(mul(a, FormalPoly::constant(1)) == a);
    CHECK(mul(a, FormalPoly::zero(0)) == FormalPoly::zero(2));
    CHECK(mul(poly_from({1, 1, 0}), poly_from({1, 0})).formal_degree() == 3);
}

TEST_CASE("eval") {
    CHECK(eval(poly_from({8, 4, 1}), 0) == 8);
    CHECK(eval(cyclotomic(5), 1) == 5);
    CHECK(eval(cyclotomic(5), -quarter) == Rational(BigInt(205), BigInt(256)));
}

TEST_CASE("derivative") {
    CHECK(derivative(poly_from({8, 4, 1})) == poly_from({4, 2}));
    CHECK(derivative(poly_from({7})) == FormalPoly::zero(0));
    CHECK(derivative(poly_from({9, 0, -14, 0, 1})) == poly_from({0, -28, 0, 4}));
    CHECK(derivative(FormalPoly::zero(3)).formal_degree() == 2);
}

TEST_CASE("taylor shift") {
    CHECK(taylor_shift(poly_from({0, 0, 1}), 1) == poly_from({1, 2, 1}));
    CHECK(taylor_shift(poly_from({8, 4, 1}), -2) == poly_from({4, 0, 1}));

    const FormalPoly shifted = taylor_shift(cyclotomic(5), -quarter);
    CHECK(shifted == shift_by_expansion(cyclotomic(5), -quarter));
    // Frozen from the binomial expansion above (and checked against sympy).
    CHECK(shifted == FormalPoly({Rational(BigInt(205), BigInt(256)), Rational(BigInt(5), BigInt(8)),
                                 Rational(BigInt(5), BigInt(8)), Rational(0), Rational(1)}));
    CHECK(shifted[4] == 1);
    CHECK(shifted[3] == 0);

    // Leading coefficient unchanged; formal degree kept even when a_n = 0.
    const FormalPoly padded = poly_from({1, 1, 0});
    CHECK(taylor_shift(padded, 3) == poly_from({4, 1, 0}));
}

TEST_CASE("reverse") {
    CHECK(reverse(poly_from({-2, 0, 1, 1})) == poly_from({1, 1, 0, -2}));
    CHECK(reverse(poly_from({8, 4, 1})) == poly_from({1, 4, 8}));
    const FormalPoly a = poly_from({0, 3, 0, 0});
    CHECK(reverse(a) == poly_from({0, 0, 3, 0}));
    CHECK(reverse(reverse(a)) == a);
}

TEST_CASE("scalings") {
    CHECK(scale_arg(poly_from({1, 0, 1}), 2) == poly_from({1, 0, 4}));
    CHECK(scale_all(poly_from({1, 0, 1}), 3) == poly_from({3, 0, 3}));
    const FormalPoly a = poly_from({5, -2, 7});
    CHECK(scale_arg(a, 1) == a);
    CHECK_THROWS_AS(scale_arg(a, 0), precondition_error);
    CHECK_THROWS_AS(scale_all(a, 0), precondition_error);
}

TEST_CASE("polynomial identities on random inputs") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 0, 7));
        const FormalPoly a = testing::random_rational_poly(rng, n, 9);
        const FormalPoly b = testing::random_rational_poly(rng, static_cast<std::size_t>(testing::uniform(rng, 0, 5)), 9);
        const Rational s = testing::random_rational(rng, 6);
        const Rational t = testing::random_rational(rng, 6);

        CHECK(taylor_shift(taylor_shift(a, s), t) == taylor_shift(a, s + t));
        CHECK(taylor_shift(a, t) == shift_by_expansion(a, t));
        for (int k = 0; k < 3; ++k) {
            const Rational x = testing::random_rational(rng, 10);
            CHECK(eval(taylor_shift(a, t), x) == eval(a, x + t));
            CHECK(eval(mul(a, b), x) == eval(a, x) * eval(b, x));
        }
        CHECK(reverse(a).formal_degree() == a.formal_degree());
        CHECK(reverse(reverse(a)) == a);

        const FormalPoly lhs = derivative(mul(a, b));
        const FormalPoly rhs = add(mul(derivative(a), b), mul(a, derivative(b)));
        // Formal degrees can differ by bookkeeping when one factor has degree 0.
        CHECK(sub(lhs, rhs).is_zero());
        if (a.formal_degree() > 0 && b.formal_degree() > 0) CHECK(lhs == rhs);
    }
}
