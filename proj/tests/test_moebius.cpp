#include <doctest.h>

#include "edcert/errors.hpp"
#include "edcert/moebius.hpp"
#include "support/generators.hpp"

using namespace edcert;
using edcert::testing::poly_from;
using edcert::testing::Rng;

TEST_CASE("action on the cubic example drops the actual degree") {
    const FormalPoly a = poly_from({-2, 0, 1, 1});
    const FormalPoly b = act(a, Mat2(1, 0, 1, 1));
    CHECK(b == poly_from({-2, -6, -5, 0}));
    CHECK(b.formal_degree() == 3);
    CHECK(*b.actual_degree() == 2);
}

TEST_CASE("identity and swap") {
    const FormalPoly a = poly_from({-2, 0, 1, 1});
    CHECK(act(a, Mat2::identity()) == a);
    CHECK(act(a, Mat2::swap()) == reverse(a));
}

TEST_CASE("compose and inverse") {
    const Mat2 g(2, 3, -1, 5);
    CHECK(compose(g, Mat2::identity()) == g);
    CHECK(compose(Mat2::swap(), Mat2::swap()) == Mat2::identity());
    CHECK(compose(Mat2::shear_upper(4), Mat2::shear_upper(-7)) == Mat2::shear_upper(-3));
    CHECK(compose(g, Mat2(1, 1, 1, 2)).det() == g.det() * Mat2(1, 1, 1, 2).det());

    CHECK(inverse(Mat2::identity()) == Mat2::identity());
    CHECK(inverse(Mat2::diag(2, 1)) == Mat2::diag(Rational(BigInt(1), BigInt(2)), 1));
    CHECK(inverse(Mat2::shear_upper(3)) == Mat2::shear_upper(-3));
    CHECK(compose(g, inverse(g)) == Mat2::identity());
}

TEST_CASE("singular matrices are rejected") {
    CHECK_THROWS_AS(Mat2(1, 2, 2, 4), precondition_error);
    CHECK_THROWS_AS(Mat2(0, 0, 0, 0), precondition_error);
}

TEST_CASE("shape classification") {
    CHECK(classify(Mat2(2, 3, 0, 5)) == MatShape::upper);
    CHECK(classify(Mat2(2, 0, 3, 5)) == MatShape::lower);
    CHECK(classify(Mat2(2, 3, 5, 0)) == MatShape::upper_swap);
    CHECK(classify(Mat2(0, 3, 5, 2)) == MatShape::lower_swap);
    CHECK(classify(Mat2(1, 2, 3, 4)) == MatShape::full);
    CHECK(classify(Mat2::identity()) == MatShape::upper);
    CHECK(classify(Mat2::swap()) == MatShape::upper_swap);
    CHECK(to_string(MatShape::lower_swap) == "lower*swap");
}

TEST_CASE("action laws on random inputs") {
    Rng rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 0, 6));
        const FormalPoly a = testing::random_rational_poly(rng, n, 6);
        const Mat2 g = testing::random_any_mat(rng, 4);
        const Mat2 h = testing::random_any_mat(rng, 4);
        CHECK(act(act(a, g), h) == act(a, compose(g, h)));
        CHECK(act(a, g).formal_degree() == n);
        CHECK(act(act(a, g), inverse(g)) == a);

        const Rational t = testing::nonzero_rational(rng, 5);
        CHECK(act(a, Mat2::shear_upper(t)) == taylor_shift(a, t));
        CHECK(act(a, Mat2::diag(t, 1)) == scale_arg(a, t));
        CHECK(act(a, Mat2::diag(1, t)) == scale_all(scale_arg(a, t.inverse()), t.pow(n)));
    }
}
