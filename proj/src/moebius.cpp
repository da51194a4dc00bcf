#include "edcert/moebius.hpp"

#include <ostream>
#include <vector>

#include "edcert/errors.hpp"

namespace edcert {

namespace {

// rows[i][j] = coefficient of x^j in (lead x + constant)^i, for i = 0..n.
std::vector<std::vector<Rational>> linear_powers(const Rational& lead, const Rational& constant,
                                                 std::size_t n) {
    std::vector<Rational> lp(n + 1), cp(n + 1);
    lp[0] = cp[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        lp[k] = lp[k - 1] * lead;
        cp[k] = cp[k - 1] * constant;
    }
    std::vector<std::vector<Rational>> rows(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        rows[i].resize(i + 1);
        for (std::size_t j = 0; j <= i; ++j)
            rows[i][j] = Rational(binomial(i, j)) * lp[j] * cp[i - j];
    }
    return rows;
}

} // namespace

Mat2::Mat2(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (det().is_zero()) throw precondition_error("singular matrix");
}

std::ostream& operator<<(std::ostream& os, const Mat2& g) {
    return os << "[[" << g.a() << ", " << g.b() << "], [" << g.c() << ", " << g.d() << "]]";
}

MatShape classify(const Mat2& g) {
    if (g.c().is_zero()) return MatShape::upper;
    if (g.b().is_zero()) return MatShape::lower;
    if (g.d().is_zero()) return MatShape::upper_swap;
    if (g.a().is_zero()) return MatShape::lower_swap;
    return MatShape::full;
}

std::string_view to_string(MatShape shape) {
    switch (shape) {
    case MatShape::upper: return "upper";
    case MatShape::lower: return "lower";
    case MatShape::upper_swap: return "upper*swap";
    case MatShape::lower_swap: return "lower*swap";
    case MatShape::full: return "full";
    }
    return "?";
}

FormalPoly act(const FormalPoly& poly, const Mat2& g) {
    // Binary form sum a_i x^i y^(n-i) under (x, y) -> (ax + b y, cx + d y), at y = 1.
    const std::size_t n = poly.formal_degree();
    const auto num = linear_powers(g.a(), g.b(), n);
    const auto den = linear_powers(g.c(), g.d(), n);

    std::vector<Rational> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (poly[i].is_zero()) continue;
        const auto& p = num[i];
        const auto& q = den[n - i];
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p[j].is_zero()) continue;
            const Rational scaled = poly[i] * p[j];
            for (std::size_t k = 0; k < q.size(); ++k) out[j + k] += scaled * q[k];
        }
    }
    return FormalPoly(std::move(out));
}

Mat2 compose(const Mat2& g, const Mat2& h) {
    return {g.a() * h.a() + g.b() * h.c(), g.a() * h.b() + g.b() * h.d(),
            g.c() * h.a() + g.d() * h.c(), g.c() * h.b() + g.d() * h.d()};
}

Mat2 inverse(const Mat2& g) {
    const Rational inv = g.det().inverse();
    return {g.d() * inv, -g.b() * inv, -g.c() * inv, g.a() * inv};
}

} // namespace edcert
