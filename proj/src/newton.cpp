#include "edcert/newton.hpp"

#include <algorithm>
#include <numeric>

#include "edcert/errors.hpp"

namespace edcert {

namespace {

// Twice the signed area of (o, a, b); positive for a counter-clockwise turn.
BigInt cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    const BigInt ax = static_cast<long>(a.index) - static_cast<long>(o.index);
    const BigInt bx = static_cast<long>(b.index) - static_cast<long>(o.index);
    const BigInt ay = a.value - o.value;
    const BigInt by = b.value - o.value;
    return ax * by - ay * bx;
}

struct Endpoints {
    long v0;
    long vn;
};

std::optional<Endpoints> endpoint_values(const FormalPoly& poly, const PAdic& v) {
    const std::size_t n = poly.formal_degree();
    if (poly[0].is_zero() || poly[n].is_zero()) return std::nullopt;
    return Endpoints{v(poly[0]).value(), v(poly[n]).value()};
}

// Shared body of the strict and non-strict tests.
EDReport check(const FormalPoly& poly, const PAdic& v, bool strict) {
    EDReport r;
    const std::size_t n = poly.formal_degree();
    const auto ends = endpoint_values(poly, v);
    r.d0 = ends.has_value();
    if (!r.d0) return r;

    const long g = std::gcd(ends->v0 - ends->vn, static_cast<long>(n));
    r.gcd_value = g;
    r.d1 = g == 1;

    r.d2 = true;
    const std::size_t first = strict ? 1 : 0;
    const std::size_t last = strict ? n - 1 : n;
    for (std::size_t i = first; n > 0 && i <= last; ++i) {
        const ValOrInf vi = v(poly[i]);
        if (vi.is_infinite()) continue;
        const BigInt lhs = BigInt(static_cast<long>(n)) * vi.value();
        const BigInt rhs = BigInt(static_cast<long>(n - i)) * ends->v0 + BigInt(static_cast<long>(i)) * ends->vn;
        if (strict ? !(lhs > rhs) : !(lhs >= rhs)) {
            r.d2 = false;
            r.failing_index = i;
            break;
        }
    }
    r.verdict = r.d0 && r.d1 && r.d2;
    return r;
}

} // namespace

NewtonPolygon newton_polygon(const FormalPoly& poly, const PAdic& v) {
    if (poly.is_zero()) throw precondition_error("Newton polygon of the zero polynomial");

    // Monotone chain over support points already sorted by index.
    std::vector<LatticePoint> hull;
    for (std::size_t i = 0; i <= poly.formal_degree(); ++i) {
        if (poly[i].is_zero()) continue;
        const LatticePoint p{i, v(poly[i]).value()};
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }

    NewtonPolygon out;
    out.vertices = hull;
    for (std::size_t k = 1; k < hull.size(); ++k) {
        const std::size_t len = hull[k].index - hull[k - 1].index;
        out.segments.push_back(
            {Rational(BigInt(hull[k].value - hull[k - 1].value), BigInt(static_cast<long>(len))), len});
    }
    return out;
}

EDReport is_ed(const FormalPoly& poly, const PAdic& v) { return check(poly, v, false); }

EDReport is_ed_strict(const FormalPoly& poly, const PAdic& v) { return check(poly, v, true); }

std::vector<Segment> merge_slopes(const std::vector<Segment>& a, const std::vector<Segment>& b) {
    std::vector<Segment> all(a);
    all.insert(all.end(), b.begin(), b.end());
    std::stable_sort(all.begin(), all.end(),
                     [](const Segment& x, const Segment& y) { return x.slope < y.slope; });
    std::vector<Segment> out;
    for (auto& s : all) {
        if (!out.empty() && out.back().slope == s.slope)
            out.back().length += s.length;
        else
            out.push_back(s);
    }
    return out;
}

bool dumas_concat_holds(const FormalPoly& a, const FormalPoly& b, const PAdic& v) {
    for (const FormalPoly* f : {&a, &b}) {
        if (f->is_zero()) throw precondition_error("Dumas check needs nonzero factors");
        if (*f->actual_degree() != f->formal_degree())
            throw precondition_error("Dumas check needs actual degree equal to formal degree");
    }
    const auto expected = merge_slopes(newton_polygon(a, v).segments, newton_polygon(b, v).segments);
    return newton_polygon(mul(a, b), v).segments == expected;
}

} // namespace edcert
