#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "edcert/arith.hpp"
#include "edcert/poly.hpp"
#include "edcert/valuation.hpp"

namespace edcert {

struct LatticePoint {
    std::size_t index;
    long value;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct Segment {
    Rational slope;
    std::size_t length; // horizontal length
    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Lower convex hull of {(i, v(a_i)) : a_i != 0}. Vertex indices and segment
/// slopes are strictly increasing; collinear support points are not vertices.
struct NewtonPolygon {
    std::vector<LatticePoint> vertices;
    std::vector<Segment> segments;
};

/// Outcome of checking (D0), (D1), (D2) against a polynomial of formal degree n.
///
/// When D0 fails the valuations of the endpoints are infinite, so neither D1
/// nor D2 can be evaluated: both are reported false with no witness.
struct EDReport {
    bool d0 = false;
    bool d1 = false;
    std::optional<long> gcd_value; // gcd(v(a_0) - v(a_n), n)
    bool d2 = false;
    std::optional<std::size_t> failing_index; // first index violating D2
    bool verdict = false;

    friend bool operator==(const EDReport&, const EDReport&) = default;
};

// Throws precondition_error for the zero polynomial.
NewtonPolygon newton_polygon(const FormalPoly& poly, const PAdic& v);

/// Eisenstein-Dumas test at v with the non-strict D2 over 0 <= i <= n.
EDReport is_ed(const FormalPoly& poly, const PAdic& v);

/// Same with the strict inequality on 1 <= i <= n - 1. Always agrees with
/// is_ed on the verdict; the individual d2 flag may differ when D1 fails.
EDReport is_ed_strict(const FormalPoly& poly, const PAdic& v);

/// Sorted merge of two slope multisets, combining equal slopes.
std::vector<Segment> merge_slopes(const std::vector<Segment>& a, const std::vector<Segment>& b);

/// Dumas: the polygon of A*B is built from the sides of the polygons of A and B
/// in order of increasing slope. Requires both nonzero with actual degree
/// equal to formal degree; throws precondition_error otherwise.
bool dumas_concat_holds(const FormalPoly& a, const FormalPoly& b, const PAdic& v);

} // namespace edcert
