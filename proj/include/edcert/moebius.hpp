#pragma once

#include <iosfwd>
#include <string_view>

#include "edcert/arith.hpp"
#include "edcert/poly.hpp"

namespace edcert {

/// Nonsingular 2x2 rational matrix [[a, b], [c, d]].
class Mat2 {
public:
    // Throws precondition_error when ad - bc = 0.
    Mat2(Rational a, Rational b, Rational c, Rational d);

    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 swap() { return {0, 1, 1, 0}; }
    static Mat2 shear_upper(const Rational& t) { return {1, t, 0, 1}; }
    static Mat2 shear_lower(const Rational& t) { return {1, 0, t, 1}; }
    static Mat2 diag(const Rational& s, const Rational& u) { return {s, 0, 0, u}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    Rational det() const { return a_ * d_ - b_ * c_; }

    friend bool operator==(const Mat2&, const Mat2&) = default;

private:
    Rational a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const Mat2& g);

/// Shape of [[s, t], [u, v]] with respect to the case split stuv = 0.
/// Checked in this order, so a diagonal matrix reports `upper`.
enum class MatShape {
    upper,      // u = 0
    lower,      // t = 0
    upper_swap, // v = 0, i.e. upper * [[0,1],[1,0]]
    lower_swap, // s = 0, i.e. lower * [[0,1],[1,0]]
    full,       // stuv != 0
};

MatShape classify(const Mat2& g);
std::string_view to_string(MatShape shape);

/// Right action A(x) g = (cx + d)^n A((ax + b) / (cx + d)), n the formal
/// degree of A. The result keeps formal degree n; its actual degree may drop.
FormalPoly act(const FormalPoly& poly, const Mat2& g);

/// Matrix product g h, so that act(act(A, g), h) = act(A, compose(g, h)).
Mat2 compose(const Mat2& g, const Mat2& h);
inline Mat2 operator*(const Mat2& g, const Mat2& h) { return compose(g, h); }

Mat2 inverse(const Mat2& g);

} // namespace edcert
