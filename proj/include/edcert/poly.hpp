#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "edcert/arith.hpp"

namespace edcert {

/// A polynomial a_0 + a_1 x + ... + a_n x^n over Q together with its formal
/// degree n, i.e. the degree of the binary form y^n A(x/y) it stands for.
///
/// The formal degree is stored, never inferred: the Moebius action keeps it
/// fixed even when the leading coefficient vanishes, and the Eisenstein-Dumas
/// conditions are stated in terms of it. The coefficient vector always has
/// exactly n + 1 entries; the zero polynomial exists at every formal degree.
class FormalPoly {
public:
    /// Formal degree 0, value zero.
    FormalPoly() : coeffs_(1) {}

    /// Formal degree coeffs.size() - 1. Throws on an empty vector.
    explicit FormalPoly(std::vector<Rational> coeffs);

    /// Pads with zeros up to `formal_degree`; throws if a nonzero coefficient
    /// sits above it.
    FormalPoly(std::vector<Rational> coeffs, std::size_t formal_degree);

    FormalPoly(std::initializer_list<Rational> coeffs)
        : FormalPoly(std::vector<Rational>(coeffs)) {}

    static FormalPoly zero(std::size_t formal_degree);
    static FormalPoly constant(const Rational& c, std::size_t formal_degree = 0);

    std::size_t formal_degree() const { return coeffs_.size() - 1; }

    /// Index of the highest nonzero coefficient; nullopt for zero.
    std::optional<std::size_t> actual_degree() const;

    bool is_zero() const;

    /// Coefficient of x^i; zero for i above the formal degree.
    const Rational& operator[](std::size_t i) const;

    std::span<const Rational> coeffs() const { return coeffs_; }

    /// Same coefficients viewed at another formal degree (must not drop a
    /// nonzero coefficient).
    FormalPoly with_formal_degree(std::size_t n) const { return FormalPoly(coeffs_, n); }

    friend bool operator==(const FormalPoly&, const FormalPoly&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Coefficientwise sum at formal degree max(deg_f A, deg_f B).
FormalPoly add(const FormalPoly& a, const FormalPoly& b);
FormalPoly sub(const FormalPoly& a, const FormalPoly& b);

/// Convolution product at formal degree deg_f A + deg_f B.
FormalPoly mul(const FormalPoly& a, const FormalPoly& b);

inline FormalPoly operator+(const FormalPoly& a, const FormalPoly& b) { return add(a, b); }
inline FormalPoly operator-(const FormalPoly& a, const FormalPoly& b) { return sub(a, b); }
inline FormalPoly operator*(const FormalPoly& a, const FormalPoly& b) { return mul(a, b); }

Rational eval(const FormalPoly& a, const Rational& t);

/// Formal degree n - 1 for n >= 1; the derivative of a formal-degree-0
/// polynomial is zero at formal degree 0.
FormalPoly derivative(const FormalPoly& a);

/// A(x + t) at the same formal degree.
FormalPoly taylor_shift(const FormalPoly& a, const Rational& t);

/// x^n A(1/x) with n the formal degree.
FormalPoly reverse(const FormalPoly& a);

/// A(t x); t must be nonzero.
FormalPoly scale_arg(const FormalPoly& a, const Rational& t);

/// t A(x); t must be nonzero.
FormalPoly scale_all(const FormalPoly& a, const Rational& t);

} // namespace edcert
