#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "edcert/arith.hpp"
#include "edcert/poly.hpp"

namespace edcert::oracle {

// Integer polynomial, coefficients from x^0 upward.
using IntPoly = std::vector<BigInt>;

struct OracleVerdict {
    bool irreducible = true;
    // For reducible inputs: f * g equals the primitive integer form, both of
    // degree >= 1.
    std::optional<std::pair<IntPoly, IntPoly>> factors;
};

/// Clears denominators and content; the leading coefficient is made positive.
IntPoly primitive_integer_form(const FormalPoly& poly);

IntPoly multiply(const IntPoly& f, const IntPoly& g);

/// Exhaustive search for an integer factor of degree <= n/2 (Kronecker
/// interpolation through divisors of values at integer nodes), independent of
/// the valuation machinery. Requires 1 <= actual degree = formal degree <= 6.
OracleVerdict brute_irreducible(const FormalPoly& poly);

} // namespace edcert::oracle
