#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edcert/arith.hpp"
#include "edcert/moebius.hpp"
#include "edcert/poly.hpp"

namespace edcert::cli {

class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

    // Zero-based offset into the source text.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses a sum of terms `[+-] [coeff] [*] [x [^ exp]]`, where coeff is an
/// integer or `int/int`. Whitespace is ignored and like terms are combined.
/// The formal degree is the highest exponent with a nonzero coefficient,
/// unless `formal_degree` raises it; an override below that is rejected.
FormalPoly parse_poly(std::string_view text, std::optional<std::size_t> formal_degree = std::nullopt);

/// Inverse of parse_poly up to whitespace, e.g. "-5x^2 - 6x - 2", "1/2x^2 + 8".
std::string format_poly(const FormalPoly& poly);

/// "a,b;c,d" with rational entries.
Mat2 parse_matrix(std::string_view text);

/// Comma-separated list of integers.
std::vector<BigInt> parse_int_list(std::string_view text);

} // namespace edcert::cli
