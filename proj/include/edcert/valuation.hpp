#pragma once

#include <compare>
#include <optional>
#include <string>

#include "edcert/arith.hpp"

namespace edcert {

/// An element of Z extended by a top element infinity, with
/// infinity + g = infinity and g < infinity for every finite g.
class ValOrInf {
public:
    ValOrInf(long value) : finite_(value) {}

    static ValOrInf infinity() { return ValOrInf(); }

    bool is_infinite() const { return !finite_.has_value(); }
    bool is_finite() const { return finite_.has_value(); }

    // Throws std::logic_error on infinity.
    long value() const;

    std::string str() const;

    friend ValOrInf operator+(const ValOrInf& a, const ValOrInf& b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return ValOrInf(*a.finite_ + *b.finite_);
    }

    friend bool operator==(const ValOrInf& a, const ValOrInf& b) = default;
    friend std::strong_ordering operator<=>(const ValOrInf& a, const ValOrInf& b) {
        if (a.is_infinite() || b.is_infinite())
            return a.is_infinite() == b.is_infinite() ? std::strong_ordering::equal
                 : a.is_infinite()                    ? std::strong_ordering::greater
                                                      : std::strong_ordering::less;
        return *a.finite_ <=> *b.finite_;
    }

private:
    ValOrInf() = default;

    std::optional<long> finite_;
};

/// The p-adic valuation on Q. Its value group is Z and its residue field is
/// F_p, so the residue characteristic is p itself.
class PAdic {
public:
    // Throws std::invalid_argument unless p is prime.
    explicit PAdic(BigInt p);
    explicit PAdic(long p) : PAdic(BigInt(p)) {}

    const BigInt& prime() const { return p_; }

    ValOrInf val(const Rational& q) const;
    ValOrInf operator()(const Rational& q) const { return val(q); }

    const BigInt& residue_char() const { return p_; }
    bool residue_char_divides(const BigInt& n) const;

private:
    BigInt p_;
};

} // namespace edcert
