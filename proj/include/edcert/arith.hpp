#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace edcert {

// Arbitrary-precision signed integer. GMP gives us a canonical zero and no
// overflow; we only add the handful of helpers the rest of the library needs.
using BigInt = mpz_class;

// Nonnegative gcd; gcd(0, 0) = 0.
BigInt gcd(const BigInt& a, const BigInt& b);

BigInt binomial(unsigned long n, unsigned long k);

std::string to_string(const BigInt& n);

// Accepts an optional sign followed by decimal digits.
BigInt parse_bigint(std::string_view text);

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}
    Rational(const BigInt& n) : value_(n) {}
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "a" or "a/b" with an optional leading sign on a.
    static Rational parse(std::string_view text);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(unsigned long e) const;

    /// "n" for integers, "n/d" otherwise.
    std::string str() const;
    /// Always "n/d", used where the format has to be unambiguous.
    std::string exact_str() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.value_ == rhs.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& gmp() const { return value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace edcert
