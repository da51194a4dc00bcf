#include "edcert/arith.hpp"

#include <ostream>
#include <stdexcept>

namespace edcert {

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::string to_string(const BigInt& n) { return n.get_str(10); }

BigInt parse_bigint(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9')
            throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    }
    // mpz_set_str rejects a leading '+'.
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return BigInt(digits, 10);
}

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(text));
    const std::string_view den = text.substr(slash + 1);
    if (!den.empty() && (den[0] == '-' || den[0] == '+'))
        throw std::invalid_argument("denominator must be unsigned in '" + std::string(text) + "'");
    return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(den));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::pow(unsigned long e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
    mpq_class r(n, d);
    r.canonicalize();
    return Rational(std::move(r));
}

std::string Rational::str() const {
    if (is_integer()) return to_string(num());
    return exact_str();
}

std::string Rational::exact_str() const { return to_string(num()) + "/" + to_string(den()); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

} // namespace edcert
