#include "edcert/valuation.hpp"

#include <stdexcept>

#include "edcert/factor.hpp"

namespace edcert {

long ValOrInf::value() const {
    if (!finite_) throw std::logic_error("value() of an infinite valuation");
    return *finite_;
}

std::string ValOrInf::str() const { return finite_ ? std::to_string(*finite_) : "inf"; }

PAdic::PAdic(BigInt p) : p_(std::move(p)) {
    bool prime = false;
    if (p_ > 1) {
        const Factorization f = factor(p_);
        prime = f.complete && f.primes.size() == 1 && f.primes.begin()->second == 1;
    }
    if (!prime) throw std::invalid_argument(to_string(p_) + " is not a prime");
}

ValOrInf PAdic::val(const Rational& q) const {
    if (q.is_zero()) return ValOrInf::infinity();
    BigInt rest;
    const auto up = mpz_remove(rest.get_mpz_t(), q.gmp().get_num_mpz_t(), p_.get_mpz_t());
    const auto down = mpz_remove(rest.get_mpz_t(), q.gmp().get_den_mpz_t(), p_.get_mpz_t());
    return ValOrInf(static_cast<long>(up) - static_cast<long>(down));
}

bool PAdic::residue_char_divides(const BigInt& n) const {
    return mpz_divisible_p(n.get_mpz_t(), p_.get_mpz_t()) != 0;
}

} // namespace edcert
