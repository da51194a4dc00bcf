#pragma once

#include <map>
#include <vector>

#include "edcert/arith.hpp"

namespace edcert {

struct FactorEffort {
    // Trial division by every candidate below this bound.
    unsigned long trial_bound = 1'000'000;
    // Iteration budget for each Pollard-Brent attempt on a composite cofactor.
    unsigned long rho_iterations = 1'000'000;
};

struct Factorization {
    std::map<BigInt, unsigned> primes;
    // False when a composite cofactor survived the rho budget; those cofactors
    // are listed in `unfactored` and are not part of `primes`.
    bool complete = true;
    std::vector<BigInt> unfactored;
};

// Factors |n|. Throws std::invalid_argument for n = 0.
Factorization factor(const BigInt& n, const FactorEffort& effort = {});

bool is_probable_prime(const BigInt& n);

} // namespace edcert
