#include "edcert/factor.hpp"

#include <optional>
#include <stdexcept>

namespace edcert {

namespace {

// Brent's variant of Pollard rho with batched gcds, f(x) = x^2 + c mod n.
std::optional<BigInt> brent_rho(const BigInt& n, unsigned long c, unsigned long budget) {
    constexpr unsigned long batch = 128;
    BigInt y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1, spent = 0;

    auto step = [&](BigInt& v) {
        v = v * v + c;
        v %= n;
    };

    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) step(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            const unsigned long m = std::min(batch, r - k);
            for (unsigned long i = 0; i < m; ++i) {
                step(y);
                q = (q * abs(x - y)) % n;
            }
            g = gcd(q, n);
            k += m;
            spent += m;
        }
        if (spent > budget) break;
        r *= 2;
    }

    if (g == n) {
        // The batch overshot; replay single steps from the saved point.
        do {
            step(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    if (g == 1 || g == n) return std::nullopt;
    return g;
}

void split(const BigInt& n, const FactorEffort& effort, Factorization& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out.primes[n];
        return;
    }
    constexpr unsigned long attempts = 4;
    const unsigned long per_attempt = std::max(1UL, effort.rho_iterations / attempts);
    for (unsigned long c = 1; c <= attempts; ++c) {
        if (auto d = brent_rho(n, c, per_attempt)) {
            const BigInt other = n / *d;
            split(*d, effort, out);
            split(other, effort, out);
            return;
        }
    }
    out.complete = false;
    out.unfactored.push_back(n);
}

} // namespace

bool is_probable_prime(const BigInt& n) {
    return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

Factorization factor(const BigInt& n, const FactorEffort& effort) {
    if (n == 0) throw std::invalid_argument("cannot factor zero");
    Factorization out;
    BigInt rest = abs(n);

    auto strip = [&](unsigned long d) {
        if (mpz_divisible_ui_p(rest.get_mpz_t(), d) == 0) return;
        unsigned count = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
            ++count;
        }
        out.primes[BigInt(d)] += count;
    };

    // Trial division by 2, 3 and then the 6k +/- 1 wheel.
    if (effort.trial_bound >= 2) strip(2);
    if (effort.trial_bound >= 3) strip(3);
    for (unsigned long d = 5; d < effort.trial_bound; d += 6) {
        if (BigInt(d) * d > rest) break;
        strip(d);
        if (d + 2 < effort.trial_bound) strip(d + 2);
    }

    split(rest, effort, out);
    return out;
}

} // namespace edcert
