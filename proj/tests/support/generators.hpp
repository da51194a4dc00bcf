#pragma once

// Random inputs for the property suites. Everything is driven by an explicit
// std::mt19937_64 so failures replay from the seed.

#include <initializer_list>
#include <numeric>
#include <random>
#include <vector>

#include "edcert/arith.hpp"
#include "edcert/moebius.hpp"
#include "edcert/poly.hpp"

namespace edcert::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline FormalPoly poly_from(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long x : coeffs) c.emplace_back(x);
    return FormalPoly(std::move(c));
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Nonzero integer in [-max, max] not divisible by p.
inline long unit_int(Rng& rng, const BigInt& p, long max) {
    while (true) {
        const long x = uniform(rng, -max, max);
        if (x != 0 && BigInt(x) % p != 0) return x;
    }
}

// a/b with p dividing neither.
inline Rational unit_rational(Rng& rng, const BigInt& p, long max) {
    return Rational(BigInt(unit_int(rng, p, max)), BigInt(std::abs(unit_int(rng, p, max))));
}

inline Rational nonzero_rational(Rng& rng, long max) {
    long a = 0;
    while (a == 0) a = uniform(rng, -max, max);
    return Rational(BigInt(a), BigInt(uniform(rng, 1, max)));
}

inline Rational random_rational(Rng& rng, long max) {
    return Rational(BigInt(uniform(rng, -max, max)), BigInt(uniform(rng, 1, max)));
}

inline long random_prime(Rng& rng, std::initializer_list<long> pool) {
    std::vector<long> v(pool);
    return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(v.size()) - 1))];
}

// A prime from the pool that does not divide n.
inline long prime_not_dividing(Rng& rng, std::size_t n, std::initializer_list<long> pool = {2, 3, 5, 7, 11, 13}) {
    while (true) {
        const long p = random_prime(rng, pool);
        if (n % static_cast<std::size_t>(p) != 0) return p;
    }
}

struct EDSample {
    FormalPoly poly;
    long v0 = 0;
    long vn = 0;
};

struct EDOptions {
    long max_endpoint_val = 3;
    long unit_max = 9;
    double interior_zero = 0.2;
    bool rational_units = true;
};

// Builds D0-D2 by construction: v(a_0) = v0, v(a_n) = vn with
// gcd(v0 - vn, n) = 1, and interior exponents at or above the chord.
inline EDSample random_ed(Rng& rng, std::size_t n, const BigInt& p, const EDOptions& opt = {}) {
    EDSample s;
    const long nl = static_cast<long>(n);
    do {
        s.v0 = uniform(rng, 0, opt.max_endpoint_val);
        s.vn = uniform(rng, 0, opt.max_endpoint_val);
    } while (std::gcd(s.v0 - s.vn, nl) != 1);

    std::vector<Rational> coeffs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const bool end = i == 0 || i == n;
        if (!end && coin(rng, opt.interior_zero)) continue;
        const long il = static_cast<long>(i);
        long e;
        if (i == 0)
            e = s.v0;
        else if (i == n)
            e = s.vn;
        else
            e = ((nl - il) * s.v0 + il * s.vn + nl - 1) / nl + uniform(rng, 0, 1);
        const Rational unit = opt.rational_units ? unit_rational(rng, p, opt.unit_max)
                                                 : Rational(unit_int(rng, p, opt.unit_max));
        coeffs[i] = unit * Rational(ipow(p, static_cast<unsigned long>(e)));
    }
    s.poly = FormalPoly(std::move(coeffs));
    return s;
}

// Integer coefficients in [-max, max]; endpoints nonzero when asked.
inline FormalPoly random_int_poly(Rng& rng, std::size_t n, long max, bool nonzero_ends = true) {
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        long x = uniform(rng, -max, max);
        while (nonzero_ends && (i == 0 || i == n) && x == 0) x = uniform(rng, -max, max);
        c[i] = x;
    }
    return FormalPoly(std::move(c));
}

// Rational coefficients of the form p^e * u with e in [0, max_e]; some zeros.
inline FormalPoly random_padic_poly(Rng& rng, std::size_t n, const BigInt& p, long max_e) {
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (coin(rng, 0.15)) continue;
        c[i] = unit_rational(rng, p, 7) * Rational(ipow(p, static_cast<unsigned long>(uniform(rng, 0, max_e))));
    }
    return FormalPoly(std::move(c));
}

inline Rational entry(Rng& rng, long max, bool rational) {
    if (!rational) {
        long a = 0;
        while (a == 0) a = uniform(rng, -max, max);
        return a;
    }
    return nonzero_rational(rng, max);
}

// Nonsingular matrix of the given shape with all unforced entries nonzero.
inline Mat2 random_mat(Rng& rng, MatShape shape, long max = 4, bool rational = true) {
    while (true) {
        Rational a = entry(rng, max, rational), b = entry(rng, max, rational);
        Rational c = entry(rng, max, rational), d = entry(rng, max, rational);
        switch (shape) {
        case MatShape::upper: c = 0; break;
        case MatShape::lower: b = 0; break;
        case MatShape::upper_swap: d = 0; break;
        case MatShape::lower_swap: a = 0; break;
        case MatShape::full: break;
        }
        if (!(a * d - b * c).is_zero()) return Mat2(a, b, c, d);
    }
}

// Any nonsingular matrix, zeros allowed.
inline Mat2 random_any_mat(Rng& rng, long max = 4) {
    while (true) {
        Rational a = random_rational(rng, max), b = random_rational(rng, max);
        Rational c = random_rational(rng, max), d = random_rational(rng, max);
        if (!(a * d - b * c).is_zero()) return Mat2(a, b, c, d);
    }
}

inline FormalPoly random_rational_poly(Rng& rng, std::size_t n, long max) {
    std::vector<Rational> c(n + 1);
    for (auto& x : c) x = random_rational(rng, max);
    return FormalPoly(std::move(c));
}

} // namespace edcert::testing
