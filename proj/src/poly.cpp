#include "edcert/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "edcert/errors.hpp"

namespace edcert {

FormalPoly::FormalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("a polynomial needs at least one coefficient");
}

FormalPoly::FormalPoly(std::vector<Rational> coeffs, std::size_t formal_degree)
    : coeffs_(std::move(coeffs)) {
    for (std::size_t i = formal_degree + 1; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero())
            throw std::invalid_argument("formal degree " + std::to_string(formal_degree) +
                                        " is below the actual degree " + std::to_string(i));
    }
    coeffs_.resize(formal_degree + 1);
}

FormalPoly FormalPoly::zero(std::size_t formal_degree) {
    return FormalPoly(std::vector<Rational>(formal_degree + 1));
}

FormalPoly FormalPoly::constant(const Rational& c, std::size_t formal_degree) {
    std::vector<Rational> v(formal_degree + 1);
    v[0] = c;
    return FormalPoly(std::move(v));
}

std::optional<std::size_t> FormalPoly::actual_degree() const {
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (!coeffs_[i].is_zero()) return i;
    }
    return std::nullopt;
}

bool FormalPoly::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

const Rational& FormalPoly::operator[](std::size_t i) const {
    static const Rational zero;
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

FormalPoly add(const FormalPoly& a, const FormalPoly& b) {
    const std::size_t n = std::max(a.formal_degree(), b.formal_degree());
    std::vector<Rational> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = a[i] + b[i];
    return FormalPoly(std::move(out));
}

FormalPoly sub(const FormalPoly& a, const FormalPoly& b) {
    const std::size_t n = std::max(a.formal_degree(), b.formal_degree());
    std::vector<Rational> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = a[i] - b[i];
    return FormalPoly(std::move(out));
}

FormalPoly mul(const FormalPoly& a, const FormalPoly& b) {
    std::vector<Rational> out(a.formal_degree() + b.formal_degree() + 1);
    for (std::size_t i = 0; i <= a.formal_degree(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j <= b.formal_degree(); ++j) out[i + j] += a[i] * b[j];
    }
    return FormalPoly(std::move(out));
}

Rational eval(const FormalPoly& a, const Rational& t) {
    Rational acc;
    for (std::size_t i = a.formal_degree() + 1; i-- > 0;) acc = acc * t + a[i];
    return acc;
}

FormalPoly derivative(const FormalPoly& a) {
    const std::size_t n = a.formal_degree();
    if (n == 0) return FormalPoly::zero(0);
    std::vector<Rational> out(n);
    for (std::size_t i = 1; i <= n; ++i) out[i - 1] = a[i] * Rational(static_cast<long>(i));
    return FormalPoly(std::move(out));
}

FormalPoly taylor_shift(const FormalPoly& a, const Rational& t) {
    // bar a_i = sum_{k >= i} C(k, i) a_k t^(k - i), one output row at a time.
    const std::size_t n = a.formal_degree();
    std::vector<Rational> tpow(n + 1);
    tpow[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) tpow[k] = tpow[k - 1] * t;

    std::vector<Rational> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        Rational acc;
        BigInt c = 1; // C(i, i)
        for (std::size_t k = i; k <= n; ++k) {
            if (!a[k].is_zero()) acc += Rational(c) * a[k] * tpow[k - i];
            // C(k + 1, i) = C(k, i) (k + 1) / (k + 1 - i)
            c = c * static_cast<unsigned long>(k + 1) / static_cast<unsigned long>(k + 1 - i);
        }
        out[i] = std::move(acc);
    }
    return FormalPoly(std::move(out));
}

FormalPoly reverse(const FormalPoly& a) {
    std::vector<Rational> out(a.coeffs().rbegin(), a.coeffs().rend());
    return FormalPoly(std::move(out));
}

FormalPoly scale_arg(const FormalPoly& a, const Rational& t) {
    if (t.is_zero()) throw precondition_error("scale_arg requires a nonzero scalar");
    std::vector<Rational> out(a.formal_degree() + 1);
    Rational tp = 1;
    for (std::size_t i = 0; i <= a.formal_degree(); ++i) {
        out[i] = a[i] * tp;
        tp *= t;
    }
    return FormalPoly(std::move(out));
}

FormalPoly scale_all(const FormalPoly& a, const Rational& t) {
    if (t.is_zero()) throw precondition_error("scale_all requires a nonzero scalar");
    std::vector<Rational> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& c : out) c *= t;
    return FormalPoly(std::move(out));
}

} // namespace edcert
