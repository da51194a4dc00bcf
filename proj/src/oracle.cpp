#include "edcert/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "edcert/errors.hpp"

namespace edcert::oracle {

namespace {

constexpr std::size_t max_degree = 6;
constexpr long node_radius = 24;
// Node values are factored by plain trial division, so keep them small.
const BigInt max_node_value("1000000000000000");

BigInt eval_int(const IntPoly& f, const BigInt& x) {
    BigInt acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

std::vector<BigInt> positive_divisors(const BigInt& value) {
    std::uint64_t n = BigInt(abs(value)).get_ui();
    std::vector<std::pair<std::uint64_t, unsigned>> pf;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        pf.emplace_back(d, e);
    }
    if (n > 1) pf.emplace_back(n, 1);

    std::vector<BigInt> divs{1};
    for (auto [p, e] : pf) {
        const std::size_t count = divs.size();
        BigInt pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= static_cast<unsigned long>(p);
            for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Exact division p / f over Z; nullopt when f does not divide p.
std::optional<IntPoly> divide_exact(IntPoly p, const IntPoly& f) {
    const std::size_t df = f.size() - 1;
    if (p.size() < f.size()) return std::nullopt;
    IntPoly q(p.size() - df);
    for (std::size_t k = q.size(); k-- > 0;) {
        const BigInt& top = p[k + df];
        if (top % f[df] != 0) return std::nullopt;
        q[k] = top / f[df];
        for (std::size_t j = 0; j <= df; ++j) p[k + j] -= q[k] * f[j];
    }
    for (const BigInt& r : p) {
        if (r != 0) return std::nullopt;
    }
    return q;
}

struct Search {
    const IntPoly& target;
    BigInt bound;
    std::size_t degree;
    std::vector<BigInt> nodes;
    std::vector<std::vector<BigInt>> choices; // +/- divisors per node
    // table[k][j] = f[x_{k-j}, ..., x_k]
    std::vector<std::vector<BigInt>> table;
    std::optional<IntPoly> found;

    IntPoly newton_to_monomial() const {
        IntPoly f{table[degree][degree]};
        for (std::size_t k = degree; k-- > 0;) {
            // f <- f * (x - x_k) + c_k
            IntPoly g(f.size() + 1, BigInt(0));
            for (std::size_t i = 0; i < f.size(); ++i) {
                g[i + 1] += f[i];
                g[i] -= f[i] * nodes[k];
            }
            g[0] += table[k][k];
            f = std::move(g);
        }
        return f;
    }

    void descend(std::size_t k) {
        for (const BigInt& y : choices[k]) {
            if (found) return;
            auto& row = table[k];
            row.assign(k + 1, BigInt(0));
            row[0] = y;
            bool integral = true;
            for (std::size_t j = 1; j <= k && integral; ++j) {
                const BigInt num = row[j - 1] - table[k - 1][j - 1];
                const BigInt den = nodes[k] - nodes[k - j];
                if (num % den != 0)
                    integral = false;
                else
                    row[j] = num / den;
            }
            if (!integral) continue;
            if (k < degree) {
                descend(k + 1);
                continue;
            }
            const BigInt& lead = row[k];
            if (lead == 0 || target.back() % lead != 0) continue;
            IntPoly f = newton_to_monomial();
            if (std::any_of(f.begin(), f.end(), [&](const BigInt& c) { return abs(c) > bound; })) continue;
            if (divide_exact(target, f)) found = std::move(f);
        }
    }
};

} // namespace

IntPoly primitive_integer_form(const FormalPoly& poly) {
    BigInt l = 1;
    for (const Rational& c : poly.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    IntPoly out;
    BigInt content = 0;
    for (const Rational& c : poly.coeffs()) {
        out.push_back(c.num() * (l / c.den()));
        content = gcd(content, out.back());
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    if (content == 0) return out;
    if (out.back() < 0) content = -content;
    for (BigInt& c : out) c /= content;
    return out;
}

IntPoly multiply(const IntPoly& f, const IntPoly& g) {
    IntPoly out(f.size() + g.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
    return out;
}

OracleVerdict brute_irreducible(const FormalPoly& poly) {
    const auto deg = poly.actual_degree();
    if (!deg || *deg == 0 || *deg != poly.formal_degree())
        throw precondition_error("oracle needs 1 <= actual degree = formal degree");
    if (*deg > max_degree) throw precondition_error("oracle is limited to degree <= 6");

    const IntPoly target = primitive_integer_form(poly);
    const std::size_t n = *deg;
    OracleVerdict verdict;
    if (n == 1) return verdict;

    // Integer roots in the node window are linear factors.
    std::vector<std::pair<BigInt, BigInt>> values; // (|P(x)|, x)
    for (long x = -node_radius; x <= node_radius; ++x) {
        const BigInt px = eval_int(target, BigInt(x));
        if (px == 0) {
            IntPoly f{BigInt(-x), BigInt(1)};
            verdict.irreducible = false;
            verdict.factors = std::pair{f, *divide_exact(target, f)};
            return verdict;
        }
        values.emplace_back(abs(px), BigInt(x));
    }
    std::stable_sort(values.begin(), values.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    BigInt max_coeff = 0;
    for (const BigInt& c : target) max_coeff = std::max(max_coeff, BigInt(abs(c)));
    BigInt bound = max_coeff;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);

    for (std::size_t d = 1; d <= n / 2; ++d) {
        Search s{target, bound, d, {}, {}, std::vector<std::vector<BigInt>>(d + 1), std::nullopt};
        for (std::size_t k = 0; k <= d; ++k) {
            if (values[k].first > max_node_value)
                throw std::runtime_error("oracle node values too large to factor by trial division");
            s.nodes.push_back(values[k].second);
            std::vector<BigInt> opts;
            for (const BigInt& div : positive_divisors(values[k].first)) {
                opts.push_back(div);
                if (k > 0) opts.push_back(-div); // f and -f are the same factor
            }
            s.choices.push_back(std::move(opts));
        }
        s.descend(0);
        if (s.found) {
            verdict.irreducible = false;
            IntPoly cofactor = *divide_exact(target, *s.found);
            verdict.factors = std::pair{std::move(*s.found), std::move(cofactor)};
            return verdict;
        }
    }
    return verdict;
}

} // namespace edcert::oracle
