#include "edcert/certify.hpp"

#include <algorithm>
#include <future>
#include <set>

namespace edcert {

namespace {

Rational formal_n(const FormalPoly& poly) { return Rational(static_cast<long>(poly.formal_degree())); }

void add_primes_of(const Rational& q, const FactorEffort& effort, std::set<BigInt>& primes,
                   bool& complete) {
    for (const BigInt& part : {q.num(), q.den()}) {
        if (part == 1 || part == -1) continue;
        const Factorization f = factor(part, effort);
        for (const auto& [p, e] : f.primes) primes.insert(p);
        complete = complete && f.complete;
    }
}

std::string describe_failure(const EDReport& r) {
    if (!r.d0) return "D0 fails (a_0 a_n = 0)";
    std::string out;
    if (!r.d1) out = "D1 fails (gcd " + std::to_string(*r.gcd_value) + ")";
    if (!r.d2) {
        if (!out.empty()) out += "; ";
        out += "D2 fails at index " + std::to_string(*r.failing_index);
    }
    return out;
}

// Everything about the search that does not depend on the prime.
struct Prepared {
    const FormalPoly* input;
    std::optional<Transform> upper;
    std::optional<Transform> lower;
    std::vector<Transform> members; // admissible t, in list order
    std::size_t skipped_parameters = 0;
};

struct Found {
    Stage stage;
    Mat2 matrix;
    FormalPoly poly;
    EDReport report;
};

struct PrimeOutcome {
    std::optional<Found> found;
    std::vector<AuditEntry> audit;
};

PrimeOutcome evaluate_prime(const Prepared& prep, const BigInt& prime) {
    const FormalPoly& a = *prep.input;
    const PAdic v(prime);
    PrimeOutcome out;
    auto note = [&](Stage s, std::string reason) { out.audit.push_back({prime, s, std::move(reason)}); };

    const EDReport direct = is_ed(a, v);
    if (direct.verdict) {
        out.found = Found{Stage::direct, Mat2::identity(), a, direct};
        return out;
    }
    note(Stage::direct, describe_failure(direct));

    if (v.residue_char_divides(BigInt(static_cast<long>(a.formal_degree())))) {
        const std::string why = "skipped: p divides n = " + std::to_string(a.formal_degree());
        note(Stage::upper, why);
        note(Stage::lower, why);
        note(Stage::one_parameter, why);
        return out;
    }

    for (auto [stage, t] : {std::pair{Stage::upper, &prep.upper}, std::pair{Stage::lower, &prep.lower}}) {
        if (!t->has_value()) {
            note(stage, "undefined: a_0 = 0");
            continue;
        }
        const EDReport r = is_ed((*t)->poly, v);
        if (r.verdict) {
            out.found = Found{stage, (*t)->matrix, (*t)->poly, r};
            return out;
        }
        note(stage, describe_failure(r));
    }

    for (const Transform& m : prep.members) {
        const EDReport r = is_ed(m.poly, v);
        if (r.verdict) {
            out.found = Found{Stage::one_parameter, m.matrix, m.poly, r};
            return out;
        }
    }
    note(Stage::one_parameter, "no Eisenstein-Dumas member among " + std::to_string(prep.members.size()) +
                                   " admissible parameters (" + std::to_string(prep.skipped_parameters) +
                                   " skipped)");
    return out;
}

} // namespace

Transform upper_transform(const FormalPoly& poly) {
    const std::size_t n = poly.formal_degree();
    if (n == 0) throw precondition_error("upper transform needs formal degree >= 1");
    if (poly[n].is_zero()) throw precondition_error("upper transform needs a_n != 0");
    const Rational shift = -poly[n - 1] / (formal_n(poly) * poly[n]);
    return {Mat2::shear_upper(shift), taylor_shift(poly, shift)};
}

Transform lower_transform(const FormalPoly& poly) {
    if (poly.formal_degree() == 0) throw precondition_error("lower transform needs formal degree >= 1");
    if (poly[0].is_zero()) throw precondition_error("lower transform needs a_0 != 0");
    const Mat2 g = Mat2::shear_lower(-poly[1] / (formal_n(poly) * poly[0]));
    return {g, act(poly, g)};
}

Rational phi(const FormalPoly& poly, const Rational& t) {
    const Rational slope = eval(derivative(poly), t);
    if (slope.is_zero())
        throw degenerate_parameter(degenerate_parameter::Reason::critical_point,
                                   "phi undefined: A'(" + t.str() + ") = 0");
    return t - formal_n(poly) * eval(poly, t) / slope;
}

Transform one_param_member(const FormalPoly& poly, const Rational& t) {
    if (eval(poly, t).is_zero())
        throw degenerate_parameter(degenerate_parameter::Reason::root,
                                   "one-parameter member undefined: A(" + t.str() + ") = 0");
    const Mat2 g(t, phi(poly, t), 1, 1);
    return {g, act(poly, g)};
}

CandidatePrimes candidate_primes(const FormalPoly& poly, const FactorEffort& effort) {
    CandidatePrimes out;
    std::set<BigInt> primes;
    const std::size_t n = poly.formal_degree();
    if (n >= 2) add_primes_of(formal_n(poly), effort, primes, out.complete);

    if (n == 0 || poly[0].is_zero() || poly[n].is_zero()) {
        out.degenerate = true;
    } else {
        const FormalPoly u = upper_transform(poly).poly;
        const FormalPoly l = lower_transform(poly).poly;
        for (const FormalPoly* t : {&u, &l}) {
            if ((*t)[0].is_zero() || (*t)[n].is_zero()) continue;
            add_primes_of((*t)[0] / (*t)[n], effort, primes, out.complete);
        }
    }
    out.primes.assign(primes.begin(), primes.end());
    return out;
}

std::vector<Rational> height_grid(unsigned height) {
    std::vector<Rational> out;
    std::set<Rational> seen;
    for (unsigned h = 0; h <= height; ++h) {
        std::vector<Rational> level;
        for (long b = 1; b <= static_cast<long>(std::max(h, 1u)); ++b) {
            for (long a = -static_cast<long>(h); a <= static_cast<long>(h); ++a) {
                if (std::max(std::labs(a), b) != static_cast<long>(h) && !(h == 0 && a == 0)) continue;
                const Rational q{BigInt(a), BigInt(b)};
                if (seen.insert(q).second) level.push_back(q);
            }
        }
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::string_view to_string(Stage stage) {
    switch (stage) {
    case Stage::direct: return "direct";
    case Stage::upper: return "upper";
    case Stage::lower: return "lower";
    case Stage::one_parameter: return "one-parameter";
    }
    return "?";
}

Certificate certify_search(const FormalPoly& poly, const SearchConfig& config) {
    const std::size_t n = poly.formal_degree();
    if (n < 2) throw precondition_error("certification needs formal degree >= 2");
    if (poly[n].is_zero()) throw precondition_error("certification needs a_n != 0 (actual degree = formal degree)");

    Certificate cert;
    cert.input = poly;

    const CandidatePrimes candidates = candidate_primes(poly, config.effort);
    cert.candidates_complete = candidates.complete;
    std::set<BigInt> prime_set(candidates.primes.begin(), candidates.primes.end());
    for (const BigInt& p : config.extra_primes) {
        PAdic check(p); // rejects non-primes
        prime_set.insert(p);
    }
    const std::vector<BigInt> primes(prime_set.begin(), prime_set.end());

    Prepared prep{&poly, upper_transform(poly), std::nullopt, {}, 0};
    if (!poly[0].is_zero()) prep.lower = lower_transform(poly);
    const bool needs_members = std::any_of(primes.begin(), primes.end(), [&](const BigInt& p) {
        return BigInt(static_cast<long>(n)) % p != 0;
    });
    if (needs_members) {
        for (const Rational& t : config.t_candidates) {
            try {
                prep.members.push_back(one_param_member(poly, t));
            } catch (const degenerate_parameter&) {
                ++prep.skipped_parameters;
            }
        }
    }

    std::vector<PrimeOutcome> outcomes;
    if (config.threads <= 1) {
        for (const BigInt& p : primes) {
            outcomes.push_back(evaluate_prime(prep, p));
            if (outcomes.back().found) break;
        }
    } else {
        // Fixed-size batches of primes; stop after the first batch that has a hit.
        for (std::size_t start = 0; start < primes.size(); start += config.threads) {
            const std::size_t stop = std::min(primes.size(), start + config.threads);
            std::vector<std::future<PrimeOutcome>> jobs;
            for (std::size_t i = start; i < stop; ++i)
                jobs.push_back(std::async(std::launch::async, evaluate_prime, std::cref(prep), std::cref(primes[i])));
            bool hit = false;
            for (auto& j : jobs) {
                if (hit) {
                    j.wait();
                    continue;
                }
                outcomes.push_back(j.get());
                hit = outcomes.back().found.has_value();
            }
            if (hit) break;
        }
    }

    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        auto& o = outcomes[i];
        cert.audit.insert(cert.audit.end(), o.audit.begin(), o.audit.end());
        if (o.found) {
            cert.verdict = Verdict::irreducible;
            cert.prime = primes[i];
            cert.stage = o.found->stage;
            cert.transform = o.found->matrix;
            cert.witness = o.found->poly;
            cert.report = o.found->report;
            break;
        }
    }
    return cert;
}

bool verify(const Certificate& cert) {
    if (cert.verdict == Verdict::inconclusive)
        return !cert.prime && !cert.transform && !cert.witness && !cert.report;
    if (!cert.prime || !cert.transform || !cert.witness || !cert.report) return false;
    const auto deg = cert.input.actual_degree();
    if (!deg || *deg != cert.input.formal_degree()) return false;
    if (act(cert.input, *cert.transform) != *cert.witness) return false;
    const EDReport recomputed = is_ed(*cert.witness, PAdic(*cert.prime));
    return recomputed.verdict && recomputed == *cert.report;
}

} // namespace edcert
