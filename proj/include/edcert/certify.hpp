#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edcert/arith.hpp"
#include "edcert/errors.hpp"
#include "edcert/factor.hpp"
#include "edcert/moebius.hpp"
#include "edcert/newton.hpp"
#include "edcert/poly.hpp"

namespace edcert {

/// A matrix together with the polynomial it sends the input to.
struct Transform {
    Mat2 matrix;
    FormalPoly poly;
};

/// U(A) = A(x - a_{n-1}/(n a_n)), the shear that kills the x^{n-1} term.
/// Requires n >= 1 and a_n != 0.
Transform upper_transform(const FormalPoly& poly);

/// L(A) = A [[1, 0], [-a_1/(n a_0), 1]], the lower shear that kills the x term.
/// Requires n >= 1 and a_0 != 0.
Transform lower_transform(const FormalPoly& poly);

/// phi(t) = t - n A(t) / A'(t). Requires A'(t) != 0.
Rational phi(const FormalPoly& poly, const Rational& t);

/// Thrown by one_param_member when t is not an admissible parameter.
class degenerate_parameter : public precondition_error {
public:
    enum class Reason { root, critical_point };

    degenerate_parameter(Reason reason, const std::string& what)
        : precondition_error(what), reason_(reason) {}

    Reason reason() const { return reason_; }

private:
    Reason reason_;
};

/// The member A [[t, phi(t)], [1, 1]] of the one-parameter family. Its matrix
/// has determinant n A(t) / A'(t), so t must be neither a root nor a critical
/// point of A.
Transform one_param_member(const FormalPoly& poly, const Rational& t);

struct CandidatePrimes {
    std::vector<BigInt> primes; // ascending, distinct
    bool complete = true;       // every factorization finished
    bool degenerate = false;    // a_0 = 0 or a_n = 0: only primes of n
};

/// Primes p for which a triangular or anti-triangular witness could exist:
/// those dividing n, or appearing in b_0/b_n for U(A) or c_0/c_n for L(A).
CandidatePrimes candidate_primes(const FormalPoly& poly, const FactorEffort& effort = {});

/// Reduced rationals a/b with |a| <= height and 1 <= b <= height, ordered by
/// max(|a|, b) and then by value.
std::vector<Rational> height_grid(unsigned height);

enum class Stage { direct = 1, upper = 2, lower = 3, one_parameter = 4 };
std::string_view to_string(Stage stage);

enum class Verdict { irreducible, inconclusive };

struct AuditEntry {
    BigInt prime;
    Stage stage;
    std::string reason;
    friend bool operator==(const AuditEntry&, const AuditEntry&) = default;
};

/// Result of a search. An irreducible verdict carries the prime, the stage
/// that found it, the matrix and the Eisenstein-Dumas witness act(input, transform).
struct Certificate {
    FormalPoly input;
    Verdict verdict = Verdict::inconclusive;
    std::optional<BigInt> prime;
    std::optional<Stage> stage;
    std::optional<Mat2> transform;
    std::optional<FormalPoly> witness;
    std::optional<EDReport> report;
    bool candidates_complete = true;
    std::vector<AuditEntry> audit;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct SearchConfig {
    std::vector<Rational> t_candidates = height_grid(8);
    std::vector<BigInt> extra_primes;
    FactorEffort effort;
    // Primes are evaluated on this many worker threads; the result does not
    // depend on it.
    unsigned threads = 1;
};

/// Tries every candidate prime in ascending order through four stages:
/// A itself, U(A), L(A), then the one-parameter family over t_candidates.
/// Stages 2-4 only run when p does not divide n. Requires n >= 2 and
/// a_n != 0.
Certificate certify_search(const FormalPoly& poly, const SearchConfig& config = {});

/// Recomputes the witness and its report from input, prime and transform.
/// Inconclusive certificates verify when they carry no witness data.
bool verify(const Certificate& cert);

} // namespace edcert
