#pragma once

/**
 * Verification registry: a fixed catalog of identities -- integer/rational
 * congruence families, truncated-expansion identities in the Mal'cev-Neumann
 * layer, sigma-calculus expansion identities, and Newton-polygon slope
 * certificates -- each checked by exact arithmetic at a stated precision.
 *
 * Every check produces a VerificationReport with one witness line per
 * verified quantity: required bound, achieved value, slack.  Statuses:
 *
 *   PASS          every witness holds (slack >= 0 / exact match)
 *   FAIL          a hard witness failed
 *   NEEDS-REVIEW  only componentwise sigma-congruence witnesses failed;
 *                 that check is sufficient but not necessary, so a failure
 *                 flags the identity for a human rather than refuting it
 *   ERROR         invalid input (e.g. p not an odd prime) or an internal
 *                 precision/domain failure, with the message in the witness
 *
 * The reports serialize to stable JSON (insertion-ordered keys, exact
 * rational strings) so independent runs can be byte-compared.
 */

#include "expansions.hpp"
#include "newton.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace lpadic {

enum class Status { Pass, Fail, NeedsReview, Error };
std::string status_str(Status s);

enum class Method { Congruence, MNExact, SigmaSymbolic, SlopeBound };
std::string method_str(Method m);

struct WitnessLine {
    std::string quantity;
    std::string required;
    std::string achieved;
    std::string slack; // "inf", or exact rational; negative iff the line failed
    bool ok = true;
};

struct VerificationReport {
    std::string id;
    long p = 0;
    std::string params; // extra fixed parameters ("n=2, beta in {0,1,2}"), may be empty
    Status status = Status::Error;
    std::vector<WitnessLine> witness;
};

bool is_odd_prime(long p);

// All registered identity ids, lexicographically sorted.
const std::vector<std::string>& registry_ids();
bool registry_has(const std::string& id);
Method registry_method(const std::string& id);      // id must be registered
std::string registry_params(const std::string& id); // fixed-parameter note, may be ""

// Run one identity at an odd prime p.  A non-prime (or even) p yields an
// ERROR report; an unregistered id throws EngineError(InvalidArg).
// alt_modulus selects the alternative residue-field presentation, for
// checking that verdicts do not depend on the choice of F_{p^2} modulus.
VerificationReport verify_identity(const std::string& id, long p, bool alt_modulus = false);
std::vector<VerificationReport> verify_all(long p, bool alt_modulus = false);
std::vector<VerificationReport> verify_method(Method m, long p, bool alt_modulus = false);

// Substitute the K-term concrete tail sum for the sigma symbol in the
// level-n root-of-unity expansion and compare against an independently
// recomputed Newton-algorithm root at the exact surviving precision
// r_eff = 1/(p^{n-2}(p-1)) - 1/p^{n+K}.  Requires n >= 2, K >= 1.
VerificationReport residual_check(long p, long n, long K);

// --- JSON serialization -------------------------------------------------
nlohmann::ordered_json report_json(const VerificationReport& r);
nlohmann::ordered_json mn_json(const MNContext& mn, const MNElement& a);
nlohmann::ordered_json sigma_json(const SigmaCtx& sc, const SigmaElement& a);
nlohmann::ordered_json newton_trace_json(const MNContext& mn, const NewtonResult& res);

} // namespace lpadic
