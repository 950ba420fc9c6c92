#pragma once

// Witness construction x = 2^(m+1) for a prime set P (m = product of P) and
// machine-checkable certificates: x is representable as a^p + b^p exactly for
// p in P, with per-prime negative evidence for the other primes up to a bound.

#include <cstdint>
#include <string>
#include <vector>

#include "powsum/nat.hpp"
#include "powsum/powersum.hpp"
#include "powsum/primes.hpp"

#include "json.hpp"

namespace powsum {

inline constexpr uint64_t kDefaultWitnessExponentCap = 1'000'000;
// Exhaustive evidence is only produced (and accepted on recheck) for witness
// exponents small enough that the implied search bounds can be recomputed.
inline constexpr uint64_t kExhaustiveExponentCap = 4096;
// Decimal expansion of x is carried alongside the 2^t form up to this size.
inline constexpr uint64_t kDecimalExpansionCap = 4096;

struct Witness {
    PrimeSet primes;
    Nat m;                 // radical product of primes
    uint64_t exponent = 0; // t = m + 1
    Pow2Form x;            // 2^t
};

// Throws WitnessTooLarge if m + 1 exceeds the exponent cap.
Witness make_witness(const PrimeSet& p,
                     uint64_t exponent_cap = kDefaultWitnessExponentCap);

// The canonical representation a = b = 2^(m/p) of x for p in P.
// Throws DomainError if p is not in the witness's prime set.
Representation witness_representation(const Witness& w, uint64_t p);

enum class CheckMode { Structural, Exhaustive, Both };

std::string to_string(CheckMode mode);
CheckMode check_mode_from_string(std::string_view s);  // throws DomainError

struct PositiveCase {
    uint64_t p = 0;
    Representation rep;
};

struct NegativeCase {
    uint64_t q = 0;
    NonRepEvidence evidence;
};

struct Certificate {
    Witness witness;
    uint64_t prime_bound = 0;
    CheckMode mode = CheckMode::Structural;
    std::vector<PositiveCase> positive_cases;   // exactly P, ascending
    std::vector<NegativeCase> negative_cases;   // primes <= bound not in P
    bool verified = false;
    uint64_t search_cap = 0;  // cap in force for exhaustive evidence
};

// Build the witness for P and certify it at the given prime bound.
//   Structural: negative evidence is the remainder (t-1) mod q != 0.
//   Exhaustive: negative evidence is an exhausted represent_all search, and
//               every positive case is cross-checked by search as well.
//   Both:       both routes run and must agree (InconsistentEvidence if not).
// Throws ExhaustiveInfeasible when a required search cannot fit the cap.
Certificate verify_certificate(const PrimeSet& p, uint64_t prime_bound,
                               CheckMode mode,
                               uint64_t cap = kDefaultSearchCap);

// Fixed-field-order serialization; two runs over identical inputs produce
// byte-identical dumps.
nlohmann::ordered_json certificate_to_json(const Certificate& cert);

// Pure re-verification of a serialized certificate: no searches are re-run.
// Structural remainders, the witness arithmetic, the case coverage and every
// positive power sum are recomputed; exhaustive iteration counts are checked
// against the recomputed search bound.
struct RecheckResult {
    bool ok = false;
    std::string reason;  // empty when ok
};
RecheckResult recheck_certificate(const nlohmann::ordered_json& doc);

}  // namespace powsum
