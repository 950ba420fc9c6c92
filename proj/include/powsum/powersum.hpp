#pragma once

// Deciding and enumerating representations n = a^p + b^p: an exhaustive
// search engine for arbitrary n, and the structural decision for n = 2^t
// (a representation a^q + b^q = 2^t with prime q exists iff q divides t-1,
// and is then uniquely a = b = 2^((t-1)/q)).

#include <cstdint>
#include <optional>
#include <vector>

#include "powsum/nat.hpp"
#include "powsum/primes.hpp"

namespace powsum {

inline constexpr uint64_t kDefaultSearchCap = 10'000'000;

// A verified pair a <= b with a^p + b^p = n.
struct Representation {
    Nat n;
    uint64_t p = 0;
    Nat a;
    Nat b;

    friend bool operator==(const Representation&, const Representation&) = default;
};

// True iff a >= 1, a <= b and a^p + b^p recomputes to n.
bool verify_representation(const Representation& r);

// All (a, b) with 1 <= a <= b and a^p + b^p = n, ascending in a. The loop
// iterates a while 2*a^p <= n and asks inth_root whether n - a^p is an exact
// p-th power >= a. Throws SearchTooLarge when the loop bound exceeds cap.
std::vector<Representation> represent_all(const Nat& n, uint64_t p,
                                          uint64_t cap = kDefaultSearchCap);

// Structural decision for n = 2^t and prime q. Representable iff
// (t-1) mod q == 0; the remainder is kept either way.
struct Pow2Decision {
    uint64_t t = 0;
    uint64_t q = 0;
    uint64_t remainder = 0;  // (t-1) mod q

    bool representable() const { return remainder == 0; }
    uint64_t half_exponent() const { return (t - 1) / q; }  // a = b = 2^this
    // The unique canonical representation; only valid when representable().
    Representation representation() const;
};

// Throws DomainError unless t >= 1 and q is prime.
Pow2Decision pow2_representable(uint64_t t, uint64_t q);

// Q = (c^p + d^p) / (c + d) for odd c, d and odd prime p. Q is odd and the
// division is exact; Q is computed both by exact division and by the
// alternating sum sum_{i<p} (-1)^i c^(p-1-i) d^i, and the two must match
// (InconsistentEvidence otherwise -- that would be a bug, not bad input).
Nat odd_cofactor(const Nat& c, const Nat& d, uint64_t p);

// Evidence that some n admits no representation with a given exponent.
struct NonRepEvidence {
    enum class Kind { Structural, Exhaustive, Both };
    Kind kind = Kind::Structural;
    // Structural route (n = 2^t only): the nonzero remainder (t-1) mod q.
    std::optional<uint64_t> t;
    std::optional<uint64_t> remainder;
    // Exhaustive route: the search bound that was exhausted, and the cap in
    // force while searching.
    std::optional<uint64_t> cap;
    std::optional<uint64_t> iterations;
};

}  // namespace powsum
