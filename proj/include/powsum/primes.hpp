#pragma once

// Prime validation and enumeration, plus the validated prime set P and its
// radical product m.

#include <cstdint>
#include <string_view>
#include <vector>

#include "powsum/nat.hpp"

namespace powsum {

// Deterministic primality for any 64-bit n (Miller-Rabin over a witness set
// known to be complete for this range).
bool is_prime(uint64_t n);

inline constexpr uint64_t kSieveBoundCap = 100'000'000;

// All primes in [2, bound], ascending. Throws ResourceError beyond the cap.
std::vector<uint64_t> primes_up_to(uint64_t bound);

// Finite set of primes, kept sorted and duplicate-free. Construction
// normalizes order and duplicates but rejects composite entries. The empty
// set is allowed; its radical product is 1.
class PrimeSet {
public:
    PrimeSet() = default;

    // Throws DomainError if any entry fails is_prime.
    static PrimeSet from(std::vector<uint64_t> entries);
    // Comma-separated list, e.g. "2,3,5"; whitespace around entries is
    // accepted and the empty string denotes the empty set.
    static PrimeSet parse(std::string_view csv);

    const std::vector<uint64_t>& elements() const { return elements_; }
    bool contains(uint64_t p) const;
    bool empty() const { return elements_.empty(); }
    size_t size() const { return elements_.size(); }

    friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

private:
    std::vector<uint64_t> elements_;
};

// m = product of the primes in P (squarefree by construction); 1 for empty P.
Nat radical_product(const PrimeSet& p);

}  // namespace powsum
