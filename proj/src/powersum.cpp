#include "powsum/powersum.hpp"

#include <string>
#include <utility>

namespace powsum {

bool verify_representation(const Representation& r) {
    if (r.a.is_zero() || r.b < r.a) return false;
    return ipow(r.a, r.p, kNoBitCap) + ipow(r.b, r.p, kNoBitCap) == r.n;
}

std::vector<Representation> represent_all(const Nat& n, uint64_t p, uint64_t cap) {
    if (n < Nat(2)) throw DomainError("represent_all: n must be >= 2");
    if (p == 0) throw DomainError("represent_all: p must be >= 1");

    Nat half = n >> 1;
    size_t half_bits = half.bit_length();
    // Cheap pre-estimate before the exact root: the loop bound is
    // floor(half^(1/p)) >= 2^((half_bits-1)/p). When even that lower bound
    // overflows 64 bits, skip the exact root computation entirely.
    if (half_bits > 0 && (half_bits - 1) / p >= 64)
        throw SearchTooLarge("represent_all: projected bound exceeds cap " +
                                 std::to_string(cap),
                             UINT64_MAX, cap);
    Nat bound_nat = inth_root(half, p).root;
    if (bound_nat > Nat(cap))
        throw SearchTooLarge("represent_all: search bound " + bound_nat.to_string() +
                                 " exceeds cap " + std::to_string(cap),
                             bound_nat.fits_uint64() ? bound_nat.to_uint64() : UINT64_MAX,
                             cap);
    uint64_t bound = bound_nat.is_zero() ? 0 : bound_nat.to_uint64();

    std::vector<Representation> out;
    for (uint64_t a = 1; a <= bound; ++a) {
        Nat na(a);
        Nat ap = ipow(na, p, kNoBitCap);
        auto [root, exact] = inth_root(n - ap, p);
        if (exact && !(root < na)) {
            out.push_back(Representation{n, p, std::move(na), std::move(root)});
        }
    }
    return out;
}

Representation Pow2Decision::representation() const {
    if (!representable())
        throw DomainError("Pow2Decision: no representation, remainder " +
                          std::to_string(remainder));
    Nat a = Nat::pow2(half_exponent());
    return Representation{Nat::pow2(t), q, a, a};
}

Pow2Decision pow2_representable(uint64_t t, uint64_t q) {
    if (t == 0) throw DomainError("pow2_representable: t must be >= 1");
    if (!is_prime(q))
        throw DomainError("pow2_representable: " + std::to_string(q) +
                          " is not prime; the structural argument covers primes only");
    return Pow2Decision{t, q, (t - 1) % q};
}

Nat odd_cofactor(const Nat& c, const Nat& d, uint64_t p) {
    if (!c.is_odd() || !d.is_odd())
        throw DomainError("odd_cofactor: c and d must be odd");
    if (p == 2 || !is_prime(p))
        throw DomainError("odd_cofactor: p must be an odd prime");

    Nat sum = ipow(c, p, kNoBitCap) + ipow(d, p, kNoBitCap);
    auto [quotient, rem] = Nat::divmod(sum, c + d);
    if (!rem.is_zero())
        throw InconsistentEvidence("odd_cofactor: c+d does not divide c^p + d^p");

    // Independent route: sum_{i=0}^{p-1} (-1)^i c^(p-1-i) d^i, accumulated as
    // separate plus/minus parts.
    Nat plus, minus;
    for (uint64_t i = 0; i < p; ++i) {
        Nat term = ipow(c, p - 1 - i, kNoBitCap) * ipow(d, i, kNoBitCap);
        if (i % 2 == 0)
            plus += term;
        else
            minus += term;
    }
    Nat alternating = plus - minus;
    if (alternating != quotient)
        throw InconsistentEvidence(
            "odd_cofactor: exact division and alternating sum disagree");
    if (!quotient.is_odd())
        throw InconsistentEvidence("odd_cofactor: cofactor came out even");
    return quotient;
}

}  // namespace powsum
