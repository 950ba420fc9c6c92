#pragma once

// Arbitrary-precision non-negative integers and the handful of exact
// primitives the rest of the library is built on: powering with a result-size
// guard, integer nth roots, 2-adic splits and power-of-two recognition.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powsum/errors.hpp"

namespace powsum {

// Non-negative integer of unbounded size. Limbs are base 2^32, little-endian,
// with no leading zero limb; the empty limb vector denotes zero.
class Nat {
public:
    Nat() = default;
    Nat(uint64_t v);

    static Nat from_string(std::string_view decimal);  // throws DomainError
    std::string to_string() const;

    // 2^t
    static Nat pow2(uint64_t t);

    bool is_zero() const { return limbs_.empty(); }
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }

    // Number of significant bits; 0 for zero.
    size_t bit_length() const;
    bool bit(size_t i) const;

    bool fits_uint64() const { return limbs_.size() <= 2; }
    uint64_t to_uint64() const;  // throws DomainError if out of range

    friend Nat operator+(const Nat& x, const Nat& y);
    friend Nat operator-(const Nat& x, const Nat& y);  // throws if y > x
    friend Nat operator*(const Nat& x, const Nat& y);
    Nat operator<<(size_t bits) const;
    Nat operator>>(size_t bits) const;

    Nat& operator+=(const Nat& y) { return *this = *this + y; }
    Nat& operator-=(const Nat& y) { return *this = *this - y; }
    Nat& operator*=(const Nat& y) { return *this = *this * y; }

    // Quotient and remainder; throws DomainError on zero divisor.
    static std::pair<Nat, Nat> divmod(const Nat& num, const Nat& den);

    friend std::strong_ordering operator<=>(const Nat& x, const Nat& y);
    friend bool operator==(const Nat& x, const Nat& y) = default;

private:
    std::vector<uint32_t> limbs_;

    void trim();
    // In-place subtract, requires y <= *this.
    void sub_in_place(const Nat& y);
    friend class NatDiv;
};

// Compact form of 2^t; expansion is deferred until a full integer is needed.
struct Pow2Form {
    uint64_t exponent = 0;

    Nat expand() const { return Nat::pow2(exponent); }
    friend bool operator==(const Pow2Form&, const Pow2Form&) = default;
};

inline constexpr size_t kDefaultBitCap = size_t{1} << 20;
inline constexpr size_t kNoBitCap = ~size_t{0};

// base^exp, with 0^0 = 1. Throws ResultTooLarge once any intermediate value
// exceeds bit_cap bits.
Nat ipow(const Nat& base, uint64_t exp, size_t bit_cap = kDefaultBitCap);

// Floor k-th root plus exactness: root^k <= n < (root+1)^k, exact iff
// root^k == n. Newton iteration seeded from the bit length.
struct RootResult {
    Nat root;
    bool exact = false;
};
RootResult inth_root(const Nat& n, uint64_t k);

// n = 2^k * odd with odd odd; k is the 2-adic valuation. Throws on n = 0.
struct TwoAdicSplit {
    uint64_t valuation = 0;
    Nat odd;
};
TwoAdicSplit two_adic_split(const Nat& n);

// The exponent t with n = 2^t, or empty if n is not a power of two.
std::optional<uint64_t> as_pow2(const Nat& n);

}  // namespace powsum
