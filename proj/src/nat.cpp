#include "powsum/nat.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

namespace powsum {

namespace {

constexpr uint64_t kLimbBase = uint64_t{1} << 32;
constexpr uint32_t kDecChunkDigits = 9;
constexpr uint32_t kDecChunk = 1'000'000'000u;  // 10^9 < 2^32

}  // namespace

Nat::Nat(uint64_t v) {
    if (v == 0) return;
    limbs_.push_back(static_cast<uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
}

void Nat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Nat Nat::pow2(uint64_t t) {
    Nat r;
    r.limbs_.assign(t / 32 + 1, 0);
    r.limbs_.back() = uint32_t{1} << (t % 32);
    return r;
}

size_t Nat::bit_length() const {
    if (limbs_.empty()) return 0;
    return (limbs_.size() - 1) * 32 + (32 - std::countl_zero(limbs_.back()));
}

bool Nat::bit(size_t i) const {
    size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

uint64_t Nat::to_uint64() const {
    if (limbs_.size() > 2) throw DomainError("Nat: value does not fit in 64 bits");
    uint64_t v = limbs_.empty() ? 0 : limbs_[0];
    if (limbs_.size() == 2) v |= uint64_t{limbs_[1]} << 32;
    return v;
}

std::strong_ordering operator<=>(const Nat& x, const Nat& y) {
    if (x.limbs_.size() != y.limbs_.size())
        return x.limbs_.size() <=> y.limbs_.size();
    for (size_t i = x.limbs_.size(); i-- > 0;) {
        if (x.limbs_[i] != y.limbs_[i]) return x.limbs_[i] <=> y.limbs_[i];
    }
    return std::strong_ordering::equal;
}

Nat operator+(const Nat& x, const Nat& y) {
    const Nat& a = x.limbs_.size() >= y.limbs_.size() ? x : y;
    const Nat& b = x.limbs_.size() >= y.limbs_.size() ? y : x;
    Nat r;
    r.limbs_.reserve(a.limbs_.size() + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        uint64_t sum = carry + a.limbs_[i] + (i < b.limbs_.size() ? b.limbs_[i] : 0);
        r.limbs_.push_back(static_cast<uint32_t>(sum));
        carry = sum >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
    return r;
}

void Nat::sub_in_place(const Nat& y) {
    uint64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t sub = borrow + (i < y.limbs_.size() ? y.limbs_[i] : 0);
        uint64_t cur = limbs_[i];
        if (cur >= sub) {
            limbs_[i] = static_cast<uint32_t>(cur - sub);
            borrow = 0;
        } else {
            limbs_[i] = static_cast<uint32_t>(cur + kLimbBase - sub);
            borrow = 1;
        }
    }
    trim();
}

Nat operator-(const Nat& x, const Nat& y) {
    if (x < y) throw DomainError("Nat: subtraction would go negative");
    Nat r = x;
    r.sub_in_place(y);
    return r;
}

Nat operator*(const Nat& x, const Nat& y) {
    if (x.is_zero() || y.is_zero()) return Nat{};
    Nat r;
    r.limbs_.assign(x.limbs_.size() + y.limbs_.size(), 0);
    for (size_t i = 0; i < x.limbs_.size(); ++i) {
        uint64_t carry = 0;
        uint64_t xi = x.limbs_[i];
        for (size_t j = 0; j < y.limbs_.size(); ++j) {
            uint64_t cur = r.limbs_[i + j] + xi * y.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r.limbs_[i + y.limbs_.size()] = static_cast<uint32_t>(carry);
    }
    r.trim();
    return r;
}

Nat Nat::operator<<(size_t bits) const {
    if (is_zero() || bits == 0) {
        Nat r = *this;
        return r;
    }
    size_t words = bits / 32, rem = bits % 32;
    Nat r;
    r.limbs_.assign(limbs_.size() + words + 1, 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t shifted = uint64_t{limbs_[i]} << rem;
        r.limbs_[i + words] |= static_cast<uint32_t>(shifted);
        r.limbs_[i + words + 1] |= static_cast<uint32_t>(shifted >> 32);
    }
    r.trim();
    return r;
}

Nat Nat::operator>>(size_t bits) const {
    if (bits >= bit_length()) return Nat{};
    size_t words = bits / 32, rem = bits % 32;
    Nat r;
    r.limbs_.assign(limbs_.size() - words, 0);
    for (size_t i = words; i < limbs_.size(); ++i) {
        uint64_t cur = uint64_t{limbs_[i]} >> rem;
        if (rem && i + 1 < limbs_.size())
            cur |= uint64_t{limbs_[i + 1]} << (32 - rem);
        r.limbs_[i - words] = static_cast<uint32_t>(cur);
    }
    r.trim();
    return r;
}

std::pair<Nat, Nat> Nat::divmod(const Nat& num, const Nat& den) {
    if (den.is_zero()) throw DomainError("Nat: division by zero");
    if (num < den) return {Nat{}, num};
    if (den.limbs_.size() == 1) {
        uint32_t d = den.limbs_[0];
        Nat q;
        q.limbs_.assign(num.limbs_.size(), 0);
        uint64_t rem = 0;
        for (size_t i = num.limbs_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | num.limbs_[i];
            q.limbs_[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        q.trim();
        return {std::move(q), Nat(rem)};
    }
    if (den.limbs_.size() == 2) {
        uint64_t d = den.to_uint64();
        Nat q;
        q.limbs_.assign(num.limbs_.size(), 0);
        unsigned __int128 rem = 0;
        for (size_t i = num.limbs_.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 32) | num.limbs_[i];
            q.limbs_[i] = static_cast<uint32_t>(static_cast<uint64_t>(cur / d));
            rem = cur % d;
        }
        q.trim();
        return {std::move(q), Nat(static_cast<uint64_t>(rem))};
    }
    // General case: binary long division, msb first.
    Nat q, r;
    q.limbs_.assign(num.limbs_.size(), 0);
    for (size_t i = num.bit_length(); i-- > 0;) {
        // r = (r << 1) | bit(i), done in place
        uint32_t carry = num.bit(i) ? 1u : 0u;
        for (size_t j = 0; j < r.limbs_.size(); ++j) {
            uint32_t next = r.limbs_[j] >> 31;
            r.limbs_[j] = (r.limbs_[j] << 1) | carry;
            carry = next;
        }
        if (carry) r.limbs_.push_back(carry);
        if (!(r < den)) {
            r.sub_in_place(den);
            q.limbs_[i / 32] |= uint32_t{1} << (i % 32);
        }
    }
    q.trim();
    return {std::move(q), std::move(r)};
}

Nat Nat::from_string(std::string_view decimal) {
    if (decimal.empty()) throw DomainError("Nat: empty decimal string");
    Nat r;
    size_t pos = 0;
    while (pos < decimal.size()) {
        size_t take = std::min<size_t>(kDecChunkDigits, decimal.size() - pos);
        uint32_t chunk = 0, scale = 1;
        for (size_t i = 0; i < take; ++i) {
            char c = decimal[pos + i];
            if (c < '0' || c > '9')
                throw DomainError("Nat: invalid decimal digit in \"" + std::string(decimal) + "\"");
            chunk = chunk * 10 + static_cast<uint32_t>(c - '0');
            scale *= 10;
        }
        r = r * Nat(scale) + Nat(chunk);
        pos += take;
    }
    return r;
}

std::string Nat::to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> chunks;
    Nat cur = *this;
    while (!cur.is_zero()) {
        auto [q, rem] = divmod(cur, Nat(kDecChunk));
        chunks.push_back(rem.limbs_.empty() ? 0 : rem.limbs_[0]);
        cur = std::move(q);
    }
    std::string out = std::to_string(chunks.back());
    char buf[16];
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", chunks[i]);
        out += buf;
    }
    return out;
}

Nat ipow(const Nat& base, uint64_t exp, size_t bit_cap) {
    Nat result(1);
    Nat square = base;
    auto guard = [bit_cap](const Nat& v) {
        if (v.bit_length() > bit_cap)
            throw ResultTooLarge("ipow: result exceeds bit-size cap of " +
                                 std::to_string(bit_cap) + " bits");
    };
    while (exp > 0) {
        if (exp & 1) {
            result *= square;
            guard(result);
        }
        exp >>= 1;
        if (exp > 0) {
            square *= square;
            guard(square);
        }
    }
    return result;
}

RootResult inth_root(const Nat& n, uint64_t k) {
    if (k == 0) throw DomainError("inth_root: k must be >= 1");
    if (n.is_zero()) return {Nat{}, true};
    if (k == 1) return {n, true};
    size_t bits = n.bit_length();
    if (k >= bits) {
        // 2^k > n, so the floor root is 1
        return {Nat(1), n == Nat(1)};
    }
    // Seed 2^ceil(bits/k) > n^(1/k); Newton descends monotonically to the
    // floor root and stops on the first non-decreasing step.
    Nat x = Nat::pow2((bits + k - 1) / k);
    while (true) {
        Nat pred = ipow(x, k - 1, kNoBitCap);
        Nat y = Nat::divmod(Nat(k - 1) * x + Nat::divmod(n, pred).first, Nat(k)).first;
        if (!(y < x)) break;
        x = std::move(y);
    }
    bool exact = ipow(x, k, kNoBitCap) == n;
    return {std::move(x), exact};
}

TwoAdicSplit two_adic_split(const Nat& n) {
    if (n.is_zero()) throw DomainError("two_adic_split: n must be >= 1");
    uint64_t tz = 0;
    while (!n.bit(tz)) ++tz;
    return {tz, n >> tz};
}

std::optional<uint64_t> as_pow2(const Nat& n) {
    if (n.is_zero()) return std::nullopt;
    // Power of two iff the odd part of the 2-adic split is 1.
    TwoAdicSplit s = two_adic_split(n);
    if (s.odd == Nat(1)) return s.valuation;
    return std::nullopt;
}

}  // namespace powsum
