#include "powsum/primes.hpp"

#include <algorithm>
#include <string>

namespace powsum {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Returns false if a proves n composite.
bool strong_probable_prime(uint64_t n, uint64_t a, uint64_t d, int s) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for all n < 3.3 * 10^24, which
    // covers the full 64-bit range.
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!strong_probable_prime(n, a, d, s)) return false;
    }
    return true;
}

std::vector<uint64_t> primes_up_to(uint64_t bound) {
    if (bound > kSieveBoundCap)
        throw ResourceError("primes_up_to: bound " + std::to_string(bound) +
                            " exceeds cap " + std::to_string(kSieveBoundCap));
    std::vector<uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (uint64_t i = 2; i * i <= bound; ++i) {
        if (composite[i]) continue;
        for (uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    for (uint64_t i = 2; i <= bound; ++i) {
        if (!composite[i]) out.push_back(i);
    }
    return out;
}

PrimeSet PrimeSet::from(std::vector<uint64_t> entries) {
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
    for (uint64_t p : entries) {
        if (!is_prime(p))
            throw DomainError("PrimeSet: " + std::to_string(p) + " is not prime");
    }
    PrimeSet s;
    s.elements_ = std::move(entries);
    return s;
}

PrimeSet PrimeSet::parse(std::string_view csv) {
    std::vector<uint64_t> entries;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string_view item = csv.substr(pos, comma - pos);
        while (!item.empty() && (item.front() == ' ' || item.front() == '\t'))
            item.remove_prefix(1);
        while (!item.empty() && (item.back() == ' ' || item.back() == '\t'))
            item.remove_suffix(1);
        if (!item.empty()) {
            uint64_t v = 0;
            for (char c : item) {
                if (c < '0' || c > '9')
                    throw DomainError("PrimeSet: invalid entry \"" + std::string(item) + "\"");
                uint64_t next = v * 10 + static_cast<uint64_t>(c - '0');
                if (next / 10 != v)
                    throw DomainError("PrimeSet: entry \"" + std::string(item) +
                                      "\" exceeds 64 bits");
                v = next;
            }
            entries.push_back(v);
        } else if (!(pos == 0 && comma == csv.size())) {
            throw DomainError("PrimeSet: empty entry in list");
        }
        pos = comma + 1;
    }
    return from(std::move(entries));
}

bool PrimeSet::contains(uint64_t p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

Nat radical_product(const PrimeSet& p) {
    Nat m(1);
    for (uint64_t q : p.elements()) m *= Nat(q);
    return m;
}

}  // namespace powsum
