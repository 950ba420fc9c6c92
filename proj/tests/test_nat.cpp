#include <cstdint>
#include <random>
#include <string>

#include "doctest.h"
#include "powsum/nat.hpp"

using powsum::Nat;

namespace {

// Reference power for small cases, independent of ipow.
Nat slow_pow(uint64_t base, uint64_t exp) {
    Nat r{1};
    for (uint64_t i = 0; i < exp; ++i) r *= Nat(base);
    return r;
}

}  // namespace

TEST_CASE("decimal round-trip") {
    for (uint64_t v : {0ull, 1ull, 9ull, 10ull, 4294967295ull, 4294967296ull,
                       18446744073709551615ull}) {
        Nat n{v};
        CHECK(n.to_string() == std::to_string(v));
        CHECK(Nat::from_string(n.to_string()) == n);
    }

    // Multi-limb value round-trips through the string form.
    std::string big = "340282366920938463463374607431768211456";  // frozen: 2^128
    Nat n = Nat::from_string(big);
    CHECK(n == Nat::pow2(128));
    CHECK(n.to_string() == big);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Nat x = slow_pow(rng() % 1000 + 2, rng() % 40) + Nat(rng());
        CHECK(Nat::from_string(x.to_string()) == x);
    }
}

TEST_CASE("from_string rejects junk") {
    CHECK_THROWS_AS(Nat::from_string(""), powsum::DomainError);
    CHECK_THROWS_AS(Nat::from_string("12a"), powsum::DomainError);
    CHECK_THROWS_AS(Nat::from_string("-3"), powsum::DomainError);
    CHECK_THROWS_AS(Nat::from_string(" 12"), powsum::DomainError);
    CHECK(Nat::from_string("00128") == Nat(128));  // leading zeros are fine
}

TEST_CASE("arithmetic agrees with machine words") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        uint64_t a = rng() >> 33, b = rng() >> 33;
        CHECK((Nat(a) + Nat(b)).to_uint64() == a + b);
        CHECK((Nat(a) * Nat(b)).to_uint64() == a * b);
        if (a < b) std::swap(a, b);
        CHECK((Nat(a) - Nat(b)).to_uint64() == a - b);
        if (b != 0) {
            auto [q, r] = Nat::divmod(Nat(a), Nat(b));
            CHECK(q.to_uint64() == a / b);
            CHECK(r.to_uint64() == a % b);
        }
    }
}

TEST_CASE("addition/subtraction round-trip on big values") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        Nat a = slow_pow(rng() % 97 + 2, rng() % 30) + Nat(rng());
        Nat b = slow_pow(rng() % 97 + 2, rng() % 30) + Nat(rng());
        CHECK((a + b) - b == a);
        CHECK((a + b) - a == b);
        CHECK(a * b == b * a);
    }
    CHECK_THROWS_AS(Nat(3) - Nat(5), powsum::DomainError);
}

TEST_CASE("divmod invariant num = q*den + r, r < den") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        Nat num = slow_pow(rng() % 500 + 2, rng() % 25) + Nat(rng());
        Nat den = slow_pow(rng() % 500 + 2, rng() % 12) + Nat(rng() % 1000);
        auto [q, r] = Nat::divmod(num, den);
        CHECK(q * den + r == num);
        CHECK(r < den);
    }
    CHECK_THROWS_AS(Nat::divmod(Nat(1), Nat(0)), powsum::DomainError);
}

TEST_CASE("shifts") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 100; ++i) {
        Nat n{rng()};
        size_t s = rng() % 130;
        Nat shifted = n << s;
        CHECK((shifted >> s) == n);
        CHECK(shifted == n * Nat::pow2(s));
    }
    CHECK((Nat(0) << 100) == Nat(0));
    CHECK((Nat(1) >> 1) == Nat(0));
}

TEST_CASE("ordering") {
    CHECK(Nat(0) < Nat(1));
    CHECK(Nat::pow2(64) > Nat(18446744073709551615ull));
    CHECK(Nat::pow2(32) == Nat(4294967296ull));
    CHECK(Nat(100) <= Nat(100));
}

TEST_CASE("ipow examples") {
    CHECK(powsum::ipow(Nat(2), 7) == Nat(128));
    CHECK(powsum::ipow(Nat(3), 0) == Nat(1));
    CHECK(powsum::ipow(Nat(12), 3) == Nat(1728));
    CHECK(powsum::ipow(Nat(0), 0) == Nat(1));  // empty product convention
    CHECK(powsum::ipow(Nat(0), 5) == Nat(0));
    CHECK(powsum::ipow(Nat(1), 1000000000ull) == Nat(1));
}

TEST_CASE("ipow matches repeated multiplication") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        uint64_t b = rng() % 50 + 1, e = rng() % 40;
        CHECK(powsum::ipow(Nat(b), e) == slow_pow(b, e));
    }
}

TEST_CASE("ipow additivity in the exponent") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 200; ++i) {
        uint64_t b = rng() % 50 + 1;
        uint64_t e1 = rng() % 65, e2 = rng() % (65 - e1);
        CHECK(powsum::ipow(Nat(b), e1 + e2) ==
              powsum::ipow(Nat(b), e1) * powsum::ipow(Nat(b), e2));
    }
}

TEST_CASE("ipow result-size guard") {
    CHECK_THROWS_AS(powsum::ipow(Nat(2), 1'048'577), powsum::ResultTooLarge);
    CHECK_THROWS_AS(powsum::ipow(Nat(10), 1'000'000), powsum::ResultTooLarge);
    CHECK_THROWS_AS(powsum::ipow(Nat(3), 1000, 64), powsum::ResultTooLarge);
    CHECK(powsum::ipow(Nat(2), 63, 64) == Nat::pow2(63));
    // Uncapped call succeeds where the default would not matter anyway.
    CHECK(powsum::ipow(Nat(2), 100, powsum::kNoBitCap) == Nat::pow2(100));
}

TEST_CASE("inth_root examples") {
    auto r = powsum::inth_root(Nat(1728), 3);
    CHECK(r.root == Nat(12));
    CHECK(r.exact);

    // 12^3 = 1728 < 1729 < 13^3 = 2197, so the floor root of 1729 is 12 and
    // not exact (bracketing recomputed here by direct multiplication).
    CHECK(Nat(12) * Nat(12) * Nat(12) == Nat(1728));
    CHECK(Nat(13) * Nat(13) * Nat(13) == Nat(2197));
    r = powsum::inth_root(Nat(1729), 3);
    CHECK(r.root == Nat(12));
    CHECK(!r.exact);

    r = powsum::inth_root(Nat(0), 5);
    CHECK(r.root == Nat(0));
    CHECK(r.exact);

    CHECK_THROWS_AS(powsum::inth_root(Nat(5), 0), powsum::DomainError);
}

TEST_CASE("inth_root floor property over a dense range") {
    // Spec-level invariant: root^k <= n < (root+1)^k and exact <=> root^k = n.
    for (uint64_t k = 1; k <= 10; ++k) {
        for (uint64_t n = 0; n <= 100'000; ++n) {
            auto [root, exact] = powsum::inth_root(Nat(n), k);
            Nat rk = powsum::ipow(root, k);
            REQUIRE(rk <= Nat(n));
            REQUIRE(Nat(n) < powsum::ipow(root + Nat(1), k));
            REQUIRE(exact == (rk == Nat(n)));
        }
    }
}

TEST_CASE("inth_root on big exact and near-exact powers") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        uint64_t base = rng() % 1000 + 2, k = rng() % 9 + 2;
        Nat n = slow_pow(base, k);
        auto r = powsum::inth_root(n, k);
        CHECK(r.root == Nat(base));
        CHECK(r.exact);
        r = powsum::inth_root(n + Nat(1), k);
        CHECK(r.root == Nat(base));
        CHECK(!r.exact);
        r = powsum::inth_root(n - Nat(1), k);
        CHECK(r.root == Nat(base - 1));
        CHECK(!r.exact);
    }
}

TEST_CASE("two_adic_split examples") {
    auto s = powsum::two_adic_split(Nat(12));
    CHECK(s.valuation == 2);
    CHECK(s.odd == Nat(3));

    s = powsum::two_adic_split(Nat(1));
    CHECK(s.valuation == 0);
    CHECK(s.odd == Nat(1));

    s = powsum::two_adic_split(Nat(1024));
    CHECK(s.valuation == 10);
    CHECK(s.odd == Nat(1));

    CHECK_THROWS_AS(powsum::two_adic_split(Nat(0)), powsum::DomainError);
}

TEST_CASE("two_adic_split reconstructs n with odd part") {
    for (uint64_t n = 1; n <= 100'000; ++n) {
        auto [k, odd] = powsum::two_adic_split(Nat(n));
        REQUIRE(odd.is_odd());
        REQUIRE(Nat::pow2(k) * odd == Nat(n));
    }
}

TEST_CASE("as_pow2 examples") {
    CHECK(powsum::as_pow2(Nat(128)) == 7);
    CHECK(!powsum::as_pow2(Nat(0)).has_value());
    CHECK(!powsum::as_pow2(Nat(96)).has_value());
    CHECK(powsum::as_pow2(Nat(1)) == 0);
}

TEST_CASE("as_pow2 inverts pow2 across a wide exponent range") {
    for (uint64_t t = 0; t <= 256; ++t) {
        CHECK(powsum::as_pow2(powsum::ipow(Nat(2), t)) == t);
        // Pow2Form invariant: expanding and reading the valuation returns t.
        powsum::Pow2Form f{t};
        CHECK(powsum::two_adic_split(f.expand()).valuation == t);
    }
    CHECK(!powsum::as_pow2(Nat::pow2(200) + Nat(1)).has_value());
}

TEST_CASE("bit_length and to_uint64 edges") {
    CHECK(Nat(0).bit_length() == 0);
    CHECK(Nat(1).bit_length() == 1);
    CHECK(Nat(255).bit_length() == 8);
    CHECK(Nat::pow2(100).bit_length() == 101);
    CHECK(Nat(18446744073709551615ull).to_uint64() == 18446744073709551615ull);
    CHECK_THROWS_AS(Nat::pow2(64).to_uint64(), powsum::DomainError);
}
