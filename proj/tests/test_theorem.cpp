#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "powsum/theorem.hpp"

using nlohmann::ordered_json;
using powsum::CheckMode;
using powsum::Nat;
using powsum::PrimeSet;

namespace {

powsum::Certificate small_cert(CheckMode mode = CheckMode::Both) {
    return powsum::verify_certificate(PrimeSet::from({2, 3}), 13, mode);
}

}  // namespace

TEST_CASE("make_witness examples") {
    auto w = powsum::make_witness(PrimeSet::from({2, 3}));
    CHECK(w.m == Nat(6));
    CHECK(w.exponent == 7);
    CHECK(w.x.expand() == Nat(128));

    w = powsum::make_witness(PrimeSet());
    CHECK(w.m == Nat(1));
    CHECK(w.exponent == 2);
    CHECK(w.x.expand() == Nat(4));

    w = powsum::make_witness(PrimeSet::from({5}));
    CHECK(w.m == Nat(5));
    CHECK(w.exponent == 6);
    CHECK(w.x.expand() == Nat(64));
}

TEST_CASE("witness exponent divisibility") {
    for (auto entries : std::vector<std::vector<uint64_t>>{
             {2}, {2, 3}, {2, 3, 5}, {3, 7}, {2, 3, 5, 7, 11}}) {
        auto w = powsum::make_witness(PrimeSet::from(entries));
        for (uint64_t p : entries) {
            CHECK((w.exponent - 1) % p == 0);
            auto [q, r] = Nat::divmod(w.m, Nat(p));
            CHECK(r == Nat(0));
        }
    }
}

TEST_CASE("make_witness exponent guard") {
    // 2*3*5*7*11*13*17 = 510510 fits the default cap; adding 19 does not.
    CHECK(powsum::make_witness(PrimeSet::from({2, 3, 5, 7, 11, 13, 17})).exponent ==
          510511);
    CHECK_THROWS_AS(powsum::make_witness(PrimeSet::from({2, 3, 5, 7, 11, 13, 17, 19})),
                    powsum::WitnessTooLarge);
    CHECK_THROWS_AS(powsum::make_witness(PrimeSet::from({2, 3}), 5),
                    powsum::WitnessTooLarge);
}

TEST_CASE("witness_representation examples") {
    auto w23 = powsum::make_witness(PrimeSet::from({2, 3}));
    auto r = powsum::witness_representation(w23, 3);
    CHECK(r.a == Nat(4));
    CHECK(r.b == Nat(4));
    CHECK(r.n == Nat(128));
    CHECK(powsum::verify_representation(r));

    r = powsum::witness_representation(w23, 2);
    CHECK(r.a == Nat(8));
    CHECK(powsum::verify_representation(r));

    auto w5 = powsum::make_witness(PrimeSet::from({5}));
    r = powsum::witness_representation(w5, 5);
    CHECK(r.a == Nat(2));
    CHECK(powsum::verify_representation(r));

    CHECK_THROWS_AS(powsum::witness_representation(w23, 5), powsum::DomainError);
}

TEST_CASE("verify_certificate on P = {2,3} in Both mode") {
    auto cert = small_cert();
    CHECK(cert.verified);
    REQUIRE(cert.positive_cases.size() == 2);
    CHECK(cert.positive_cases[0].p == 2);
    CHECK(cert.positive_cases[0].rep.a == Nat(8));
    CHECK(cert.positive_cases[1].p == 3);
    CHECK(cert.positive_cases[1].rep.a == Nat(4));

    // Negatives are 5, 7, 11, 13 with remainders 6 mod q, and an exhaustive
    // search over 2^7 = 128 finds nothing (cross-checked here directly).
    REQUIRE(cert.negative_cases.size() == 4);
    std::vector<uint64_t> qs{5, 7, 11, 13};
    for (size_t i = 0; i < qs.size(); ++i) {
        const auto& nc = cert.negative_cases[i];
        CHECK(nc.q == qs[i]);
        CHECK(nc.evidence.kind == powsum::NonRepEvidence::Kind::Both);
        CHECK(nc.evidence.remainder == 6 % qs[i]);
        CHECK(*nc.evidence.remainder != 0);
        CHECK(nc.evidence.iterations.has_value());
        CHECK(powsum::represent_all(Nat(128), qs[i]).empty());
    }
}

TEST_CASE("verify_certificate on empty P") {
    auto cert = powsum::verify_certificate(PrimeSet(), 13, CheckMode::Both);
    CHECK(cert.verified);
    CHECK(cert.positive_cases.empty());
    REQUIRE(cert.negative_cases.size() == 6);  // all primes <= 13
    for (const auto& nc : cert.negative_cases) {
        CHECK(nc.evidence.remainder == 1 % nc.q);  // t - 1 = 1
        CHECK(powsum::represent_all(Nat(4), nc.q).empty());
    }
}

TEST_CASE("tampered positive case fails verification") {
    auto cert = small_cert();
    // Spec scenario: positive case for p = 3 tampered to (a = 2, b = 5).
    cert.positive_cases[1].rep.a = Nat(2);
    cert.positive_cases[1].rep.b = Nat(5);
    CHECK(!powsum::verify_representation(cert.positive_cases[1].rep));

    ordered_json doc = powsum::certificate_to_json(cert);
    auto res = powsum::recheck_certificate(doc);
    CHECK(!res.ok);
    CHECK(!res.reason.empty());
}

TEST_CASE("selectivity over all subsets of {2,3,5}") {
    std::vector<uint64_t> base{2, 3, 5};
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<uint64_t> entries;
        for (int i = 0; i < 3; ++i)
            if (mask & (1 << i)) entries.push_back(base[i]);
        PrimeSet p = PrimeSet::from(entries);
        auto w = powsum::make_witness(p);
        for (uint64_t q : powsum::primes_up_to(13)) {
            CHECK(powsum::pow2_representable(w.exponent, q).representable() ==
                  p.contains(q));
        }
    }
}

TEST_CASE("certificates are deterministic") {
    std::string first = powsum::certificate_to_json(small_cert()).dump(2);
    std::string second = powsum::certificate_to_json(small_cert()).dump(2);
    CHECK(first == second);
    CHECK(!first.empty());
}

TEST_CASE("certificate JSON schema") {
    ordered_json doc = powsum::certificate_to_json(small_cert());

    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"primes", "m", "x", "x_decimal",
                                           "prime_bound", "mode",
                                           "positive_cases", "negative_cases",
                                           "verified"});

    CHECK(doc["primes"] == ordered_json::array({2, 3}));
    CHECK(doc["m"] == "6");
    CHECK(doc["x"]["base"] == 2);
    CHECK(doc["x"]["exponent"] == 7);
    CHECK(doc["x_decimal"] == "128");
    CHECK(doc["prime_bound"] == 13);
    CHECK(doc["mode"] == "both");
    CHECK(doc["verified"] == true);

    REQUIRE(doc["positive_cases"].size() == 2);
    CHECK(doc["positive_cases"][0]["p"] == 2);
    CHECK(doc["positive_cases"][0]["a"] == "8");
    CHECK(doc["positive_cases"][0]["b"] == "8");

    REQUIRE(doc["negative_cases"].size() == 4);
    CHECK(doc["negative_cases"][0]["q"] == 5);
    CHECK(doc["negative_cases"][0]["evidence"]["kind"] == "both");
    CHECK(doc["negative_cases"][0]["evidence"]["remainder"] == 1);
    CHECK(doc["negative_cases"][0]["evidence"]["iterations"] == 2);

    // Structural-only evidence omits the search fields.
    ordered_json sdoc =
        powsum::certificate_to_json(small_cert(CheckMode::Structural));
    CHECK(sdoc["negative_cases"][0]["evidence"]["kind"] == "structural");
    CHECK(!sdoc["negative_cases"][0]["evidence"].contains("cap"));
    CHECK(!sdoc["negative_cases"][0]["evidence"].contains("iterations"));
}

TEST_CASE("exhaustive mode feasibility guards") {
    // P = {7, 11}: t = 78, and searching q = 2 would need floor(2^38.5)
    // iterations, far over the default cap.
    PrimeSet p = PrimeSet::from({7, 11});
    CHECK_THROWS_AS(powsum::verify_certificate(p, 13, CheckMode::Exhaustive),
                    powsum::ExhaustiveInfeasible);
    // The same set is fine structurally.
    auto cert = powsum::verify_certificate(p, 13, CheckMode::Structural);
    CHECK(cert.verified);

    // Witness exponent above the exhaustive cap is rejected outright.
    PrimeSet big = PrimeSet::from({2, 3, 5, 7, 11, 13});  // t = 30031
    CHECK_THROWS_AS(powsum::verify_certificate(big, 13, CheckMode::Exhaustive),
                    powsum::ExhaustiveInfeasible);
    CHECK(powsum::verify_certificate(big, 13, CheckMode::Structural).verified);
}

TEST_CASE("verify_certificate input validation") {
    CHECK_THROWS_AS(powsum::verify_certificate(PrimeSet(), 1, CheckMode::Both),
                    powsum::DomainError);
    CHECK_THROWS_AS(powsum::check_mode_from_string("half"), powsum::DomainError);
    CHECK(powsum::check_mode_from_string("both") == CheckMode::Both);
    CHECK(powsum::to_string(CheckMode::Exhaustive) == "exhaustive");
}

TEST_CASE("recheck accepts round-tripped certificates") {
    for (CheckMode mode :
         {CheckMode::Structural, CheckMode::Exhaustive, CheckMode::Both}) {
        auto doc = powsum::certificate_to_json(small_cert(mode));
        auto res = powsum::recheck_certificate(doc);
        CHECK(res.ok);
        CHECK(res.reason.empty());
    }
    // Also after a serialize/parse round trip through text.
    auto doc = powsum::certificate_to_json(small_cert());
    auto reparsed = ordered_json::parse(doc.dump(2));
    CHECK(powsum::recheck_certificate(reparsed).ok);

    // Structural certificates recheck even for huge witnesses (no search).
    auto big = powsum::certificate_to_json(powsum::verify_certificate(
        PrimeSet::from({2, 3, 5, 7, 11, 13}), 30, CheckMode::Structural));
    CHECK(powsum::recheck_certificate(big).ok);
}

TEST_CASE("recheck rejects every single-field mutation") {
    ordered_json base = powsum::certificate_to_json(small_cert());
    REQUIRE(powsum::recheck_certificate(base).ok);

    auto expect_fail = [&](ordered_json doc, const char* what) {
        auto res = powsum::recheck_certificate(doc);
        INFO("mutation: " << what);
        CHECK(!res.ok);
        CHECK(!res.reason.empty());
    };

    ordered_json doc = base;
    doc["primes"][1] = 5;  // witness arithmetic no longer matches
    expect_fail(doc, "primes entry");

    doc = base;
    doc["primes"][1] = 4;  // composite entry
    expect_fail(doc, "composite prime");

    doc = base;
    doc["m"] = "12";
    expect_fail(doc, "m");

    doc = base;
    doc["x"]["base"] = 3;
    expect_fail(doc, "x.base");

    doc = base;
    doc["x"]["exponent"] = 8;
    expect_fail(doc, "x.exponent");

    doc = base;
    doc["x_decimal"] = "129";
    expect_fail(doc, "x_decimal");

    doc = base;
    doc["prime_bound"] = 17;  // coverage now missing q = 17
    expect_fail(doc, "prime_bound");

    doc = base;
    doc["mode"] = "structural";  // evidence kinds say both
    expect_fail(doc, "mode");

    doc = base;
    doc["positive_cases"][0]["a"] = "4";
    expect_fail(doc, "positive a");

    doc = base;
    doc["positive_cases"][0]["b"] = "16";
    expect_fail(doc, "positive b");

    doc = base;
    doc["positive_cases"][0]["p"] = 3;
    expect_fail(doc, "positive p");

    doc = base;
    doc["negative_cases"][0]["q"] = 6;
    expect_fail(doc, "negative q");

    doc = base;
    doc["negative_cases"][0]["evidence"]["remainder"] = 0;
    expect_fail(doc, "remainder zero");

    doc = base;
    doc["negative_cases"][0]["evidence"]["remainder"] = 2;
    expect_fail(doc, "remainder wrong");

    doc = base;
    doc["negative_cases"][0]["evidence"]["iterations"] =
        doc["negative_cases"][0]["evidence"]["iterations"].get<uint64_t>() - 1;
    expect_fail(doc, "iterations");

    doc = base;
    doc["negative_cases"][0]["evidence"]["cap"] = 1;  // below iterations
    expect_fail(doc, "cap below iterations");

    doc = base;
    doc["verified"] = false;
    expect_fail(doc, "verified");

    doc = base;
    doc.erase("m");
    expect_fail(doc, "missing m");

    doc = base;
    doc["note"] = "tampered";
    expect_fail(doc, "extra field");
}
