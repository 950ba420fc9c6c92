#include "powsum/theorem.hpp"

#include <algorithm>
#include <utility>

namespace powsum {

namespace {

// Exact check a^p + b^p == 2^t with a power-of-two fast path: a sum of two
// equal powers 2^e + 2^e is 2^(e+1), and unequal powers of two never sum to
// a power of two (the smaller one survives as a lower set bit).
bool power_sum_equals_pow2(const Nat& a, const Nat& b, uint64_t p, uint64_t t) {
    auto ea = as_pow2(a);
    auto eb = as_pow2(b);
    if (ea && eb) {
        if (*ea != *eb) return false;
        // (2^e)^p + (2^e)^p = 2^(e*p + 1)
        unsigned __int128 total = static_cast<unsigned __int128>(*ea) * p + 1;
        return total == t;
    }
    return ipow(a, p, kNoBitCap) + ipow(b, p, kNoBitCap) == Nat::pow2(t);
}

// floor((2^t / 2)^(1/q)) = floor(2^((t-1)/q)), the represent_all loop bound
// for n = 2^t. Returns UINT64_MAX when it cannot fit 64 bits.
uint64_t projected_search_bound(uint64_t t, uint64_t q) {
    uint64_t e = (t - 1) / q;
    if (e >= 64) return UINT64_MAX;
    if ((t - 1) % q == 0) return uint64_t{1} << e;
    Nat root = inth_root(Nat::pow2(t - 1), q).root;
    return root.fits_uint64() ? root.to_uint64() : UINT64_MAX;
}

}  // namespace

std::string to_string(CheckMode mode) {
    switch (mode) {
        case CheckMode::Structural: return "structural";
        case CheckMode::Exhaustive: return "exhaustive";
        case CheckMode::Both: return "both";
    }
    return "structural";
}

CheckMode check_mode_from_string(std::string_view s) {
    if (s == "structural") return CheckMode::Structural;
    if (s == "exhaustive") return CheckMode::Exhaustive;
    if (s == "both") return CheckMode::Both;
    throw DomainError("unknown mode \"" + std::string(s) +
                      "\" (expected structural, exhaustive or both)");
}

Witness make_witness(const PrimeSet& p, uint64_t exponent_cap) {
    Nat m = radical_product(p);
    if (!(m < Nat(exponent_cap)))
        throw WitnessTooLarge("witness exponent m+1 = " + (m + Nat(1)).to_string() +
                              " exceeds cap " + std::to_string(exponent_cap));
    uint64_t t = m.to_uint64() + 1;
    return Witness{p, std::move(m), t, Pow2Form{t}};
}

Representation witness_representation(const Witness& w, uint64_t p) {
    if (!w.primes.contains(p))
        throw DomainError("witness_representation: " + std::to_string(p) +
                          " is not in the witness prime set");
    // m = t - 1 is divisible by every prime of the set, so a = b = 2^(m/p).
    Nat a = Nat::pow2((w.exponent - 1) / p);
    return Representation{w.x.expand(), p, a, a};
}

Certificate verify_certificate(const PrimeSet& p, uint64_t prime_bound,
                               CheckMode mode, uint64_t cap) {
    if (prime_bound < 2)
        throw DomainError("verify_certificate: prime bound must be >= 2");

    Witness w = make_witness(p);
    const uint64_t t = w.exponent;
    const bool structural = mode != CheckMode::Exhaustive;
    const bool exhaustive = mode != CheckMode::Structural;

    std::vector<uint64_t> negatives;
    for (uint64_t q : primes_up_to(prime_bound)) {
        if (!p.contains(q)) negatives.push_back(q);
    }

    if (exhaustive) {
        if (t > kExhaustiveExponentCap)
            throw ExhaustiveInfeasible(
                "exhaustive mode requires witness exponent <= " +
                std::to_string(kExhaustiveExponentCap) + ", got " + std::to_string(t));
        // Project every search bound before running any of them.
        std::vector<uint64_t> searched = negatives;
        searched.insert(searched.end(), p.elements().begin(), p.elements().end());
        std::sort(searched.begin(), searched.end());
        for (uint64_t q : searched) {
            uint64_t bound = projected_search_bound(t, q);
            if (bound > cap)
                throw ExhaustiveInfeasible(
                    "exhaustive search for q = " + std::to_string(q) +
                    " needs " + std::to_string(bound) +
                    " iterations, over cap " + std::to_string(cap));
        }
    }

    Certificate cert;
    cert.prime_bound = prime_bound;
    cert.mode = mode;
    cert.search_cap = cap;
    cert.verified = true;

    for (uint64_t prime : p.elements()) {
        Representation rep = witness_representation(w, prime);
        if (!power_sum_equals_pow2(rep.a, rep.b, prime, t)) cert.verified = false;
        if (exhaustive) {
            std::vector<Representation> found = represent_all(w.x.expand(), prime, cap);
            // Case-II forces the canonical pair to be the only one.
            if (found.size() != 1 || found[0].a != rep.a || found[0].b != rep.b)
                throw InconsistentEvidence(
                    "search for p = " + std::to_string(prime) +
                    " did not return exactly the canonical representation");
        }
        cert.positive_cases.push_back(PositiveCase{prime, std::move(rep)});
    }

    for (uint64_t q : negatives) {
        NonRepEvidence ev;
        bool structural_rep = false, exhaustive_rep = false;
        if (structural) {
            Pow2Decision dec = pow2_representable(t, q);
            structural_rep = dec.representable();
            ev.t = t;
            ev.remainder = dec.remainder;
        }
        if (exhaustive) {
            std::vector<Representation> found = represent_all(w.x.expand(), q, cap);
            exhaustive_rep = !found.empty();
            ev.cap = cap;
            ev.iterations = projected_search_bound(t, q);
        }
        if (structural && exhaustive && structural_rep != exhaustive_rep)
            throw InconsistentEvidence("structural and exhaustive verdicts disagree for q = " +
                                       std::to_string(q));
        if (structural_rep || exhaustive_rep)
            throw InconsistentEvidence(
                "q = " + std::to_string(q) +
                " outside P came out representable; the radical product is corrupt");
        ev.kind = mode == CheckMode::Structural ? NonRepEvidence::Kind::Structural
                  : mode == CheckMode::Exhaustive ? NonRepEvidence::Kind::Exhaustive
                                                  : NonRepEvidence::Kind::Both;
        cert.negative_cases.push_back(NegativeCase{q, std::move(ev)});
    }

    cert.witness = std::move(w);
    return cert;
}

nlohmann::ordered_json certificate_to_json(const Certificate& cert) {
    nlohmann::ordered_json doc;
    doc["primes"] = cert.witness.primes.elements();
    doc["m"] = cert.witness.m.to_string();
    doc["x"] = {{"base", 2}, {"exponent", cert.witness.exponent}};
    if (cert.witness.exponent <= kDecimalExpansionCap)
        doc["x_decimal"] = cert.witness.x.expand().to_string();
    doc["prime_bound"] = cert.prime_bound;
    doc["mode"] = to_string(cert.mode);

    auto positives = nlohmann::ordered_json::array();
    for (const PositiveCase& pc : cert.positive_cases) {
        nlohmann::ordered_json item;
        item["p"] = pc.p;
        item["a"] = pc.rep.a.to_string();
        item["b"] = pc.rep.b.to_string();
        positives.push_back(std::move(item));
    }
    doc["positive_cases"] = std::move(positives);

    auto negatives = nlohmann::ordered_json::array();
    for (const NegativeCase& nc : cert.negative_cases) {
        nlohmann::ordered_json ev;
        switch (nc.evidence.kind) {
            case NonRepEvidence::Kind::Structural: ev["kind"] = "structural"; break;
            case NonRepEvidence::Kind::Exhaustive: ev["kind"] = "exhaustive"; break;
            case NonRepEvidence::Kind::Both: ev["kind"] = "both"; break;
        }
        if (nc.evidence.remainder) ev["remainder"] = *nc.evidence.remainder;
        if (nc.evidence.cap) ev["cap"] = *nc.evidence.cap;
        if (nc.evidence.iterations) ev["iterations"] = *nc.evidence.iterations;
        nlohmann::ordered_json item;
        item["q"] = nc.q;
        item["evidence"] = std::move(ev);
        negatives.push_back(std::move(item));
    }
    doc["negative_cases"] = std::move(negatives);

    doc["verified"] = cert.verified;
    return doc;
}

namespace {

struct RecheckFail {
    std::string reason;
};

[[noreturn]] void fail(std::string reason) { throw RecheckFail{std::move(reason)}; }

const nlohmann::ordered_json& field(const nlohmann::ordered_json& obj,
                                    const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(std::string("missing field \"") + key + "\"");
    return *it;
}

// JSON integers arrive as unsigned or signed depending on the producer;
// accept either as long as the value is non-negative.
std::optional<uint64_t> as_uint(const nlohmann::ordered_json& v) {
    if (v.is_number_unsigned()) return v.get<uint64_t>();
    if (v.is_number_integer() && v.get<int64_t>() >= 0)
        return static_cast<uint64_t>(v.get<int64_t>());
    return std::nullopt;
}

uint64_t uint_field(const nlohmann::ordered_json& obj, const char* key) {
    auto v = as_uint(field(obj, key));
    if (!v) fail(std::string("field \"") + key + "\" must be a non-negative integer");
    return *v;
}

std::string string_field(const nlohmann::ordered_json& obj, const char* key) {
    const auto& v = field(obj, key);
    if (!v.is_string()) fail(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

Nat nat_field(const nlohmann::ordered_json& obj, const char* key) {
    std::string s = string_field(obj, key);
    try {
        return Nat::from_string(s);
    } catch (const DomainError&) {
        fail(std::string("field \"") + key + "\" is not a decimal integer");
    }
}

void require_keys(const nlohmann::ordered_json& obj,
                  const std::vector<std::string>& keys, const char* what) {
    if (!obj.is_object()) fail(std::string(what) + " must be an object");
    if (obj.size() != keys.size())
        fail(std::string(what) + " has unexpected fields");
    for (const auto& k : keys) {
        if (!obj.contains(k)) fail(std::string(what) + " is missing \"" + k + "\"");
    }
}

void recheck_or_fail(const nlohmann::ordered_json& doc) {
    if (!doc.is_object()) fail("certificate must be a JSON object");

    // Witness block: primes, m = product, x = 2^(m+1).
    const auto& primes_json = field(doc, "primes");
    if (!primes_json.is_array()) fail("\"primes\" must be an array");
    std::vector<uint64_t> primes;
    for (const auto& v : primes_json) {
        auto pv = as_uint(v);
        if (!pv) fail("\"primes\" entries must be non-negative integers");
        uint64_t p = *pv;
        if (!primes.empty() && p <= primes.back())
            fail("\"primes\" must be strictly ascending");
        if (!is_prime(p)) fail("primes entry " + std::to_string(p) + " is not prime");
        primes.push_back(p);
    }

    Nat m = nat_field(doc, "m");
    Nat product(1);
    for (uint64_t p : primes) product *= Nat(p);
    if (m != product) fail("m does not equal the product of the primes");

    const auto& x = field(doc, "x");
    require_keys(x, {"base", "exponent"}, "\"x\"");
    if (uint_field(x, "base") != 2) fail("witness base must be 2");
    uint64_t t = uint_field(x, "exponent");
    if (Nat(t) != m + Nat(1)) fail("witness exponent does not equal m + 1");

    bool expect_decimal = t <= kDecimalExpansionCap;
    if (doc.contains("x_decimal") != expect_decimal)
        fail(expect_decimal ? "x_decimal is missing" : "x_decimal must be omitted for large exponents");
    if (expect_decimal && nat_field(doc, "x_decimal") != Nat::pow2(t))
        fail("x_decimal does not equal 2^exponent");

    uint64_t prime_bound = uint_field(doc, "prime_bound");
    if (prime_bound < 2) fail("prime_bound must be >= 2");
    CheckMode mode = CheckMode::Structural;
    try {
        mode = check_mode_from_string(string_field(doc, "mode"));
    } catch (const DomainError& e) {
        fail(e.what());
    }

    size_t expected_fields = expect_decimal ? 9 : 8;
    if (doc.size() != expected_fields) fail("certificate has unexpected fields");

    // Positive cases: exactly the primes of P, each power sum recomputed.
    const auto& positives = field(doc, "positive_cases");
    if (!positives.is_array()) fail("\"positive_cases\" must be an array");
    if (positives.size() != primes.size())
        fail("positive_cases must cover exactly the prime set");
    for (size_t i = 0; i < primes.size(); ++i) {
        const auto& pc = positives[i];
        require_keys(pc, {"p", "a", "b"}, "positive case");
        if (uint_field(pc, "p") != primes[i])
            fail("positive cases must list the prime set in order");
        Nat a = nat_field(pc, "a");
        Nat b = nat_field(pc, "b");
        if (a.is_zero()) fail("positive case has a = 0");
        if (b < a) fail("positive case violates a <= b");
        if (!power_sum_equals_pow2(a, b, primes[i], t))
            fail("positive case for p = " + std::to_string(primes[i]) +
                 " does not sum to 2^" + std::to_string(t));
    }

    // Negative cases: exactly the primes <= bound outside P.
    std::vector<uint64_t> expected_negatives;
    try {
        for (uint64_t q : primes_up_to(prime_bound)) {
            if (!std::binary_search(primes.begin(), primes.end(), q))
                expected_negatives.push_back(q);
        }
    } catch (const ResourceError& e) {
        fail(e.what());
    }
    const auto& negatives = field(doc, "negative_cases");
    if (!negatives.is_array()) fail("\"negative_cases\" must be an array");
    if (negatives.size() != expected_negatives.size())
        fail("negative_cases must cover exactly the primes <= bound outside P");
    for (size_t i = 0; i < expected_negatives.size(); ++i) {
        const auto& nc = negatives[i];
        require_keys(nc, {"q", "evidence"}, "negative case");
        uint64_t q = uint_field(nc, "q");
        if (q != expected_negatives[i])
            fail("negative cases must list the primes outside P in order");

        const auto& ev = field(nc, "evidence");
        std::string kind = string_field(ev, "kind");
        bool has_structural = false, has_exhaustive = false;
        if (kind == "structural") {
            has_structural = true;
        } else if (kind == "exhaustive") {
            has_exhaustive = true;
        } else if (kind == "both") {
            has_structural = has_exhaustive = true;
        } else {
            fail("unknown evidence kind \"" + kind + "\"");
        }
        bool kind_matches_mode =
            (mode == CheckMode::Structural && kind == "structural") ||
            (mode == CheckMode::Exhaustive && kind == "exhaustive") ||
            (mode == CheckMode::Both && kind == "both");
        if (!kind_matches_mode) fail("evidence kind does not match certificate mode");

        std::vector<std::string> keys{"kind"};
        if (has_structural) keys.push_back("remainder");
        if (has_exhaustive) {
            keys.push_back("cap");
            keys.push_back("iterations");
        }
        require_keys(ev, keys, "evidence");

        if (has_structural) {
            uint64_t remainder = uint_field(ev, "remainder");
            if (remainder != (t - 1) % q)
                fail("structural remainder for q = " + std::to_string(q) + " is wrong");
            if (remainder == 0)
                fail("structural remainder for q = " + std::to_string(q) +
                     " is zero, which would make 2^" + std::to_string(t) + " representable");
        }
        if (has_exhaustive) {
            if (t > kExhaustiveExponentCap)
                fail("exhaustive evidence is not accepted for witness exponents above " +
                     std::to_string(kExhaustiveExponentCap));
            uint64_t cap = uint_field(ev, "cap");
            uint64_t iterations = uint_field(ev, "iterations");
            uint64_t bound = projected_search_bound(t, q);
            if (iterations != bound)
                fail("exhaustive iteration count for q = " + std::to_string(q) +
                     " does not match the search bound " + std::to_string(bound));
            if (cap < iterations)
                fail("exhaustive cap for q = " + std::to_string(q) +
                     " is below the exhausted bound");
        }
    }

    const auto& verified = field(doc, "verified");
    if (!verified.is_boolean()) fail("\"verified\" must be a boolean");
    if (!verified.get<bool>()) fail("certificate does not claim verified = true");
}

}  // namespace

RecheckResult recheck_certificate(const nlohmann::ordered_json& doc) {
    try {
        recheck_or_fail(doc);
        return RecheckResult{true, ""};
    } catch (const RecheckFail& f) {
        return RecheckResult{false, f.reason};
    }
}

}  // namespace powsum
