// Command-line front end: witness construction, representation search,
// certificate verification and re-checking, and the a^k + b^k = c solvers.
// Every command prints either plain text or a JSON envelope
// {command, inputs, result, status}; the status maps onto the exit code
// (ok = 0, verification_failed = 1, usage_error = 2, infeasible = 3).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "powsum/powersum.hpp"
#include "powsum/primes.hpp"
#include "powsum/solver.hpp"
#include "powsum/theorem.hpp"

using nlohmann::ordered_json;

namespace {

enum class Status { Ok, VerificationFailed, UsageError, Infeasible };

int exit_code(Status s) {
    switch (s) {
        case Status::Ok: return 0;
        case Status::VerificationFailed: return 1;
        case Status::UsageError: return 2;
        case Status::Infeasible: return 3;
    }
    return 2;
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Ok: return "ok";
        case Status::VerificationFailed: return "verification_failed";
        case Status::UsageError: return "usage_error";
        case Status::Infeasible: return "infeasible";
    }
    return "usage_error";
}

struct CommandIO {
    std::string command;
    ordered_json inputs;
    bool json_mode = false;
};

int emit(const CommandIO& io, Status status, const ordered_json& result,
         const std::vector<std::string>& text_lines) {
    if (io.json_mode) {
        ordered_json doc;
        doc["command"] = io.command;
        doc["inputs"] = io.inputs;
        doc["result"] = result;
        doc["status"] = status_name(status);
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& line : text_lines) std::cout << line << "\n";
    }
    return exit_code(status);
}

int emit_error(const CommandIO& io, Status status, const std::string& message) {
    std::cerr << "error: " << message << "\n";
    if (io.json_mode) {
        ordered_json doc;
        doc["command"] = io.command;
        doc["inputs"] = io.inputs;
        doc["result"] = ordered_json{{"error", message}};
        doc["status"] = status_name(status);
        std::cout << doc.dump(2) << "\n";
    }
    return exit_code(status);
}

template <class Fn>
int guarded(const CommandIO& io, Fn&& fn) {
    try {
        return fn();
    } catch (const powsum::ResourceError& e) {
        return emit_error(io, Status::Infeasible, e.what());
    } catch (const powsum::NoConvergence& e) {
        return emit_error(io, Status::Infeasible, e.what());
    } catch (const powsum::DomainError& e) {
        return emit_error(io, Status::UsageError, e.what());
    }
}

// Shortest round-trip formatting, shared by text and JSON output.
std::string fmt_double(double v) { return ordered_json(v).dump(); }

// Decimal up to 80 digits; longer powers of two collapse to 2^t shorthand.
std::string fmt_nat(const powsum::Nat& n) {
    std::string dec = n.to_string();
    if (dec.size() <= 80) return dec;
    if (auto t = powsum::as_pow2(n)) return "2^" + std::to_string(*t);
    return dec;
}

std::string join_primes(const std::vector<uint64_t>& ps) {
    std::string out = "{";
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(ps[i]);
    }
    return out + "}";
}

uint64_t default_cap_from_env() {
    const char* env = std::getenv("POWSUM_CAP");
    if (!env || !*env) return powsum::kDefaultSearchCap;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
        throw powsum::DomainError(std::string("POWSUM_CAP is not a number: \"") + env + "\"");
    return v;
}

int cmd_witness(const std::string& primes_csv, bool json_mode) {
    CommandIO io{"witness", ordered_json{{"primes", primes_csv}}, json_mode};
    return guarded(io, [&] {
        powsum::PrimeSet set = powsum::PrimeSet::parse(primes_csv);
        io.inputs["primes"] = set.elements();
        powsum::Witness w = powsum::make_witness(set);

        ordered_json result;
        result["m"] = w.m.to_string();
        result["t"] = w.exponent;
        result["x"] = {{"base", 2}, {"exponent", w.exponent}};
        std::string x_line = "x = 2^" + std::to_string(w.exponent);
        if (w.exponent <= powsum::kDecimalExpansionCap) {
            std::string dec = w.x.expand().to_string();
            result["x_decimal"] = dec;
            if (dec.size() <= 80) x_line += " = " + dec;
        }
        auto reps = ordered_json::array();
        std::vector<std::string> lines;
        lines.push_back("P = " + join_primes(set.elements()));
        lines.push_back("m = " + w.m.to_string());
        lines.push_back("t = " + std::to_string(w.exponent));
        lines.push_back(x_line);
        for (uint64_t p : set.elements()) {
            powsum::Representation rep = powsum::witness_representation(w, p);
            reps.push_back(ordered_json{
                {"p", p}, {"a", rep.a.to_string()}, {"b", rep.b.to_string()}});
            lines.push_back("p = " + std::to_string(p) + ": a = b = " + fmt_nat(rep.a));
        }
        result["representations"] = std::move(reps);
        return emit(io, Status::Ok, result, lines);
    });
}

int cmd_represent(const std::string& n_str, uint64_t p, uint64_t cap, bool json_mode) {
    CommandIO io{"represent",
                 ordered_json{{"n", n_str}, {"p", p}, {"cap", cap}}, json_mode};
    return guarded(io, [&] {
        powsum::Nat n = powsum::Nat::from_string(n_str);
        io.inputs["n"] = n.to_string();
        auto reps = powsum::represent_all(n, p, cap);

        ordered_json result;
        auto arr = ordered_json::array();
        std::vector<std::string> lines;
        lines.push_back("n = " + fmt_nat(n) + ", p = " + std::to_string(p));
        for (const auto& r : reps) {
            arr.push_back(ordered_json{{"a", r.a.to_string()}, {"b", r.b.to_string()}});
            lines.push_back(fmt_nat(r.a) + "^" + std::to_string(p) + " + " +
                            fmt_nat(r.b) + "^" + std::to_string(p));
        }
        result["representations"] = std::move(arr);
        result["count"] = reps.size();
        lines.push_back(std::to_string(reps.size()) + " representation(s)");
        return emit(io, Status::Ok, result, lines);
    });
}

int cmd_verify(const std::string& primes_csv, uint64_t prime_bound,
               const std::string& mode_str, uint64_t cap, bool json_mode) {
    CommandIO io{"verify",
                 ordered_json{{"primes", primes_csv},
                              {"prime_bound", prime_bound},
                              {"mode", mode_str},
                              {"cap", cap}},
                 json_mode};
    return guarded(io, [&] {
        powsum::PrimeSet set = powsum::PrimeSet::parse(primes_csv);
        io.inputs["primes"] = set.elements();
        powsum::CheckMode mode = powsum::check_mode_from_string(mode_str);
        powsum::Certificate cert =
            powsum::verify_certificate(set, prime_bound, mode, cap);
        ordered_json result = powsum::certificate_to_json(cert);

        std::vector<std::string> lines;
        lines.push_back("P = " + join_primes(set.elements()) +
                        ", prime bound = " + std::to_string(prime_bound) +
                        ", mode = " + mode_str);
        lines.push_back("m = " + cert.witness.m.to_string() + ", x = 2^" +
                        std::to_string(cert.witness.exponent));
        for (const auto& pc : cert.positive_cases) {
            lines.push_back("p = " + std::to_string(pc.p) + ": " + fmt_nat(pc.rep.a) +
                            "^" + std::to_string(pc.p) + " + " + fmt_nat(pc.rep.b) +
                            "^" + std::to_string(pc.p) + " = x");
        }
        for (const auto& nc : cert.negative_cases) {
            std::string line = "q = " + std::to_string(nc.q) + ":";
            if (nc.evidence.remainder)
                line += " (t-1) mod q = " + std::to_string(*nc.evidence.remainder);
            if (nc.evidence.iterations)
                line += std::string(nc.evidence.remainder ? "," : "") + " exhausted " +
                        std::to_string(*nc.evidence.iterations) + " candidate(s)";
            lines.push_back(line);
        }
        lines.push_back(std::string("verified: ") + (cert.verified ? "true" : "false"));
        return emit(io, cert.verified ? Status::Ok : Status::VerificationFailed,
                    result, lines);
    });
}

int cmd_check(const std::string& path, bool json_mode) {
    CommandIO io{"check", ordered_json{{"file", path}}, json_mode};
    return guarded(io, [&] {
        std::string text;
        if (path == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            text = buf.str();
        } else {
            std::ifstream in(path);
            if (!in)
                return emit_error(io, Status::UsageError, "cannot open " + path);
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }
        ordered_json doc = ordered_json::parse(text, nullptr, false);
        if (doc.is_discarded())
            return emit_error(io, Status::UsageError, "input is not valid JSON");

        // Accept both a bare certificate and the envelope that
        // `verify --format json` prints, so the two commands pipe together.
        if (doc.is_object() && doc.size() == 4 && doc.contains("command") &&
            doc.contains("inputs") && doc.contains("result") &&
            doc.contains("status"))
            doc = doc["result"];

        powsum::RecheckResult res = powsum::recheck_certificate(doc);
        ordered_json result;
        result["verified"] = res.ok;
        std::vector<std::string> lines;
        if (res.ok) {
            lines.push_back("certificate ok");
        } else {
            result["reason"] = res.reason;
            lines.push_back("certificate INVALID: " + res.reason);
        }
        return emit(io, res.ok ? Status::Ok : Status::VerificationFailed, result,
                    lines);
    });
}

int cmd_solve_k(double a, double b, double c, double tol, int max_iter,
                bool json_mode) {
    CommandIO io{"solve-k",
                 ordered_json{{"a", a}, {"b", b}, {"c", c}, {"tol", tol},
                              {"max_iter", max_iter}},
                 json_mode};
    return guarded(io, [&] {
        powsum::RealSolveResult res = powsum::solve_real_k(a, b, c, tol, max_iter);
        ordered_json result;
        result["k"] = res.k;
        result["residual"] = res.residual;
        result["bracket"] = {res.bracket_lo, res.bracket_hi};
        result["iterations"] = res.iterations;
        result["root_is_zero"] = res.root_is_zero;
        std::vector<std::string> lines{
            "k = " + fmt_double(res.k),
            "residual = " + fmt_double(res.residual),
            "bracket = [" + fmt_double(res.bracket_lo) + ", " +
                fmt_double(res.bracket_hi) + "]",
            "iterations = " + std::to_string(res.iterations),
        };
        if (res.root_is_zero) lines.push_back("root pinned at k = 0 (c = 2)");
        return emit(io, Status::Ok, result, lines);
    });
}

int cmd_enumerate(const char* name, const std::string& a_str,
                  const std::string& b_str, const std::string& c_str,
                  uint64_t k_max, bool json_mode) {
    CommandIO io{name,
                 ordered_json{{"a", a_str}, {"b", b_str}, {"c", c_str},
                              {"k_max", k_max}},
                 json_mode};
    return guarded(io, [&] {
        powsum::Nat a = powsum::Nat::from_string(a_str);
        powsum::Nat b = powsum::Nat::from_string(b_str);
        powsum::Nat c = powsum::Nat::from_string(c_str);
        std::vector<uint64_t> ks = std::string(name) == "nat-k"
                                       ? powsum::enumerate_natural_k(a, b, c, k_max)
                                       : powsum::fermat_variant_k(a, b, c, k_max);
        ordered_json result;
        result["solutions"] = ks;
        std::vector<std::string> lines;
        for (uint64_t k : ks) lines.push_back("k = " + std::to_string(k));
        if (ks.empty())
            lines.push_back("no solutions for k in [1, " + std::to_string(k_max) + "]");
        return emit(io, Status::Ok, result, lines);
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exponent-selective power sums: witnesses, certificates and solvers"};
    app.require_subcommand(1);
    // Let --format appear after the subcommand too.
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    uint64_t cap = 0;
    try {
        cap = default_cap_from_env();
    } catch (const powsum::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::string primes_csv, n_str, mode_str = "structural", cert_path = "-";
    std::string a_str, b_str, c_str;
    uint64_t p = 0, prime_bound = 0;
    double a = 0, b = 0, c = 0, tol = 1e-12;
    int max_iter = 200;

    auto* witness = app.add_subcommand("witness", "build the witness x = 2^(m+1) for a prime set");
    witness->add_option("-p,--primes", primes_csv, "comma-separated primes, may be empty")
        ->required();

    auto* represent = app.add_subcommand("represent", "list all a^p + b^p = n");
    represent->add_option("-n", n_str, "target integer (decimal)")->required();
    represent->add_option("-e,--exponent", p, "exponent p >= 1")->required();
    represent->add_option("--cap", cap, "search iteration cap");

    auto* verify = app.add_subcommand("verify", "certify representability exactly on P up to a prime bound");
    verify->add_option("-p,--primes", primes_csv, "comma-separated primes, may be empty")
        ->required();
    verify->add_option("--prime-bound", prime_bound, "check all primes q <= bound")
        ->required();
    verify->add_option("--mode", mode_str, "structural, exhaustive or both")
        ->capture_default_str();
    verify->add_option("--cap", cap, "search iteration cap");

    auto* check = app.add_subcommand("check", "re-verify a serialized certificate");
    check->add_option("file", cert_path, "certificate JSON file, or - for stdin")
        ->capture_default_str();

    auto* solve = app.add_subcommand("solve-k", "solve a^k + b^k = c for real k");
    solve->add_option("-a", a, "base a > 0")->required();
    solve->add_option("-b", b, "base b > 0")->required();
    solve->add_option("-c", c, "target c > 0")->required();
    solve->add_option("--tol", tol, "bracket width tolerance")->capture_default_str();
    solve->add_option("--max-iter", max_iter, "iteration budget")->capture_default_str();

    auto* natk = app.add_subcommand("nat-k", "enumerate natural k with a^k + b^k = c");
    natk->add_option("-a", a_str)->required();
    natk->add_option("-b", b_str)->required();
    natk->add_option("-c", c_str)->required();
    uint64_t nat_k_max = 64;
    natk->add_option("--k-max", nat_k_max, "largest k to scan")->capture_default_str();

    auto* fermatk = app.add_subcommand("fermat-k", "enumerate natural k with a^k + b^k = c^k");
    fermatk->add_option("-a", a_str)->required();
    fermatk->add_option("-b", b_str)->required();
    fermatk->add_option("-c", c_str)->required();
    uint64_t fermat_k_max = 200;
    fermatk->add_option("--k-max", fermat_k_max, "largest k to scan")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cout, std::cerr);
        return 2;
    }

    bool json_mode = format == "json";
    if (witness->parsed()) return cmd_witness(primes_csv, json_mode);
    if (represent->parsed()) return cmd_represent(n_str, p, cap, json_mode);
    if (verify->parsed())
        return cmd_verify(primes_csv, prime_bound, mode_str, cap, json_mode);
    if (check->parsed()) return cmd_check(cert_path, json_mode);
    if (solve->parsed()) return cmd_solve_k(a, b, c, tol, max_iter, json_mode);
    if (natk->parsed())
        return cmd_enumerate("nat-k", a_str, b_str, c_str, nat_k_max, json_mode);
    if (fermatk->parsed())
        return cmd_enumerate("fermat-k", a_str, b_str, c_str, fermat_k_max, json_mode);
    return 2;
}
