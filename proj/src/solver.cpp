#include "powsum/solver.hpp"

#include <cmath>
#include <string>

namespace powsum {

namespace {

double power_sum(double a, double b, double k) {
    return std::pow(a, k) + std::pow(b, k);
}

}  // namespace

RealSolveResult solve_real_k(double a, double b, double c, double tol_k,
                             int max_iter) {
    if (!(a > 0) || !(b > 0) || !(c > 0))
        throw DomainError("solve_real_k: a, b, c must all be positive");
    if (!(tol_k > 0)) throw DomainError("solve_real_k: tolerance must be positive");
    if (a == 1 && b == 1)
        throw DegenerateAllOnes(
            "a = b = 1: the sum is 2 for every k, so either no k or all k solve it");
    if ((a > 1 && b < 1) || (a < 1 && b > 1))
        throw NonMonotoneMixed(
            "one base above 1 and one below: the sum is not monotone, root may not be unique");
    if ((a == 1 || b == 1) && c <= 1)
        throw TargetOutOfRange("with one base equal to 1 the sum always exceeds 1");

    if (c == 2) {
        // a^0 + b^0 = 2 exactly, and the root is unique in these regimes.
        return RealSolveResult{0.0, power_sum(a, b, 0.0) - c, 0.0, 0.0, 0, true};
    }

    int iterations = 0;
    double lo = -1, hi = 1;
    double flo = power_sum(a, b, lo) - c;
    double fhi = power_sum(a, b, hi) - c;
    if (flo == 0) return RealSolveResult{lo, 0.0, lo, lo, 0, false};
    if (fhi == 0) return RealSolveResult{hi, 0.0, hi, hi, 0, false};
    while ((flo < 0) == (fhi < 0)) {
        if (++iterations > max_iter)
            throw NoConvergence("solve_real_k: could not bracket the root within " +
                                std::to_string(max_iter) + " doublings");
        lo *= 2;
        hi *= 2;
        flo = power_sum(a, b, lo) - c;
        fhi = power_sum(a, b, hi) - c;
        if (flo == 0) return RealSolveResult{lo, 0.0, lo, lo, iterations, false};
        if (fhi == 0) return RealSolveResult{hi, 0.0, hi, hi, iterations, false};
    }

    while (hi - lo > tol_k) {
        if (++iterations > max_iter)
            throw NoConvergence("solve_real_k: bracket still " +
                                std::to_string(hi - lo) + " wide after " +
                                std::to_string(max_iter) + " iterations");
        double mid = lo + (hi - lo) / 2;
        if (mid == lo || mid == hi) break;  // bracket at machine resolution
        double fmid = power_sum(a, b, mid) - c;
        if (fmid == 0) {
            lo = hi = mid;
            break;
        }
        if ((fmid < 0) == (flo < 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    if (hi - lo > tol_k)
        throw NoConvergence("solve_real_k: bracket cannot reach the requested tolerance");

    double k = lo + (hi - lo) / 2;
    return RealSolveResult{k, power_sum(a, b, k) - c, lo, hi, iterations, false};
}

std::vector<uint64_t> enumerate_natural_k(const Nat& a, const Nat& b, const Nat& c,
                                          uint64_t k_max) {
    if (a.is_zero() || b.is_zero())
        throw DomainError("enumerate_natural_k: a and b must be >= 1");
    if (c < Nat(2)) throw DomainError("enumerate_natural_k: c must be >= 2");
    const Nat one(1);
    if (a == one && b == one) {
        if (c == Nat(2))
            throw InfiniteSolutions("a = b = 1 and c = 2: every k solves a^k + b^k = c");
        return {};
    }

    std::vector<uint64_t> out;
    Nat ak = a, bk = b;
    for (uint64_t k = 1; k <= k_max; ++k) {
        Nat sum = ak + bk;
        if (sum == c) out.push_back(k);
        if (sum > c) break;  // sum is nondecreasing and grows past c for good
        ak *= a;
        bk *= b;
    }
    return out;
}

std::vector<uint64_t> fermat_variant_k(const Nat& a, const Nat& b, const Nat& c,
                                       uint64_t k_max) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw DomainError("fermat_variant_k: a, b, c must be >= 1");
    if (k_max < 1) throw DomainError("fermat_variant_k: k_max must be >= 1");
    // If c <= max(a, b) then a^k + b^k > max(a,b)^k >= c^k for every k.
    const Nat& mx = a < b ? b : a;
    if (!(mx < c)) return {};

    std::vector<uint64_t> out;
    Nat ak = a, bk = b, ck = c;
    for (uint64_t k = 1; k <= k_max; ++k) {
        Nat sum = ak + bk;
        if (sum == ck) out.push_back(k);
        if (sum < ck) break;  // (a/c)^k + (b/c)^k strictly decreasing below 1
        ak *= a;
        bk *= b;
        ck *= c;
    }
    return out;
}

}  // namespace powsum
