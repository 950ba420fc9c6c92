#pragma once

// Numerical and exact solvers for a^k + b^k = c: bracketed bisection over the
// reals in the monotone base regimes, exact enumeration of natural k, and the
// c^k variant.

#include <cstdint>
#include <vector>

#include "powsum/nat.hpp"

namespace powsum {

struct RealSolveResult {
    double k = 0;
    double residual = 0;  // a^k + b^k - c at the returned k
    double bracket_lo = 0;
    double bracket_hi = 0;
    int iterations = 0;
    // Set when c = 2 pinned the root at exactly k = 0 (a^0 + b^0 = 2).
    bool root_is_zero = false;
};

// Solve a^k + b^k = c for real k by expanding [-1, 1] until the target is
// straddled, then bisecting to bracket width <= tol_k.
//
// Supported regimes (f is then strictly monotone with a unique root):
//   both bases > 1, both bases < 1, or exactly one base equal to 1.
// Errors: DegenerateAllOnes (a = b = 1), NonMonotoneMixed (one base above 1
// and one below), TargetOutOfRange (c not attainable in the regime),
// NoConvergence (iteration budget exhausted), DomainError (nonpositive input
// or nonpositive tolerance).
RealSolveResult solve_real_k(double a, double b, double c, double tol_k = 1e-12,
                             int max_iter = 200);

// All natural k in [1, k_max] with a^k + b^k = c, ascending. Once a term can
// grow (a >= 2 or b >= 2) the scan stops as soon as the sum passes c, so a
// huge k_max costs nothing. Throws InfiniteSolutions for a = b = 1, c = 2.
std::vector<uint64_t> enumerate_natural_k(const Nat& a, const Nat& b, const Nat& c,
                                          uint64_t k_max);

// All natural k in [1, k_max] with a^k + b^k = c^k, ascending. When c exceeds
// both bases the scan stops once the sum drops below c^k (the ratio
// (a/c)^k + (b/c)^k is strictly decreasing); when it does not, no k exists.
std::vector<uint64_t> fermat_variant_k(const Nat& a, const Nat& b, const Nat& c,
                                       uint64_t k_max);

}  // namespace powsum
