#pragma once

// Exhaustive and randomized checks of the power and product error results,
// shared by the `verify` command and the test suites.

#include <cstdint>

#include "rnpow/bounds.hpp"

namespace rnpow {

// For x = 1 + 2k 2^-p with 1 <= k < floor(2^(p/2-1)), RN(x^2) < x^2.
VerificationReport check_small_squares_round_down(int p_lo, int p_hi);

// Every x in [1, 2) and every 2 <= n <= n_max(p): error <= (n-1) ulps, the
// maximum stays below n-1 and below ((1+u)^(n-1) - 1)/u.
VerificationReport check_power_bound_exhaustive(int p_lo, int p_hi);

// If some step of naive_power rounds down (or is exact), the error is at
// most (n-1) ulps; exhaustive over x and n <= n_max(p).
VerificationReport check_downward_step_implies_bound(int p_lo, int p_hi);

// (1-u)^(n-1) pi_n <= computed <= (1+u)^(n-1) pi_n on random positive
// factors with random precision and length.
VerificationReport check_product_bracket(std::int64_t instances,
                                         unsigned long seed);

// |RN(t) - t| / |t| <= u / w whenever the normalized fraction of |t| is at
// least w; random t of both signs, random p and w, both tie rules.
VerificationReport check_fraction_bound(std::int64_t instances, unsigned long seed);

// Monotonicity, idempotence and invariance under scaling by 2^k of
// round_nearest on random rationals.
VerificationReport check_rounding_properties(std::int64_t instances,
                                             unsigned long seed);

// Under ties-to-even, t = 1 + u rounds to 1 with relative error exactly
// u / (1 + u), and no midpoint of [1, 2) does worse.
VerificationReport check_refined_unit_attainment(int p_lo, int p_hi);

}  // namespace rnpow
