#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rnpow/softfloat.hpp"

namespace rnpow {

struct PowerStep {
  std::int64_t k;          // step index, 2 <= k <= n
  FpNumber value;          // RN(x * previous)
  RoundingDirection direction;
};

// Every intermediate of the naive power loop y <- RN(x * y).
struct PowerTrace {
  FpNumber x;
  std::int64_t n;
  std::vector<PowerStep> steps;
  FpNumber final;

  bool any_rounding_not_up() const;
};

struct ProductTrace {
  std::vector<FpNumber> factors;
  // partials[0] = factors[0]; partials[k] = RN(partials[k-1] * factors[k]).
  std::vector<FpNumber> partials;
  // directions[k] belongs to partials[k]; directions[0] is always Exact.
  std::vector<RoundingDirection> directions;
  FpNumber final;
};

// x^n by n - 1 successive multiplications by x. n = 1 returns x unchanged.
PowerTrace naive_power(const FpNumber& x, std::int64_t n,
                       RoundingMode mode = RoundingMode::NearestTiesEven);

// RN(...RN(RN(a1 * a2) * a3) ... * an), strictly left to right.
ProductTrace iterated_product(std::span<const FpNumber> factors,
                              RoundingMode mode = RoundingMode::NearestTiesEven);

// Exact a1 * ... * an.
ExactValue exact_product(std::span<const FpNumber> factors);

}  // namespace rnpow
