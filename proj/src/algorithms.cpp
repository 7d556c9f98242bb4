#include "rnpow/algorithms.hpp"

#include <algorithm>
#include <stdexcept>

namespace rnpow {

bool PowerTrace::any_rounding_not_up() const {
  return std::any_of(steps.begin(), steps.end(), [](const PowerStep& s) {
    return s.direction != RoundingDirection::Up;
  });
}

PowerTrace naive_power(const FpNumber& x, std::int64_t n, RoundingMode mode) {
  if (n < 1) throw std::invalid_argument("naive_power: n must be >= 1");
  PowerTrace trace{x, n, {}, x};
  trace.steps.reserve(static_cast<std::size_t>(n - 1));
  FpNumber y = x;
  for (std::int64_t k = 2; k <= n; ++k) {
    RoundedProduct r = fp_mul_directed(x, y, mode);
    y = r.value;
    trace.steps.push_back({k, std::move(r.value), r.direction});
  }
  trace.final = std::move(y);
  return trace;
}

ProductTrace iterated_product(std::span<const FpNumber> factors,
                              RoundingMode mode) {
  if (factors.empty()) {
    throw std::invalid_argument("iterated_product: empty factor list");
  }
  ProductTrace trace{{factors.begin(), factors.end()}, {}, {}, factors[0]};
  trace.partials.reserve(factors.size());
  trace.directions.reserve(factors.size());
  trace.partials.push_back(factors[0]);
  trace.directions.push_back(RoundingDirection::Exact);
  for (std::size_t k = 1; k < factors.size(); ++k) {
    RoundedProduct r = fp_mul_directed(trace.partials.back(), factors[k], mode);
    trace.partials.push_back(std::move(r.value));
    trace.directions.push_back(r.direction);
  }
  trace.final = trace.partials.back();
  return trace;
}

ExactValue exact_product(std::span<const FpNumber> factors) {
  ExactValue prod(1);
  for (const FpNumber& f : factors) prod *= to_rational(f);
  return prod;
}

}  // namespace rnpow
