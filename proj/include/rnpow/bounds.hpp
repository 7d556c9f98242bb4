#pragma once

// Closed-form error bounds for iterated products and powers, the threshold
// constants that limit the (n-1)u bound for powers, and exact numeric checks
// of the supporting inequalities.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rnpow/exact.hpp"
#include "rnpow/softfloat.hpp"

namespace rnpow {

// All bounds for an n-term product at precision p, exact.
struct BoundSet {
  int p;
  std::int64_t n;
  ExactValue u;             // 2^-p
  ExactValue gamma;         // gamma_{n-1} = (n-1)u / (1 - (n-1)u)
  ExactValue psi;           // (1+u)^(n-1) - 1
  ExactValue simple;        // (n-1)u
  ExactValue refined_unit;  // u / (1+u)
};

// Throws std::invalid_argument for n < 2 and std::domain_error when
// (n-1)u >= 1 (gamma undefined).
BoundSet bound_set(Precision p, std::int64_t n);

// Closed interval [lo, hi] around an irrational constant.
struct Enclosure {
  ExactValue lo;
  ExactValue hi;

  ExactValue width() const { return hi - lo; }
  bool contains(const ExactValue& v) const { return lo <= v && v <= hi; }
};

inline constexpr int kDefaultEnclosureBits = 96;

// sqrt(2^(1/3) - 1), width 2^-bits.
Enclosure beta(int bits = kDefaultEnclosureBits);

// sqrt((2^(p+1) / (2^p + 1))^(2/3) - 1), width 2^-bits. Requires p >= 5.
Enclosure alpha(Precision p, int bits = kDefaultEnclosureBits);

// sqrt(2^(2/3) - 1), the limit of alpha as p grows.
Enclosure alpha_limit(int bits = kDefaultEnclosureBits);

// Largest n with n <= beta * 2^(p/2), i.e. (1 + n^2 2^-p)^3 <= 2. Requires
// p >= 5.
std::int64_t n_max(Precision p);

struct VerificationReport {
  explicit VerificationReport(std::string report_name = {})
      : name(std::move(report_name)) {}

  std::string name;
  bool passed = true;
  std::int64_t checked = 0;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  void fail(std::string what) {
    passed = false;
    failures.push_back(std::move(what));
  }
};

// (1 + u/(1+u))^k < 1 + k u for k = 1, 2, 3 over a grid of u in (0, 1/32],
// plus a search for a u that breaks the inequality at k = 4.
VerificationReport check_unit_power_inequality();

// Sample points u in [0, 2/(3 n^2)]: zero, the right endpoint, and
// c * 2^-j for c in [1, max_numerator] and `exponent_span` consecutive j
// starting at the first j whose 2^-j fits under the endpoint.
struct PowerInequalityGrid {
  std::vector<std::int64_t> n_values;
  int max_numerator = 7;
  int exponent_span = 24;

  static PowerInequalityGrid standard();
};

// (1+u)^(n-2) * (1 + u/(1 + n^2 u)) <= 1 + (n-1) u at every grid point.
VerificationReport check_power_inequality(const PowerInequalityGrid& grid);

// For u = 2^-24 and n in [n_lo, n_hi]:
// (1 + 7.06u)(1+u)^(n-10) - 1 <= (n - 2.8104) u. Also probes n_hi + 1.
VerificationReport check_refined_binary32_bound(std::int64_t n_lo = 10,
                                                std::int64_t n_hi = 2088);

// alpha_p > beta for every p in [p_lo, p_hi].
VerificationReport check_alpha_exceeds_beta(int p_lo = 5, int p_hi = 120);

// n_max(p)^2 2^-p <= 2^(1/3) - 1 < (n_max(p)+1)^2 2^-p, resolved through the
// enclosure of beta.
VerificationReport check_n_max_floor(int p_lo = 5, int p_hi = 120);

}  // namespace rnpow
