#pragma once

// Construction of multiplier sequences a_1..a_n whose left-to-right product
// is rounded downward by almost half an ulp at every step, pushing the
// relative error of the iterated product toward (n-1)u.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rnpow/algorithms.hpp"
#include "rnpow/bounds.hpp"

namespace rnpow {

// A partial product left [1, 2) or its offset g stopped being positive.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(std::int64_t step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what),
        step_(step) {}

  std::int64_t step() const { return step_; }

 private:
  std::int64_t step_;
};

struct AdversarySequence {
  int p;
  std::int64_t n;
  RoundingMode mode;
  std::vector<FpNumber> factors;
  // Offsets k_i with a_i = 1 + k_i 2^(1-p).
  std::vector<Integer> offsets;
  ProductTrace trace;
  ErrorInUlps achieved_error;
};

// a_1 = a_2 = 1 + floor(2^(p/2-1)) 2^(1-p); then, writing the i-th partial
// as 1 + g_i 2^(1-p):
//   k_{i+1} = ceil(2^(p-2)/g_i - 1)     if g_i^2 <= 2^(p-2)
//   k_{i+1} = -floor(2^(p-2)/g_i + 1)   otherwise.
AdversarySequence build_sequence(Precision p, std::int64_t n,
                                 RoundingMode mode = RoundingMode::NearestTiesEven);

struct SequenceCheck {
  VerificationReport report;
  ErrorInUlps error;  // recomputed from the factors
  ExactValue gap;     // (n-1) - error, in ulps
};

// Re-evaluates the product, checks that every rounding went down and that
// the error stays below n-1 ulps.
SequenceCheck verify_sequence(const AdversarySequence& seq);

// 1 + k 2^(1-p) as a precision-p number; throws if it is not representable.
FpNumber offset_factor(const Integer& k, Precision p);

}  // namespace rnpow
