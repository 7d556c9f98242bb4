#pragma once

// Precision-p binary floating-point numbers with an unbounded (64-bit,
// overflow-checked) exponent and correctly rounded conversion from exact
// rationals. Only round-to-nearest is modelled.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rnpow/exact.hpp"

namespace rnpow {

// Thrown when an exponent leaves [kMinExponent, kMaxExponent].
class ExponentOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Thrown when two operands carry different precisions.
class PrecisionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Precision {
 public:
  static constexpr int kMin = 2;
  static constexpr int kMax = 1 << 20;

  explicit Precision(int bits);

  int bits() const { return bits_; }

  friend bool operator==(Precision, Precision) = default;

 private:
  int bits_;
};

enum class RoundingMode { NearestTiesEven, NearestTiesAway };

std::string_view to_string(RoundingMode mode);
RoundingMode parse_rounding_mode(std::string_view text);

enum class RoundingDirection { Down, Exact, Up };

std::string_view to_string(RoundingDirection dir);

inline constexpr std::int64_t kMaxExponent = std::int64_t{1} << 62;
inline constexpr std::int64_t kMinExponent = -kMaxExponent;

// sign * X * 2^(e - p + 1) with 2^(p-1) <= X <= 2^p - 1, or zero.
class FpNumber {
 public:
  // Canonical zero at precision p.
  explicit FpNumber(Precision p);

  // Validates the significand range and exponent bounds.
  FpNumber(int sign, Integer significand, std::int64_t exponent, Precision p);

  static FpNumber one(Precision p);

  bool is_zero() const { return sgn(significand_) == 0; }
  int sign() const { return sign_; }
  const Integer& significand() const { return significand_; }
  std::int64_t exponent() const { return exponent_; }
  Precision precision() const { return precision_; }

  friend bool operator==(const FpNumber&, const FpNumber&) = default;

 private:
  int sign_ = 1;
  Integer significand_{0};
  std::int64_t exponent_ = 0;
  Precision precision_;
};

// Nearest precision-p number to t; ties resolved per mode.
FpNumber round_nearest(const ExactValue& t, Precision p,
                       RoundingMode mode = RoundingMode::NearestTiesEven);

struct RoundedProduct {
  FpNumber value;
  RoundingDirection direction;  // sign of (value - exact product)
};

// Correctly rounded product, together with the direction of the rounding.
RoundedProduct fp_mul_directed(const FpNumber& a, const FpNumber& b,
                               RoundingMode mode = RoundingMode::NearestTiesEven);

FpNumber fp_mul(const FpNumber& a, const FpNumber& b,
                RoundingMode mode = RoundingMode::NearestTiesEven);

ExactValue to_rational(const FpNumber& a);

// t / 2^floor(log2 |t|), so that 1 <= |result| < 2.
ExactValue normalized_fraction(const ExactValue& t);

// floor(log2 |t|) computed from bit lengths. Throws on t == 0.
std::int64_t binade_exponent(const ExactValue& t);

ErrorInUlps relative_error(const FpNumber& computed, const ExactValue& exact);

// The number 1 + k * 2^(1-p), i.e. the k-th precision-p number in [1, 2).
FpNumber unit_binade_number(const Integer& k, Precision p);

std::string to_string(const FpNumber& a);

}  // namespace rnpow
