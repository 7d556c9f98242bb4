#pragma once

// Exact rational arithmetic used as the reference oracle for every error
// measurement. Values are GMP rationals kept in canonical form (lowest
// terms, positive denominator).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace rnpow {

using Integer = mpz_class;
using ExactValue = mpq_class;

// Number of significant bits of |v|; 0 for v == 0.
std::int64_t bit_length(const Integer& v);

// 2^k as an integer, k >= 0.
Integer pow2_int(std::int64_t k);

// 2^k as an exact rational, any sign of k.
ExactValue pow2(std::int64_t k);

// Builds num/den in canonical form. Throws std::invalid_argument if den == 0.
ExactValue make_rational(const Integer& num, const Integer& den);

ExactValue pow(const ExactValue& base, unsigned long exponent);

// Accepts "a", "a/b" and "a/2^k" (also "a*2^-k"); whitespace is not allowed.
ExactValue parse_rational(std::string_view text);

// "num/den", or just "num" when the denominator is 1.
std::string to_fraction_string(const ExactValue& v);

// Decimal expansion of v truncated toward zero after `digits` fractional
// digits. Every printed digit is a correct prefix of the exact value.
std::string to_decimal(const ExactValue& v, int digits);

// Relative error expressed in units of u = 2^-p. Always non-negative.
class ErrorInUlps {
 public:
  ErrorInUlps() = default;
  explicit ErrorInUlps(ExactValue value);

  const ExactValue& value() const { return value_; }

  friend bool operator==(const ErrorInUlps& a, const ErrorInUlps& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ErrorInUlps& a,
                                          const ErrorInUlps& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

 private:
  ExactValue value_{0};
};

// |computed - exact| / (|exact| * 2^-p). Throws std::domain_error if exact == 0.
ErrorInUlps relative_error_ulps(const ExactValue& computed,
                                const ExactValue& exact, int p);

std::string to_decimal(const ErrorInUlps& e, int digits);

}  // namespace rnpow
