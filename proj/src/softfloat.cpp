#include "rnpow/softfloat.hpp"

#include <utility>

namespace rnpow {

namespace {

std::int64_t checked_exponent(std::int64_t e) {
  if (e < kMinExponent || e > kMaxExponent) {
    throw ExponentOverflow("exponent " + std::to_string(e) +
                           " outside representable range");
  }
  return e;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ExponentOverflow("exponent arithmetic overflowed");
  }
  return checked_exponent(r);
}

// Decides whether the truncated magnitude must be incremented, given the
// comparison of the discarded part against half an ulp (-1, 0, +1).
bool round_up(int half_cmp, const Integer& truncated, RoundingMode mode) {
  if (half_cmp > 0) return true;
  if (half_cmp < 0) return false;
  if (mode == RoundingMode::NearestTiesAway) return true;
  return mpz_odd_p(truncated.get_mpz_t()) != 0;
}

RoundingDirection direction_of(int sign, bool inexact, bool magnitude_up) {
  if (!inexact) return RoundingDirection::Exact;
  bool value_up = (sign > 0) == magnitude_up;
  return value_up ? RoundingDirection::Up : RoundingDirection::Down;
}

}  // namespace

Precision::Precision(int bits) : bits_(bits) {
  if (bits < kMin || bits > kMax) {
    throw std::invalid_argument("precision must lie in [2, 2^20], got " +
                                std::to_string(bits));
  }
}

std::string_view to_string(RoundingMode mode) {
  return mode == RoundingMode::NearestTiesEven ? "even" : "away";
}

RoundingMode parse_rounding_mode(std::string_view text) {
  if (text == "even" || text == "ties-even") {
    return RoundingMode::NearestTiesEven;
  }
  if (text == "away" || text == "ties-away") {
    return RoundingMode::NearestTiesAway;
  }
  throw std::invalid_argument("unknown rounding mode: " + std::string(text));
}

std::string_view to_string(RoundingDirection dir) {
  switch (dir) {
    case RoundingDirection::Down:
      return "down";
    case RoundingDirection::Exact:
      return "exact";
    case RoundingDirection::Up:
      return "up";
  }
  return "?";
}

FpNumber::FpNumber(Precision p) : precision_(p) {}

FpNumber::FpNumber(int sign, Integer significand, std::int64_t exponent,
                   Precision p)
    : sign_(sign), significand_(std::move(significand)), exponent_(exponent),
      precision_(p) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  if (sgn(significand_) == 0) {
    sign_ = 1;
    exponent_ = 0;
    return;
  }
  if (bit_length(significand_) != p.bits() || sgn(significand_) < 0) {
    throw std::invalid_argument("integral significand " +
                                significand_.get_str() +
                                " is not normalized for p=" +
                                std::to_string(p.bits()));
  }
  checked_exponent(exponent_);
}

FpNumber FpNumber::one(Precision p) {
  return FpNumber(1, pow2_int(p.bits() - 1), 0, p);
}

std::int64_t binade_exponent(const ExactValue& t) {
  if (sgn(t) == 0) throw std::domain_error("binade of zero");
  Integer a = abs(t.get_num());
  const Integer& b = t.get_den();
  std::int64_t e = bit_length(a) - bit_length(b);
  // a/b lies in [2^(e-1), 2^(e+1)); one comparison picks the binade.
  bool below;
  if (e >= 0) {
    Integer shifted;
    mpz_mul_2exp(shifted.get_mpz_t(), b.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(e));
    below = a < shifted;
  } else {
    Integer shifted;
    mpz_mul_2exp(shifted.get_mpz_t(), a.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(-e));
    below = shifted < b;
  }
  return below ? e - 1 : e;
}

FpNumber round_nearest(const ExactValue& t, Precision p, RoundingMode mode) {
  if (sgn(t) == 0) return FpNumber(p);
  const int sign = sgn(t) < 0 ? -1 : 1;
  std::int64_t e = checked_exponent(binade_exponent(t));
  const std::int64_t shift = checked_add(p.bits() - 1, -e);

  Integer num = abs(t.get_num());
  Integer den = t.get_den();
  if (shift >= 0) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(shift));
  } else {
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(-shift));
  }
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Integer twice_r = r * 2;
  if (round_up(cmp(twice_r, den), q, mode)) {
    ++q;
    if (bit_length(q) > p.bits()) {
      q >>= 1;
      e = checked_add(e, 1);
    }
  }
  return FpNumber(sign, std::move(q), e, p);
}

RoundedProduct fp_mul_directed(const FpNumber& a, const FpNumber& b,
                               RoundingMode mode) {
  if (!(a.precision() == b.precision())) {
    throw PrecisionMismatch("fp_mul: operands have precisions " +
                            std::to_string(a.precision().bits()) + " and " +
                            std::to_string(b.precision().bits()));
  }
  const Precision p = a.precision();
  if (a.is_zero() || b.is_zero()) {
    return {FpNumber(p), RoundingDirection::Exact};
  }
  const int sign = a.sign() * b.sign();
  Integer product = a.significand() * b.significand();
  const std::int64_t len = bit_length(product);  // 2p - 1 or 2p
  const std::int64_t shift = len - p.bits();
  std::int64_t e = checked_add(checked_add(a.exponent(), b.exponent()),
                               len - 2 * static_cast<std::int64_t>(p.bits()) + 1);

  Integer q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), product.get_mpz_t(),
                  static_cast<mp_bitcnt_t>(shift));
  const auto lowest_one = static_cast<std::int64_t>(
      mpz_scan1(product.get_mpz_t(), 0));
  const bool inexact = lowest_one < shift;
  int half_cmp = -1;
  if (inexact) {
    const bool half_bit =
        mpz_tstbit(product.get_mpz_t(), static_cast<mp_bitcnt_t>(shift - 1));
    if (half_bit) half_cmp = lowest_one < shift - 1 ? 1 : 0;
  }
  const bool up = inexact && round_up(half_cmp, q, mode);
  if (up) {
    ++q;
    if (bit_length(q) > p.bits()) {
      q >>= 1;
      e = checked_add(e, 1);
    }
  }
  return {FpNumber(sign, std::move(q), e, p), direction_of(sign, inexact, up)};
}

FpNumber fp_mul(const FpNumber& a, const FpNumber& b, RoundingMode mode) {
  return fp_mul_directed(a, b, mode).value;
}

ExactValue to_rational(const FpNumber& a) {
  if (a.is_zero()) return ExactValue(0);
  ExactValue r(a.significand());
  r *= pow2(a.exponent() - a.precision().bits() + 1);
  if (a.sign() < 0) r = -r;
  return r;
}

ExactValue normalized_fraction(const ExactValue& t) {
  if (sgn(t) == 0) throw std::domain_error("normalized fraction of zero");
  return ExactValue(t * pow2(-binade_exponent(t)));
}

ErrorInUlps relative_error(const FpNumber& computed, const ExactValue& exact) {
  return relative_error_ulps(to_rational(computed), exact,
                             computed.precision().bits());
}

FpNumber unit_binade_number(const Integer& k, Precision p) {
  Integer top = pow2_int(p.bits() - 1);
  if (sgn(k) < 0 || k >= top) {
    throw std::invalid_argument("k must satisfy 0 <= k < 2^(p-1)");
  }
  return FpNumber(1, top + k, 0, p);
}

std::string to_string(const FpNumber& a) {
  if (a.is_zero()) return "0";
  return to_fraction_string(to_rational(a));
}

}  // namespace rnpow
