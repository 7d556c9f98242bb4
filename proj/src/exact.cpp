#include "rnpow/exact.hpp"

#include <charconv>
#include <stdexcept>
#include <utility>

namespace rnpow {

std::int64_t bit_length(const Integer& v) {
  if (sgn(v) == 0) return 0;
  return static_cast<std::int64_t>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

Integer pow2_int(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("pow2_int: negative exponent");
  Integer r;
  mpz_setbit(r.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return r;
}

ExactValue pow2(std::int64_t k) {
  if (k >= 0) return ExactValue(pow2_int(k));
  ExactValue r(Integer(1), pow2_int(-k));
  return r;
}

ExactValue make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
  ExactValue r(num, den);
  r.canonicalize();
  return r;
}

ExactValue pow(const ExactValue& base, unsigned long exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  // Powers of coprime integers stay coprime; only the sign needs care.
  ExactValue r;
  mpz_swap(r.get_num_mpz_t(), num.get_mpz_t());
  mpz_swap(r.get_den_mpz_t(), den.get_mpz_t());
  return r;
}

namespace {

Integer parse_integer(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad integer");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("bad integer: " + std::string(s));
    }
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

std::int64_t parse_small(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad exponent: " + std::string(s));
  }
  return v;
}

// "2^k" -> k, otherwise nullopt-like false.
bool parse_power_of_two(std::string_view s, std::int64_t& k) {
  if (s.size() < 3 || s.substr(0, 2) != "2^") return false;
  k = parse_small(s.substr(2));
  return true;
}

}  // namespace

ExactValue parse_rational(std::string_view text) {
  if (auto star = text.find('*'); star != std::string_view::npos) {
    std::int64_t k = 0;
    if (!parse_power_of_two(text.substr(star + 1), k)) {
      throw std::invalid_argument("expected a*2^k: " + std::string(text));
    }
    return ExactValue(parse_integer(text.substr(0, star))) * pow2(k);
  }
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactValue(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  std::int64_t k = 0;
  if (parse_power_of_two(den_text, k)) return ExactValue(num) * pow2(-k);
  return make_rational(num, parse_integer(den_text));
}

std::string to_fraction_string(const ExactValue& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string to_decimal(const ExactValue& v, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
  Integer num = abs(v.get_num());
  const Integer& den = v.get_den();
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer scaled;
  mpz_tdiv_q(scaled.get_mpz_t(), Integer(num * ten_pow).get_mpz_t(),
             den.get_mpz_t());
  std::string s = scaled.get_str();
  if (s.size() <= static_cast<std::size_t>(digits)) {
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  }
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  if (sgn(v) < 0 && sgn(scaled) != 0) s.insert(0, "-");
  return s;
}

ErrorInUlps::ErrorInUlps(ExactValue value) : value_(std::move(value)) {
  value_.canonicalize();
  if (sgn(value_) < 0) throw std::invalid_argument("negative ulp error");
}

ErrorInUlps relative_error_ulps(const ExactValue& computed,
                                const ExactValue& exact, int p) {
  if (sgn(exact) == 0) throw std::domain_error("relative error of zero");
  ExactValue diff = abs(ExactValue(computed - exact));
  ExactValue r = diff / abs(exact) * pow2(p);
  return ErrorInUlps(std::move(r));
}

std::string to_decimal(const ErrorInUlps& e, int digits) {
  return to_decimal(e.value(), digits);
}

}  // namespace rnpow
