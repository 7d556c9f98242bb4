#include "rnpow/checks.hpp"

#include <gmpxx.h>

#include <utility>

#include "rnpow/algorithms.hpp"
#include "rnpow/search.hpp"

namespace rnpow {

VerificationReport check_small_squares_round_down(int p_lo, int p_hi) {
  VerificationReport report("small_squares_round_down");
  for (int bits = p_lo; bits <= p_hi; ++bits) {
    const Precision p(bits);
    Integer limit;
    mpz_sqrt(limit.get_mpz_t(), pow2_int(bits - 2).get_mpz_t());
    for (Integer k = 1; k < limit; ++k) {
      const FpNumber x = unit_binade_number(k, p);
      ++report.checked;
      if (fp_mul_directed(x, x).direction != RoundingDirection::Down) {
        report.fail("p=" + std::to_string(bits) + " k=" + k.get_str());
      }
    }
  }
  return report;
}

VerificationReport check_power_bound_exhaustive(int p_lo, int p_hi) {
  VerificationReport report("power_bound_exhaustive");
  for (int bits = p_lo; bits <= p_hi; ++bits) {
    const Precision p(bits);
    for (std::int64_t n = 2; n <= n_max(p); ++n) {
      SearchOptions options;
      options.jobs = 1;
      const SearchReport r = exhaustive_max_error(p, n, RoundingMode::NearestTiesEven, options);
      const BoundSet b = bound_set(p, n);
      report.checked += static_cast<std::int64_t>(r.scanned);
      const std::string where =
          "p=" + std::to_string(bits) + " n=" + std::to_string(n);
      if (r.violations != 0) report.fail(where + " violations");
      if (!(r.max_error.value() < n - 1)) report.fail(where + " max >= n-1");
      if (r.max_error.value() > b.psi / b.u) report.fail(where + " max > psi");
    }
  }
  return report;
}

VerificationReport check_downward_step_implies_bound(int p_lo, int p_hi) {
  VerificationReport report("downward_step_implies_bound");
  std::int64_t triggered = 0;
  for (int bits = p_lo; bits <= p_hi; ++bits) {
    const Precision p(bits);
    const std::int64_t top_n = n_max(p);
    if (top_n < 2) continue;
    const std::uint64_t count = std::uint64_t{1} << (bits - 1);
    for (std::uint64_t k = 0; k < count; ++k) {
      const FpNumber x = unit_binade_number(Integer(std::to_string(k)), p);
      const ExactValue xr = to_rational(x);
      const PowerTrace trace = naive_power(x, top_n);
      ExactValue power = xr;
      bool seen_non_up = false;
      for (const PowerStep& step : trace.steps) {
        power *= xr;
        seen_non_up = seen_non_up || step.direction != RoundingDirection::Up;
        if (!seen_non_up) continue;
        ++triggered;
        ++report.checked;
        const ErrorInUlps e = relative_error(step.value, power);
        if (e.value() > step.k - 1) {
          report.fail("p=" + std::to_string(bits) + " k=" + std::to_string(k) +
                      " n=" + std::to_string(step.k));
        }
      }
    }
  }
  report.notes.push_back(std::to_string(triggered) +
                         " (x, n) pairs with a non-upward step");
  return report;
}

VerificationReport check_product_bracket(std::int64_t instances,
                                         unsigned long seed) {
  VerificationReport report("product_bracket");
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(seed);
  for (std::int64_t i = 0; i < instances; ++i) {
    const int bits = 5 + static_cast<int>(Integer(rng.get_z_range(109)).get_si());
    const Precision p(bits);
    const std::int64_t n = 2 + Integer(rng.get_z_range(39)).get_si();
    std::vector<FpNumber> factors;
    factors.reserve(static_cast<std::size_t>(n));
    const Integer top = pow2_int(bits - 1);
    for (std::int64_t j = 0; j < n; ++j) {
      Integer sig = top + rng.get_z_range(top);
      std::int64_t e = Integer(rng.get_z_range(9)).get_si() - 4;
      factors.emplace_back(1, std::move(sig), e, p);
    }
    const ProductTrace trace = iterated_product(factors);
    const ExactValue exact = exact_product(factors);
    const ExactValue computed = to_rational(trace.final);
    const ExactValue u = pow2(-bits);
    const auto steps = static_cast<unsigned long>(n - 1);
    ++report.checked;
    if (computed < pow(ExactValue(1 - u), steps) * exact ||
        computed > pow(ExactValue(1 + u), steps) * exact) {
      report.fail("instance " + std::to_string(i) + " p=" + std::to_string(bits) +
                  " n=" + std::to_string(n));
    }
  }
  return report;
}

namespace {

std::int64_t uniform(gmp_randclass& rng, std::int64_t lo, std::int64_t hi) {
  return lo + Integer(rng.get_z_range(hi - lo + 1)).get_si();
}

// Random nonzero rational with up to `bits` bits in numerator and
// denominator, scaled by 2^[-40, 40].
ExactValue random_rational(gmp_randclass& rng, int bits) {
  Integer num = Integer(rng.get_z_bits(bits)) + 1;
  Integer den = Integer(rng.get_z_bits(bits)) + 1;
  ExactValue t = make_rational(num, den) * pow2(uniform(rng, -40, 40));
  return uniform(rng, 0, 1) ? t : ExactValue(-t);
}

RoundingMode random_mode(gmp_randclass& rng) {
  return uniform(rng, 0, 1) ? RoundingMode::NearestTiesEven
                            : RoundingMode::NearestTiesAway;
}

}  // namespace

VerificationReport check_fraction_bound(std::int64_t instances, unsigned long seed) {
  VerificationReport report("fraction_bound");
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(seed);
  for (std::int64_t i = 0; i < instances; ++i) {
    const int bits = static_cast<int>(uniform(rng, 2, 64));
    const Precision p(bits);
    const RoundingMode mode = random_mode(rng);
    ExactValue t = random_rational(rng, static_cast<int>(uniform(rng, 1, 96)));
    // Every fifth instance is an exact midpoint.
    if (i % 5 == 0) {
      Integer sig = pow2_int(bits - 1) + Integer(rng.get_z_range(pow2_int(bits - 1)));
      t = ExactValue(2 * sig + 1) * pow2(uniform(rng, -40, 40) - bits);
    }
    const ExactValue frac = normalized_fraction(abs(t));
    // w = the fraction itself, and a random dyadic w in [1, frac].
    const ExactValue w_random =
        1 + ExactValue(Integer(rng.get_z_range(Integer(1 << 16)))) * pow2(-16) *
                (frac - 1);
    const FpNumber r = round_nearest(t, p, mode);
    const ExactValue err = abs(to_rational(r) - t) / abs(t);
    const ExactValue u = pow2(-bits);
    for (const ExactValue& w : {frac, w_random}) {
      ++report.checked;
      if (err > u / w) {
        report.fail("p=" + std::to_string(bits) + " t=" + to_fraction_string(t));
      }
    }
  }
  return report;
}

VerificationReport check_rounding_properties(std::int64_t instances,
                                             unsigned long seed) {
  VerificationReport report("rounding_properties");
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(seed);
  for (std::int64_t i = 0; i < instances; ++i) {
    const int bits = static_cast<int>(uniform(rng, 2, 64));
    const Precision p(bits);
    const RoundingMode mode = random_mode(rng);
    const int size = static_cast<int>(uniform(rng, 1, 96));
    ExactValue a = random_rational(rng, size);
    // b close to a.
    ExactValue b = a + random_rational(rng, size) * pow2(-bits - uniform(rng, 0, 8));
    if (b < a) std::swap(a, b);
    const std::string where = "p=" + std::to_string(bits) + " a=" +
                              to_fraction_string(a) + " b=" + to_fraction_string(b);
    const FpNumber ra = round_nearest(a, p, mode);
    const FpNumber rb = round_nearest(b, p, mode);
    report.checked += 3;
    if (to_rational(ra) > to_rational(rb)) report.fail("monotonicity " + where);
    if (!(round_nearest(to_rational(ra), p, mode) == ra)) {
      report.fail("idempotence " + where);
    }
    const std::int64_t shift = uniform(rng, -200, 200);
    const FpNumber scaled = round_nearest(a * pow2(shift), p, mode);
    if (to_rational(scaled) != to_rational(ra) * pow2(shift)) {
      report.fail("scaling by 2^" + std::to_string(shift) + " " + where);
    }
  }
  return report;
}

VerificationReport check_refined_unit_attainment(int p_lo, int p_hi) {
  VerificationReport report("refined_unit_attainment");
  for (int bits = p_lo; bits <= p_hi; ++bits) {
    const Precision p(bits);
    const ExactValue u = pow2(-bits);
    const ExactValue bound = u / (1 + u);
    const ExactValue t = 1 + u;
    const FpNumber r = round_nearest(t, p, RoundingMode::NearestTiesEven);
    ++report.checked;
    if (!(r == FpNumber::one(p)) || abs(to_rational(r) - t) / t != bound) {
      report.fail("p=" + std::to_string(bits) + " not attained at 1+u");
    }
    if (bits > 12) continue;
    // Every midpoint 1 + (2k+1)u of [1, 2) stays within the bound.
    for (std::int64_t k = 0; k < (std::int64_t{1} << (bits - 1)); ++k) {
      const ExactValue mid = 1 + ExactValue(2 * k + 1) * u;
      for (RoundingMode mode : {RoundingMode::NearestTiesEven,
                                RoundingMode::NearestTiesAway}) {
        const FpNumber rm = round_nearest(mid, p, mode);
        ++report.checked;
        if (abs(to_rational(rm) - mid) / mid > bound) {
          report.fail("p=" + std::to_string(bits) + " midpoint k=" +
                      std::to_string(k));
        }
      }
    }
  }
  return report;
}

}  // namespace rnpow
