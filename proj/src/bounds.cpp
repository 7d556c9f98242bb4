#include "rnpow/bounds.hpp"

#include <functional>
#include <stdexcept>

namespace rnpow {

namespace {

// Smallest m in [1, 2^bits] with at_or_above(m) true; the constant then lies
// in [(m-1)/2^bits, m/2^bits]. The constants handled here are irrational and
// inside (0, 1), so the predicate is never an equality.
Enclosure dyadic_enclosure(int bits,
                           const std::function<bool(const Integer&)>& at_or_above) {
  if (bits < 1) throw std::invalid_argument("enclosure bits must be >= 1");
  Integer lo = 0;                 // at_or_above(lo) is false
  Integer hi = pow2_int(bits);    // at_or_above(hi) is true
  while (hi - lo > 1) {
    Integer mid = (lo + hi) >> 1;
    if (at_or_above(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {ExactValue(lo) * pow2(-bits), ExactValue(hi) * pow2(-bits)};
}

Integer cube(const Integer& v) { return v * v * v; }

}  // namespace

BoundSet bound_set(Precision p, std::int64_t n) {
  if (n < 2) throw std::invalid_argument("bound_set: n must be >= 2");
  const ExactValue u = pow2(-p.bits());
  const ExactValue k = ExactValue(Integer(std::to_string(n - 1)));
  ExactValue simple = k * u;
  if (simple >= 1) {
    throw std::domain_error("gamma_{n-1} undefined: (n-1)u >= 1");
  }
  ExactValue gamma = simple / (1 - simple);
  ExactValue psi = pow(ExactValue(1 + u), static_cast<unsigned long>(n - 1)) - 1;
  ExactValue refined = u / (1 + u);
  return {p.bits(), n, u, gamma, psi, simple, refined};
}

Enclosure beta(int bits) {
  // m/2^K >= beta  <=>  (2^2K + m^2)^3 >= 2 * 2^6K
  const Integer scale = pow2_int(2 * bits);
  const Integer target = pow2_int(6 * static_cast<std::int64_t>(bits) + 1);
  return dyadic_enclosure(bits, [&](const Integer& m) {
    return cube(scale + m * m) >= target;
  });
}

Enclosure alpha(Precision p, int bits) {
  if (p.bits() < 5) throw std::invalid_argument("alpha requires p >= 5");
  // a >= alpha_p  <=>  (1 + a^2)^3 >= (2^(p+1) / (2^p + 1))^2
  const Integer scale = pow2_int(2 * bits);
  const Integer denom_sq = (pow2_int(p.bits()) + 1) * (pow2_int(p.bits()) + 1);
  const Integer target = pow2_int(6 * static_cast<std::int64_t>(bits) +
                                  2 * static_cast<std::int64_t>(p.bits()) + 2);
  return dyadic_enclosure(bits, [&](const Integer& m) {
    return cube(scale + m * m) * denom_sq >= target;
  });
}

Enclosure alpha_limit(int bits) {
  const Integer scale = pow2_int(2 * bits);
  const Integer target = pow2_int(6 * static_cast<std::int64_t>(bits) + 2);
  return dyadic_enclosure(bits, [&](const Integer& m) {
    return cube(scale + m * m) >= target;
  });
}

std::int64_t n_max(Precision p) {
  if (p.bits() < 5) throw std::invalid_argument("n_max requires p >= 5");
  // n <= beta 2^(p/2)  <=>  (2^p + n^2)^3 <= 2^(3p+1); equality is impossible.
  const Integer base = pow2_int(p.bits());
  const Integer target = pow2_int(3 * static_cast<std::int64_t>(p.bits()) + 1);
  auto fits = [&](const Integer& n) { return cube(base + n * n) <= target; };
  Integer lo = 0;
  Integer hi = pow2_int(p.bits() / 2 + 1);
  while (hi - lo > 1) {
    Integer mid = (lo + hi) >> 1;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (!lo.fits_slong_p()) {
    throw std::overflow_error("n_max does not fit a 64-bit integer");
  }
  return lo.get_si();
}

VerificationReport check_unit_power_inequality() {
  VerificationReport report("unit_power_inequality");
  std::vector<ExactValue> grid;
  for (int j = 5; j <= 64; ++j) {
    for (int c = 1; c <= 31; c += 2) {
      ExactValue u = ExactValue(c) * pow2(-j);
      if (u <= ExactValue(1, 32)) grid.push_back(u);
    }
  }
  for (const ExactValue& u : grid) {
    const ExactValue v = 1 + u / (1 + u);
    for (int k = 1; k <= 3; ++k) {
      ExactValue lhs = pow(v, static_cast<unsigned long>(k));
      ExactValue rhs = 1 + k * u;
      ++report.checked;
      if (!(lhs < rhs)) {
        report.fail("k=" + std::to_string(k) + " u=" + to_fraction_string(u));
      }
    }
    // Closed forms of the k = 2 and k = 3 differences.
    ExactValue d2 = pow(v, 2) - (1 + 2 * u);
    ExactValue want2 = -(u * u * (1 + 2 * u)) / pow(ExactValue(1 + u), 2);
    ExactValue d3 = pow(v, 3) - (1 + 3 * u);
    ExactValue want3 = -(pow(u, 3) * (3 * u + 2)) / pow(ExactValue(1 + u), 3);
    report.checked += 2;
    if (d2 != want2) report.fail("k=2 closed form, u=" + to_fraction_string(u));
    if (d3 != want3) report.fail("k=3 closed form, u=" + to_fraction_string(u));
  }

  std::optional<int> first_k4_failure;
  int k4_failures = 0;
  for (int j = 4; j <= 60; ++j) {
    ExactValue u = pow2(-j);
    ExactValue lhs = pow(ExactValue(1 + u / (1 + u)), 4);
    if (!(lhs < 1 + 4 * u)) {
      ++k4_failures;
      if (!first_k4_failure) first_k4_failure = j;
    }
  }
  if (first_k4_failure) {
    report.notes.push_back("k=4 fails for " + std::to_string(k4_failures) +
                           " of 57 grid points, first at u=2^-" +
                           std::to_string(*first_k4_failure));
  } else {
    report.fail("no k=4 counterexample found on u = 2^-j, j = 4..60");
  }
  return report;
}

PowerInequalityGrid PowerInequalityGrid::standard() {
  PowerInequalityGrid grid;
  for (std::int64_t n = 3; n <= 64; ++n) grid.n_values.push_back(n);
  for (std::int64_t n : {100, 128, 256, 500, 1000, 2088}) {
    grid.n_values.push_back(n);
  }
  return grid;
}

VerificationReport check_power_inequality(const PowerInequalityGrid& grid) {
  VerificationReport report("power_inequality");
  for (std::int64_t n : grid.n_values) {
    if (n < 3) {
      report.fail("n=" + std::to_string(n) + " below 3");
      continue;
    }
    const Integer nn(std::to_string(n));
    const ExactValue n_sq = ExactValue(nn * nn);
    const ExactValue upper = ExactValue(2) / (3 * n_sq);

    std::vector<ExactValue> points{ExactValue(0), upper};
    int j0 = 0;
    while (pow2(-j0) > upper) ++j0;
    for (int j = j0; j < j0 + grid.exponent_span; ++j) {
      for (int c = 1; c <= grid.max_numerator; ++c) {
        ExactValue u = ExactValue(c) * pow2(-j);
        if (u <= upper) points.push_back(u);
      }
    }
    for (const ExactValue& u : points) {
      ExactValue lhs = pow(ExactValue(1 + u), static_cast<unsigned long>(n - 2)) *
                       (1 + u / (1 + n_sq * u));
      ExactValue rhs = 1 + (n - 1) * u;
      ++report.checked;
      if (lhs > rhs) {
        report.fail("n=" + std::to_string(n) + " u=" + to_fraction_string(u));
      }
    }
  }
  return report;
}

VerificationReport check_refined_binary32_bound(std::int64_t n_lo,
                                                std::int64_t n_hi) {
  VerificationReport report("refined_binary32");
  if (n_lo < 10 || n_hi < n_lo) {
    throw std::invalid_argument("refined bound needs 10 <= n_lo <= n_hi");
  }
  // With u = 2^-24, 7.06 = 706/100 and 2.8104 = 28104/10^4:
  //   A_n = (1 + 7.06u)(1+u)^(n-10) = num / (100 * 2^(24 (n-9)))
  // and the claim A_n - 1 <= (n - 2.8104)u becomes
  //   10^4 * 2^24 * (num - den) <= (10^4 n - 28104) * den.
  const Integer two24 = pow2_int(24);
  const Integer step = two24 + 1;
  Integer num = 100 * two24 + 706;
  Integer den = 100 * two24;
  auto holds = [&](std::int64_t n) {
    Integer lhs = Integer(10000) * two24 * (num - den);
    Integer rhs = (Integer(10000) * Integer(std::to_string(n)) - 28104) * den;
    return lhs <= rhs;
  };
  for (std::int64_t n = 10; n <= n_hi + 1; ++n) {
    if (n > 10) {
      num *= step;
      den *= two24;
    }
    if (n < n_lo) continue;
    if (n <= n_hi) {
      ++report.checked;
      if (!holds(n)) report.fail("n=" + std::to_string(n));
    } else {
      report.notes.push_back("boundary probe n=" + std::to_string(n) + ": " +
                             (holds(n) ? "holds" : "fails"));
    }
  }
  return report;
}

VerificationReport check_alpha_exceeds_beta(int p_lo, int p_hi) {
  VerificationReport report("alpha_exceeds_beta");
  const Enclosure b = beta();
  const Enclosure limit = alpha_limit();
  for (int p = p_lo; p <= p_hi; ++p) {
    Enclosure a = alpha(Precision(p));
    ++report.checked;
    if (!(a.lo > b.hi)) report.fail("p=" + std::to_string(p));
    if (a.lo > limit.hi) report.fail("alpha above its limit at p=" + std::to_string(p));
  }
  return report;
}

VerificationReport check_n_max_floor(int p_lo, int p_hi) {
  VerificationReport report("n_max_floor");
  for (int p = p_lo; p <= p_hi; ++p) {
    const std::int64_t n = n_max(Precision(p));
    const Integer nn(std::to_string(n));
    const ExactValue scale = pow2(-p);
    const ExactValue at = ExactValue(nn * nn) * scale;
    const ExactValue next = ExactValue((nn + 1) * (nn + 1)) * scale;
    bool decided = false;
    for (int bits = kDefaultEnclosureBits; bits <= 1024 && !decided; bits *= 2) {
      Enclosure b = beta(bits);
      ExactValue lo_sq = b.lo * b.lo;
      ExactValue hi_sq = b.hi * b.hi;
      if (at <= lo_sq && next > hi_sq) {
        decided = true;
      } else if (at > hi_sq || next <= lo_sq) {
        break;
      }
    }
    ++report.checked;
    if (!decided) report.fail("p=" + std::to_string(p));
  }
  return report;
}

}  // namespace rnpow
