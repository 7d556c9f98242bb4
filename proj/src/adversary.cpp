#include "rnpow/adversary.hpp"

namespace rnpow {

FpNumber offset_factor(const Integer& k, Precision p) {
  const ExactValue value = 1 + ExactValue(k) * pow2(1 - p.bits());
  if (sgn(value) <= 0) throw std::invalid_argument("factor must be positive");
  FpNumber f = round_nearest(value, p);
  if (to_rational(f) != value) {
    throw std::invalid_argument("1 + " + k.get_str() + "*2^(1-p) is not a " +
                                std::to_string(p.bits()) + "-bit number");
  }
  return f;
}

AdversarySequence build_sequence(Precision p, std::int64_t n,
                                 RoundingMode mode) {
  if (p.bits() < 8) throw std::invalid_argument("build_sequence needs p >= 8");
  if (n < 2) throw std::invalid_argument("build_sequence needs n >= 2");

  const Integer quarter = pow2_int(p.bits() - 2);  // 2^(p-2)
  const Integer top = pow2_int(p.bits() - 1);
  Integer k1;
  mpz_sqrt(k1.get_mpz_t(), quarter.get_mpz_t());  // floor(2^(p/2-1))

  std::vector<Integer> offsets{k1, k1};
  std::vector<FpNumber> factors{offset_factor(k1, p), offset_factor(k1, p)};
  FpNumber partial = fp_mul(factors[0], factors[1], mode);

  for (std::int64_t i = 2; i < n; ++i) {
    if (partial.sign() < 0 || partial.exponent() != 0) {
      throw ConstructionError(i, "partial product " + to_string(partial) +
                                     " left [1, 2)");
    }
    const Integer g = partial.significand() - top;
    if (sgn(g) <= 0) {
      throw ConstructionError(i, "partial product offset g is not positive");
    }
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), quarter.get_mpz_t(),
                g.get_mpz_t());
    Integer k;
    if (g * g <= quarter) {
      k = sgn(r) != 0 ? q : Integer(q - 1);  // ceil(2^(p-2)/g) - 1
    } else {
      k = -(q + 1);
    }
    FpNumber factor = offset_factor(k, p);
    partial = fp_mul(partial, factor, mode);
    offsets.push_back(std::move(k));
    factors.push_back(std::move(factor));
  }

  ProductTrace trace = iterated_product(factors, mode);
  ErrorInUlps error = relative_error(trace.final, exact_product(factors));
  return {p.bits(),         n,
          mode,             std::move(factors),
          std::move(offsets), std::move(trace),
          std::move(error)};
}

SequenceCheck verify_sequence(const AdversarySequence& seq) {
  SequenceCheck check{VerificationReport("adversary p=" + std::to_string(seq.p) +
                                         " n=" + std::to_string(seq.n)),
                      ErrorInUlps(), ExactValue(0)};
  VerificationReport& report = check.report;
  if (seq.factors.size() != static_cast<std::size_t>(seq.n)) {
    report.fail("expected " + std::to_string(seq.n) + " factors, got " +
                std::to_string(seq.factors.size()));
    return check;
  }
  ProductTrace trace = iterated_product(seq.factors, seq.mode);
  ExactValue exact = to_rational(seq.factors[0]);
  for (std::size_t i = 1; i < seq.factors.size(); ++i) {
    exact *= to_rational(seq.factors[i]);
    ++report.checked;
    if (!(to_rational(trace.partials[i]) < exact)) {
      report.fail("partial " + std::to_string(i + 1) + " not rounded down");
    }
  }
  check.error = relative_error(trace.final, exact);
  check.gap = ExactValue(seq.n - 1) - check.error.value();
  ++report.checked;
  if (sgn(check.gap) <= 0) report.fail("error reached n-1 ulps");
  if (check.error != seq.achieved_error) {
    report.fail("recorded error differs from recomputed error");
  }
  return check;
}

}  // namespace rnpow
