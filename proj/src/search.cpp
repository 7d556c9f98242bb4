#include "rnpow/search.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

namespace rnpow {

namespace {

// Largest precision handled by the 64-bit kernel: X * Y < 2^(2p) <= 2^62.
constexpr int kFastKernelMaxPrecision = 31;

// Evaluates one candidate at a time, reusing its GMP buffers.
//
// The computed power is Y * 2^(e - p + 1) and x^n = X^n * 2^(-n(p-1)), so
// after scaling both by 2^(n(p-1)) the error is |Y 2^s - X^n| / X^n with
// s = e + (n-1)(p-1) >= 0 (x >= 1 keeps e >= 0).
class CandidateKernel {
 public:
  CandidateKernel(Precision p, std::int64_t n, RoundingMode mode)
      : p_(p), n_(n), mode_(mode) {}

  void evaluate(std::uint64_t k) {
    const int bits = p_.bits();
    std::int64_t exponent = 0;
    if (bits <= kFastKernelMaxPrecision) {
      const std::uint64_t x = (std::uint64_t{1} << (bits - 1)) + k;
      std::uint64_t significand = 0;
      run_fast(x, significand, exponent);
      mpz_set_ui(scratch_.get_mpz_t(), significand);
      mpz_ui_pow_ui(power_.get_mpz_t(), x, static_cast<unsigned long>(n_));
    } else {
      FpNumber x = unit_binade_number(Integer(std::to_string(k)), p_);
      PowerTrace trace = naive_power(x, n_, mode_);
      scratch_ = trace.final.significand();
      exponent = trace.final.exponent();
      mpz_pow_ui(power_.get_mpz_t(), x.significand().get_mpz_t(),
                 static_cast<unsigned long>(n_));
    }
    const std::int64_t s = exponent + (n_ - 1) * (bits - 1);
    mpz_mul_2exp(scratch_.get_mpz_t(), scratch_.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(s));
    mpz_sub(diff_.get_mpz_t(), scratch_.get_mpz_t(), power_.get_mpz_t());
    mpz_abs(diff_.get_mpz_t(), diff_.get_mpz_t());
  }

  // |computed - exact| and exact, both scaled by 2^(n(p-1)).
  const Integer& diff() const { return diff_; }
  const Integer& power() const { return power_; }

  // diff * 2^p > (n-1) * power
  bool exceeds_simple_bound() {
    mpz_mul_2exp(scratch_.get_mpz_t(), diff_.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(p_.bits()));
    mpz_mul_ui(bound_.get_mpz_t(), power_.get_mpz_t(),
               static_cast<unsigned long>(n_ - 1));
    return scratch_ > bound_;
  }

  ExactValue error_ulps() const {
    return make_rational(diff_ << p_.bits(), power_);
  }

 private:
  void run_fast(std::uint64_t x, std::uint64_t& y, std::int64_t& e) const {
    const int bits = p_.bits();
    const bool away = mode_ == RoundingMode::NearestTiesAway;
    y = x;
    e = 0;
    for (std::int64_t step = 2; step <= n_; ++step) {
      const std::uint64_t prod = x * y;
      const int len = 64 - std::countl_zero(prod);
      int shift = len - bits;
      std::uint64_t q = prod >> shift;
      const std::uint64_t rem = prod & ((std::uint64_t{1} << shift) - 1);
      const std::uint64_t half = std::uint64_t{1} << (shift - 1);
      if (rem > half || (rem == half && (away || (q & 1) != 0))) {
        ++q;
        if ((q >> bits) != 0) {
          q >>= 1;
          ++shift;
        }
      }
      y = q;
      e += shift - (bits - 1);
    }
  }

  Precision p_;
  std::int64_t n_;
  RoundingMode mode_;
  Integer scratch_, power_, diff_, bound_;
};

struct PartialResult {
  bool has_max = false;
  Integer best_diff;
  Integer best_power;
  std::uint64_t argmax_k = 0;
  std::uint64_t violations = 0;
};

PartialResult scan_range(Precision p, std::int64_t n, RoundingMode mode,
                         std::uint64_t begin, std::uint64_t end) {
  PartialResult result;
  CandidateKernel kernel(p, n, mode);
  Integer lhs, rhs;
  for (std::uint64_t k = begin; k < end; ++k) {
    kernel.evaluate(k);
    // Strictly greater keeps the smallest k among equal errors.
    bool better = !result.has_max;
    if (!better) {
      mpz_mul(lhs.get_mpz_t(), kernel.diff().get_mpz_t(),
              result.best_power.get_mpz_t());
      mpz_mul(rhs.get_mpz_t(), result.best_diff.get_mpz_t(),
              kernel.power().get_mpz_t());
      better = lhs > rhs;
    }
    if (better) {
      result.has_max = true;
      result.best_diff = kernel.diff();
      result.best_power = kernel.power();
      result.argmax_k = k;
    }
    if (kernel.exceeds_simple_bound()) ++result.violations;
  }
  return result;
}

void merge_into(ScanCheckpoint& state, const PartialResult& part, int p) {
  state.violations += part.violations;
  if (!part.has_max) return;
  ExactValue err = make_rational(part.best_diff << p, part.best_power);
  // Parts arrive in increasing k, so on equal errors the earlier one stays.
  if (!state.argmax_k || err > state.max_error) {
    state.max_error = err;
    state.argmax_k = part.argmax_k;
  }
}

std::vector<PartialResult> scan_chunk(Precision p, std::int64_t n,
                                      RoundingMode mode, std::uint64_t begin,
                                      std::uint64_t end, unsigned jobs) {
  const std::uint64_t count = end - begin;
  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs, count));
  std::vector<PartialResult> parts(workers);
  if (workers == 1) {
    parts[0] = scan_range(p, n, mode, begin, end);
    return parts;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = begin + count * w / workers;
    const std::uint64_t hi = begin + count * (w + 1) / workers;
    threads.emplace_back([&, w, lo, hi] {
      try {
        parts[w] = scan_range(p, n, mode, lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return parts;
}

bool same_scan(const ScanCheckpoint& a, const ScanCheckpoint& b) {
  return a.p == b.p && a.n == b.n && a.mode == b.mode &&
         a.k_begin == b.k_begin && a.k_end == b.k_end;
}

}  // namespace

FpNumber SearchReport::argmax_x() const {
  return unit_binade_number(Integer(std::to_string(argmax_k)), Precision(p));
}

ErrorInUlps candidate_error(Precision p, std::int64_t n, RoundingMode mode,
                            std::uint64_t k) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  CandidateKernel kernel(p, n, mode);
  kernel.evaluate(k);
  return ErrorInUlps(kernel.error_ulps());
}

SearchReport exhaustive_max_error(Precision p, std::int64_t n,
                                  RoundingMode mode,
                                  const SearchOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (p.bits() > 64) {
    throw GuardViolation("exhaustive scans are limited to p <= 64");
  }
  const std::uint64_t full = std::uint64_t{1} << (p.bits() - 1);
  const std::uint64_t k_begin = options.k_begin.value_or(0);
  const std::uint64_t k_end = std::min(options.k_end.value_or(full), full);
  if (k_begin >= k_end) throw std::invalid_argument("empty significand range");
  const bool full_scan = k_begin == 0 && k_end == full;
  if (full_scan && p.bits() > options.precision_guard &&
      !options.allow_large_precision) {
    throw GuardViolation(
        "a full scan at p=" + std::to_string(p.bits()) + " visits 2^" +
        std::to_string(p.bits() - 1) +
        " inputs; restrict the range or pass --allow-large-p to proceed");
  }

  ScanCheckpoint state{p.bits(), n, mode, k_begin, k_end, k_begin, ExactValue(0),
                       std::nullopt, 0};
  if (options.checkpoint && std::filesystem::exists(*options.checkpoint)) {
    ScanCheckpoint saved = read_checkpoint(*options.checkpoint);
    if (!same_scan(saved, state)) {
      throw std::invalid_argument("checkpoint " + options.checkpoint->string() +
                                  " belongs to a different scan");
    }
    state = std::move(saved);
  }

  unsigned jobs = options.jobs;
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t chunk = std::max<std::uint64_t>(1, options.chunk_size);
  const std::uint64_t run_start = state.next_k;
  std::uint64_t run_limit = k_end;
  if (options.stop_after) {
    run_limit = std::min(k_end, run_start + *options.stop_after);
  }

  while (state.next_k < run_limit) {
    const std::uint64_t end = std::min(run_limit, state.next_k + chunk);
    for (const PartialResult& part :
         scan_chunk(p, n, mode, state.next_k, end, jobs)) {
      merge_into(state, part, p.bits());
    }
    state.next_k = end;
    if (options.checkpoint) write_checkpoint(*options.checkpoint, state);
    if (options.on_progress) {
      options.on_progress({state.next_k - k_begin, k_end - k_begin});
    }
  }

  SearchReport report;
  report.p = p.bits();
  report.n = n;
  report.mode = mode;
  report.max_error = ErrorInUlps(state.max_error);
  report.argmax_k = state.argmax_k.value_or(k_begin);
  report.k_begin = k_begin;
  report.k_end = k_end;
  report.scanned = state.next_k - k_begin;
  report.violations = state.violations;
  return report;
}

ErrorInUlps spot_error(const FpNumber& x, std::int64_t n, RoundingMode mode) {
  PowerTrace trace = naive_power(x, n, mode);
  return relative_error(trace.final,
                        pow(to_rational(x), static_cast<unsigned long>(n)));
}

// Checkpoint file format (text, one "key value" pair per line, fixed order):
//
//   rnpow-search-checkpoint 1
//   p <int>
//   n <int>
//   mode even|away
//   k_begin <uint>
//   k_end <uint>
//   next_k <uint>            first candidate not yet scanned
//   max_error <num>/<den>    exact running maximum, in ulps
//   argmax_k <uint>|none
//   violations <uint>
void write_checkpoint(const std::filesystem::path& path,
                      const ScanCheckpoint& state) {
  std::ostringstream out;
  out << "rnpow-search-checkpoint 1\n"
      << "p " << state.p << "\n"
      << "n " << state.n << "\n"
      << "mode " << to_string(state.mode) << "\n"
      << "k_begin " << state.k_begin << "\n"
      << "k_end " << state.k_end << "\n"
      << "next_k " << state.next_k << "\n"
      << "max_error " << state.max_error.get_num().get_str() << "/"
      << state.max_error.get_den().get_str() << "\n"
      << "argmax_k "
      << (state.argmax_k ? std::to_string(*state.argmax_k) : "none") << "\n"
      << "violations " << state.violations << "\n";
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + tmp.string());
    file << out.str();
    if (!file.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

ScanCheckpoint read_checkpoint(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path.string());
  auto expect = [&](const std::string& key) {
    std::string got, value;
    if (!(file >> got >> value) || got != key) {
      throw std::runtime_error("malformed checkpoint " + path.string() +
                               ": expected '" + key + "'");
    }
    return value;
  };
  auto to_u64 = [](const std::string& s) { return std::stoull(s); };
  ScanCheckpoint state;
  if (expect("rnpow-search-checkpoint") != "1") {
    throw std::runtime_error("unsupported checkpoint version");
  }
  state.p = std::stoi(expect("p"));
  state.n = std::stoll(expect("n"));
  state.mode = parse_rounding_mode(expect("mode"));
  state.k_begin = to_u64(expect("k_begin"));
  state.k_end = to_u64(expect("k_end"));
  state.next_k = to_u64(expect("next_k"));
  state.max_error = parse_rational(expect("max_error"));
  std::string argmax = expect("argmax_k");
  if (argmax != "none") state.argmax_k = to_u64(argmax);
  state.violations = to_u64(expect("violations"));
  if (state.next_k < state.k_begin || state.next_k > state.k_end) {
    throw std::runtime_error("checkpoint next_k outside its range");
  }
  return state;
}

}  // namespace rnpow
