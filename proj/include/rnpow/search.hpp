#pragma once

// Exhaustive measurement of the worst relative error of the naive power
// algorithm over every precision-p significand in [1, 2).
//
// Candidates are x = 1 + k 2^(1-p) for k in [k_begin, k_end). The range is
// processed in chunks; each chunk is split into contiguous sub-ranges, one
// per worker, and the partial results are merged in range order (larger
// error wins, ties go to the smaller k). The report is therefore independent
// of the worker count. After every chunk the running state can be written
// to a checkpoint file and a later run resumes from it.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "rnpow/algorithms.hpp"
#include "rnpow/exact.hpp"
#include "rnpow/softfloat.hpp"

namespace rnpow {

struct SearchReport {
  int p = 0;
  std::int64_t n = 0;
  RoundingMode mode = RoundingMode::NearestTiesEven;
  ErrorInUlps max_error;
  std::uint64_t argmax_k = 0;
  std::uint64_t k_begin = 0;
  std::uint64_t k_end = 0;
  std::uint64_t scanned = 0;
  // Inputs whose error exceeds (n-1) ulps.
  std::uint64_t violations = 0;

  FpNumber argmax_x() const;
  bool complete() const { return scanned == k_end - k_begin; }
};

struct SearchProgress {
  std::uint64_t done;
  std::uint64_t total;
};

struct SearchOptions {
  // 0 selects std::thread::hardware_concurrency().
  unsigned jobs = 0;
  std::optional<std::uint64_t> k_begin;
  std::optional<std::uint64_t> k_end;
  // Full scans above this precision are refused unless allow_large_precision.
  int precision_guard = 26;
  bool allow_large_precision = false;
  std::optional<std::filesystem::path> checkpoint;
  std::uint64_t chunk_size = std::uint64_t{1} << 20;
  // Stop (leaving an incomplete report) once this many candidates have been
  // processed in the current run; used to exercise resumption.
  std::optional<std::uint64_t> stop_after;
  std::function<void(const SearchProgress&)> on_progress;
};

// Thrown when a scan is requested beyond the precision guard.
class GuardViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SearchReport exhaustive_max_error(Precision p, std::int64_t n,
                                  RoundingMode mode = RoundingMode::NearestTiesEven,
                                  const SearchOptions& options = {});

// Exact relative error of naive_power(x, n) against x^n.
ErrorInUlps spot_error(const FpNumber& x, std::int64_t n,
                       RoundingMode mode = RoundingMode::NearestTiesEven);

// Error of the single candidate k as computed by the scan kernel.
ErrorInUlps candidate_error(Precision p, std::int64_t n, RoundingMode mode,
                            std::uint64_t k);

// Checkpoint state; see the file format notes in search.cpp.
struct ScanCheckpoint {
  int p = 0;
  std::int64_t n = 0;
  RoundingMode mode = RoundingMode::NearestTiesEven;
  std::uint64_t k_begin = 0;
  std::uint64_t k_end = 0;
  std::uint64_t next_k = 0;
  ExactValue max_error{0};
  std::optional<std::uint64_t> argmax_k;
  std::uint64_t violations = 0;
};

void write_checkpoint(const std::filesystem::path& path,
                      const ScanCheckpoint& state);
ScanCheckpoint read_checkpoint(const std::filesystem::path& path);

}  // namespace rnpow
