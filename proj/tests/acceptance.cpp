// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rnpow/adversary.hpp"
#include "rnpow/bounds.hpp"
#include "rnpow/checks.hpp"
#include "rnpow/cli.hpp"
#include "rnpow/search.hpp"

using namespace rnpow;
using Json = nlohmann::ordered_json;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitSearchP8 = 10;
constexpr double kLimitSearchP9 = 30;
constexpr double kLimitSpot = 1;
constexpr double kLimitAdversary = 5;
constexpr double kLimitNMax = 1;
constexpr double kLimitProperties = 120;
constexpr std::int64_t kBracketInstances = 100000;

struct Outcome {
  bool ok = true;
  std::vector<std::string> details;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      details.push_back(what);
    }
  }
};

// The printed reference digits must be the leading digits of the truncated
// decimal expansion.
bool prefix_match(const ExactValue& v, const std::string& printed) {
  const auto dot = printed.find('.');
  const int digits = static_cast<int>(printed.size() - dot - 1);
  return to_decimal(v, digits) == printed;
}

std::string describe(const ExactValue& v, const std::string& printed) {
  const int digits = static_cast<int>(printed.size() - printed.find('.') - 1);
  return "got " + to_decimal(v, digits + 6) + ", expected prefix " + printed;
}

void check_search(Outcome& out, int p, int n_lo, const std::vector<std::string>& want,
                  std::uint64_t& violations) {
  for (std::size_t i = 0; i < want.size(); ++i) {
    const std::int64_t n = n_lo + static_cast<std::int64_t>(i);
    const SearchReport r = exhaustive_max_error(Precision(p), n);
    violations += r.violations;
    out.require(r.complete(), "n=" + std::to_string(n) + " scan incomplete");
    out.require(prefix_match(r.max_error.value(), want[i]),
                "n=" + std::to_string(n) + ": " + describe(r.max_error.value(), want[i]));
  }
}

std::string binary32_report(unsigned jobs) {
  cli::RunConfig config;
  config.command = cli::Command::Search;
  config.p = 24;
  config.n = cli::NRange{6, 6};
  config.format = cli::OutputFormat::Json;
  config.jobs = jobs;
  std::string all = cli::run(config).output;
  config.n = cli::NRange{10, 10};
  all += cli::run(config).output;
  return all;
}

void check_binary32_row(Outcome& out, const Json& row, const std::string& x,
                        const std::string& printed, std::uint64_t& violations) {
  const std::string n = std::to_string(row["n"].get<int>());
  violations += row["violations"].get<std::uint64_t>();
  out.require(row["complete"].get<bool>(), "n=" + n + " scan incomplete");
  const ExactValue want_x = parse_rational(x);
  const ExactValue got_x = parse_rational(row["argmax_x"].get<std::string>());
  out.require(got_x == want_x, "n=" + n + ": argmax " + to_fraction_string(got_x) +
                                   ", expected " + x);
  const ExactValue err =
      parse_rational(row["max_error"]["fraction"].get<std::string>());
  out.require(prefix_match(err, printed), "n=" + n + ": " + describe(err, printed));
}

struct Criterion {
  int id;
  std::string title;
  double limit;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  std::uint64_t scan_violations = 0;
  std::string report_one_worker;

  const std::vector<Criterion> criteria{
      {1, "worst errors, p=8, n=3..8", kLimitSearchP8,
       [&] {
         Outcome out;
         check_search(out, 8, 3,
                      {"1.35988", "1.73903", "2.21152", "2.53023", "2.69634",
                       "3.42929"},
                      scan_violations);
         return out;
       }},
      {2, "worst errors, p=9, n=6..11", kLimitSearchP9,
       [&] {
         Outcome out;
         check_search(out, 9, 6,
                      {"2.677", "2.975", "3.435", "4.060", "3.421", "3.577"},
                      scan_violations);
         return out;
       }},
      {3, "binary32 worst cases, full scans n=6 and n=10", 0,
       [&] {
         Outcome out;
         report_one_worker = binary32_report(1);
         std::istringstream docs(report_one_worker);
         Json n6, n10;
         docs >> n6 >> n10;
         check_binary32_row(out, n6["results"][0], "8473808/2^23", "4.328005619",
                            scan_violations);
         check_binary32_row(out, n10["results"][0], "8429278/2^23", "7.059603149",
                            scan_violations);
         return out;
       }},
      {4, "spot cases p=53 and p=113", kLimitSpot,
       [&] {
         Outcome out;
         struct Spot {
           int p;
           const char* x;
           int n;
           const char* printed;
         };
         for (const Spot& s :
              {Spot{53, "4507062722867963/2^52", 6, "4.7805779"},
               Spot{113, "5192324351407105984705482084151108/2^112", 6, "4.8827888"},
               Spot{53, "4503796447992526/2^52", 10, "7.9534189"}}) {
           const ExactValue xr = parse_rational(s.x);
           const FpNumber x = round_nearest(xr, Precision(s.p));
           out.require(to_rational(x) == xr, std::string(s.x) + " not representable");
           const ErrorInUlps e = spot_error(x, s.n);
           out.require(prefix_match(e.value(), s.printed),
                       "p=" + std::to_string(s.p) + " n=" + std::to_string(s.n) +
                           ": " + describe(e.value(), s.printed));
         }
         return out;
       }},
      {5, "adversarial products", kLimitAdversary,
       [&] {
         Outcome out;
         struct Row {
           int p;
           int n;
           const char* printed;
         };
         for (const Row& r : {Row{24, 10, "8.99336984"}, Row{24, 100, "98.9371972591"},
                              Row{53, 10, "8.99999972447"},
                              Row{53, 100, "98.9999970091"},
                              Row{113, 10, "8.99999999999999973119"},
                              Row{113, 100, "98.99999999999999701662"}}) {
           const AdversarySequence s = build_sequence(Precision(r.p), r.n);
           const std::string where =
               "p=" + std::to_string(r.p) + " n=" + std::to_string(r.n);
           out.require(prefix_match(s.achieved_error.value(), r.printed),
                       where + ": " + describe(s.achieved_error.value(), r.printed));
           out.require(verify_sequence(s).report.passed, where + ": verification");
         }
         const AdversarySequence s = build_sequence(Precision(24), 7);
         const std::vector<std::string> want{
             "4097/4096",       "4097/4096",     "8387583/8388608", "8387241/8388608",
             "262221/262144",   "8387601/8388608", "8387279/8388608"};
         for (std::size_t i = 0; i < want.size(); ++i) {
           out.require(to_string(s.factors[i]) == want[i],
                       "factor " + std::to_string(i + 1) + " is " +
                           to_string(s.factors[i]) + ", expected " + want[i]);
         }
         return out;
       }},
      {6, "n_max table", kLimitNMax,
       [&] {
         Outcome out;
         for (auto [p, want] : {std::pair<int, std::int64_t>{24, 2088},
                                {53, 48385542},
                                {113, 51953580258461959}}) {
           const std::int64_t got = n_max(Precision(p));
           out.require(got == want, "n_max(" + std::to_string(p) + ") = " +
                                        std::to_string(got) + ", expected " +
                                        std::to_string(want));
         }
         return out;
       }},
      {7, "property suites", kLimitProperties,
       [&] {
         Outcome out;
         out.require(scan_violations == 0,
                     std::to_string(scan_violations) +
                         " inputs above (n-1)u in the scans of criteria 1-3");
         PowerInequalityGrid grid = PowerInequalityGrid::standard();
         for (const VerificationReport& r :
              {check_product_bracket(kBracketInstances, 20140101),
               check_fraction_bound(20000, 7), check_small_squares_round_down(5, 32), check_unit_power_inequality(),
               check_power_inequality(grid), check_refined_unit_attainment(2, 256),
               check_rounding_properties(20000, 11),
               check_refined_binary32_bound(10, 2088)}) {
           std::string first = r.failures.empty() ? "" : ": " + r.failures.front();
           out.require(r.passed, r.name + " failed" + first);
         }
         return out;
       }},
      {8, "binary32 scans, 1 worker vs 8 workers", 0,
       [&] {
         Outcome out;
         if (report_one_worker.empty()) report_one_worker = binary32_report(1);
         const std::string many = binary32_report(8);
         out.require(many == report_one_worker, "reports differ");
         return out;
       }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && seconds > c.limit) {
      out.require(false, "took " + std::to_string(seconds) + " s, limit " +
                             std::to_string(c.limit) + " s");
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": "
              << c.title << " (" << timing << ")\n";
    for (const std::string& d : out.details) std::cout << "    " << d << "\n";
    if (!out.ok) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/"
            << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
