#include "rnpow/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rnpow/adversary.hpp"
#include "rnpow/bounds.hpp"
#include "rnpow/checks.hpp"
#include "rnpow/search.hpp"

namespace rnpow::cli {

namespace {

using Json = nlohmann::ordered_json;

struct TextTable {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

// Result of one command before rendering.
struct CommandOutput {
  Json doc;
  TextTable table;
  std::vector<std::string> notes;
  bool ok = true;
};

std::string range_string(const NRange& r) {
  if (r.first == r.last) return std::to_string(r.first);
  return std::to_string(r.first) + ".." + std::to_string(r.last);
}

std::string command_name(Command c) {
  switch (c) {
    case Command::Search:
      return "search";
    case Command::Spot:
      return "spot";
    case Command::Bounds:
      return "bounds";
    case Command::Adversary:
      return "adversary";
    case Command::Verify:
      return "verify";
    case Command::Regress:
      return "regress";
  }
  return "?";
}

Json exact_json(const ExactValue& v, int digits) {
  Json j;
  j["fraction"] = to_fraction_string(v);
  j["decimal"] = to_decimal(v, digits);
  return j;
}

std::string direction_letters(const std::vector<RoundingDirection>& dirs) {
  std::string s;
  s.reserve(dirs.size());
  for (RoundingDirection d : dirs) s.push_back(to_string(d)[0]);
  return s;
}

NRange require_n(const RunConfig& config) {
  if (!config.n) throw UsageError(command_name(config.command) + " needs --n");
  return *config.n;
}

Precision require_p(const RunConfig& config) {
  if (config.p == 0) throw UsageError(command_name(config.command) + " needs --p");
  return Precision(config.p);
}

std::optional<std::int64_t> n_max_or_none(Precision p) {
  if (p.bits() < 5) return std::nullopt;
  return n_max(p);
}

std::string bool_text(bool b) { return b ? "yes" : "no"; }

CommandOutput run_search(const RunConfig& config) {
  const Precision p = require_p(config);
  const NRange range = require_n(config);
  const auto top_n = n_max_or_none(p);
  CommandOutput out;
  out.table.headers = {"n", "actual maximum (u)", "argmax x", "gamma_{n-1} (u)",
                       "(n-1)u", "violations", "scanned"};
  Json results = Json::array();
  for (std::int64_t n = range.first; n <= range.last; ++n) {
    SearchOptions options;
    options.jobs = config.jobs;
    options.k_begin = config.k_begin;
    options.k_end = config.k_end;
    options.allow_large_precision = config.allow_large_p;
    if (config.checkpoint) {
      options.checkpoint = *config.checkpoint;
      if (range.first != range.last) {
        options.checkpoint->concat(".n" + std::to_string(n));
      }
    }
    if (config.progress) {
      options.on_progress = [n](const SearchProgress& pr) {
        std::cerr << "search n=" << n << ": " << pr.done << "/" << pr.total
                  << "\n";
      };
    }
    const SearchReport r = exhaustive_max_error(p, n, config.mode, options);
    std::optional<ExactValue> gamma_ulps;
    if (n >= 2) {
      try {
        const BoundSet b = bound_set(p, n);
        gamma_ulps = ExactValue(b.gamma / b.u);
      } catch (const std::domain_error&) {
      }
    }
    Json row;
    row["n"] = n;
    row["max_error"] = exact_json(r.max_error.value(), config.digits);
    row["argmax_k"] = r.argmax_k;
    row["argmax_x"] = to_string(r.argmax_x());
    row["k_begin"] = r.k_begin;
    row["k_end"] = r.k_end;
    row["scanned"] = r.scanned;
    row["complete"] = r.complete();
    row["violations"] = r.violations;
    row["simple_bound_ulps"] = n - 1;
    row["gamma_ulps"] = gamma_ulps ? exact_json(*gamma_ulps, config.digits) : Json();
    row["within_n_max"] = top_n ? Json(n <= *top_n) : Json();
    results.push_back(std::move(row));

    out.table.rows.push_back(
        {std::to_string(n), to_decimal(r.max_error, config.digits),
         to_string(r.argmax_x()),
         gamma_ulps ? to_decimal(*gamma_ulps, config.digits) : "-",
         std::to_string(n - 1), std::to_string(r.violations),
         std::to_string(r.scanned)});
    if (r.violations != 0) {
      out.ok = false;
      out.notes.push_back("n=" + std::to_string(n) + ": " +
                          std::to_string(r.violations) +
                          " inputs exceed (n-1)u");
    }
  }
  out.doc["p"] = p.bits();
  out.doc["mode"] = std::string(to_string(config.mode));
  out.doc["n_max"] = top_n ? Json(*top_n) : Json();
  out.doc["results"] = std::move(results);
  return out;
}

CommandOutput run_spot(const RunConfig& config) {
  const Precision p = require_p(config);
  const NRange range = require_n(config);
  if (config.x.empty()) throw UsageError("spot needs --x");
  const ExactValue xr = parse_rational(config.x);
  const FpNumber x = round_nearest(xr, p);
  if (to_rational(x) != xr) {
    throw UsageError("x = " + config.x + " is not a " + std::to_string(p.bits()) +
                     "-bit floating-point number");
  }
  const auto top_n = n_max_or_none(p);
  CommandOutput out;
  out.table.headers = {"n", "relative error (u)", "fraction", "directions"};
  Json results = Json::array();
  for (std::int64_t n = range.first; n <= range.last; ++n) {
    const PowerTrace trace = naive_power(x, n, config.mode);
    const ErrorInUlps err = relative_error(
        trace.final, pow(xr, static_cast<unsigned long>(n)));
    std::vector<RoundingDirection> dirs;
    for (const PowerStep& s : trace.steps) dirs.push_back(s.direction);
    Json row;
    row["n"] = n;
    row["error"] = exact_json(err.value(), config.digits);
    row["computed"] = to_string(trace.final);
    row["directions"] = direction_letters(dirs);
    results.push_back(std::move(row));
    out.table.rows.push_back({std::to_string(n), to_decimal(err, config.digits),
                              to_fraction_string(err.value()),
                              direction_letters(dirs)});
    if (top_n && n <= *top_n && err.value() > n - 1) {
      out.ok = false;
      out.notes.push_back("n=" + std::to_string(n) + ": error exceeds (n-1)u");
    }
  }
  out.doc["p"] = p.bits();
  out.doc["mode"] = std::string(to_string(config.mode));
  out.doc["x"] = to_string(x);
  out.doc["results"] = std::move(results);
  return out;
}

Json enclosure_json(const Enclosure& e, int digits) {
  Json j;
  j["lo"] = to_decimal(e.lo, digits);
  j["hi"] = to_decimal(e.hi, digits);
  return j;
}

CommandOutput run_bounds(const RunConfig& config) {
  const Precision p = require_p(config);
  const auto top_n = n_max_or_none(p);
  CommandOutput out;
  out.table.headers = {"n", "(n-1)u", "psi_{n-1} (u)", "gamma_{n-1} (u)",
                       "u/(1+u) (u)", "within n_max"};
  Json rows = Json::array();
  if (config.n) {
    for (std::int64_t n = config.n->first; n <= config.n->last; ++n) {
      const ExactValue u = pow2(-p.bits());
      const ExactValue k = ExactValue(Integer(std::to_string(n - 1)));
      if (n < 2) throw UsageError("bounds needs n >= 2");
      std::optional<BoundSet> b;
      try {
        b = bound_set(p, n);
      } catch (const std::domain_error&) {
      }
      const ExactValue psi_ulps =
          (pow(ExactValue(1 + u), static_cast<unsigned long>(n - 1)) - 1) / u;
      const ExactValue refined_ulps = 1 / (1 + u);
      Json row;
      row["n"] = n;
      row["simple_ulps"] = exact_json(k, config.digits);
      row["psi_ulps"] = exact_json(psi_ulps, config.digits);
      row["gamma_ulps"] = b ? exact_json(ExactValue(b->gamma / u), config.digits) : Json();
      row["refined_unit_ulps"] = exact_json(refined_ulps, config.digits);
      row["exceeds_n_max"] = top_n ? Json(n > *top_n) : Json();
      rows.push_back(std::move(row));
      out.table.rows.push_back(
          {std::to_string(n), to_decimal(k, config.digits),
           to_decimal(psi_ulps, config.digits),
           b ? to_decimal(ExactValue(b->gamma / u), config.digits) : "undefined",
           to_decimal(refined_ulps, config.digits),
           top_n ? bool_text(n <= *top_n) : "-"});
      if (top_n && n > *top_n) {
        out.notes.push_back("n=" + std::to_string(n) + " exceeds n_max(" +
                            std::to_string(p.bits()) + ") = " +
                            std::to_string(*top_n) +
                            "; the (n-1)u bound for powers is not established");
      }
    }
  }
  const Enclosure b = beta();
  out.doc["p"] = p.bits();
  out.doc["u"] = to_fraction_string(pow2(-p.bits()));
  out.doc["n_max"] = top_n ? Json(*top_n) : Json();
  out.doc["beta"] = enclosure_json(b, 32);
  out.doc["alpha_p"] =
      p.bits() >= 5 ? enclosure_json(alpha(p), 32) : Json();
  out.doc["rows"] = std::move(rows);
  if (top_n) {
    out.notes.insert(out.notes.begin(), "n_max(" + std::to_string(p.bits()) +
                                            ") = " + std::to_string(*top_n));
  }
  return out;
}

CommandOutput run_adversary(const RunConfig& config) {
  const Precision p = require_p(config);
  const NRange range = require_n(config);
  CommandOutput out;
  out.table.headers = {"n", "relative error (u)", "gap to n-1 (u)",
                       "all down", "first factors"};
  Json results = Json::array();
  for (std::int64_t n = range.first; n <= range.last; ++n) {
    const AdversarySequence seq = build_sequence(p, n, config.mode);
    const SequenceCheck check = verify_sequence(seq);
    Json factors = Json::array();
    Json offsets = Json::array();
    for (const FpNumber& f : seq.factors) factors.push_back(to_string(f));
    for (const Integer& k : seq.offsets) offsets.push_back(k.get_str());
    Json row;
    row["n"] = n;
    row["achieved_error"] = exact_json(seq.achieved_error.value(), config.digits);
    row["gap"] = exact_json(check.gap, config.digits);
    row["verified"] = check.report.passed;
    row["directions"] = direction_letters(seq.trace.directions);
    row["factors"] = std::move(factors);
    row["offsets"] = std::move(offsets);
    results.push_back(std::move(row));

    std::string head;
    for (std::size_t i = 0; i < std::min<std::size_t>(3, seq.factors.size()); ++i) {
      head += (i ? ", " : "") + to_string(seq.factors[i]);
    }
    if (seq.factors.size() > 3) head += ", ...";
    out.table.rows.push_back(
        {std::to_string(n), to_decimal(seq.achieved_error, config.digits),
         to_decimal(check.gap, config.digits), bool_text(check.report.passed),
         head});
    if (!check.report.passed) {
      out.ok = false;
      for (const auto& f : check.report.failures) out.notes.push_back(f);
    }
  }
  out.doc["p"] = p.bits();
  out.doc["mode"] = std::string(to_string(config.mode));
  out.doc["results"] = std::move(results);
  return out;
}

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names{
      "unit-power", "power-inequality",       "refined-binary32", "alpha-beta",
      "n-max",     "small-squares",       "power-bound",      "downward-step",
      "product-bracket", "fraction-bound",       "rounding",         "refined-unit"};
  return names;
}

VerificationReport run_check(const std::string& name, bool quick) {
  if (name == "unit-power") return check_unit_power_inequality();
  if (name == "power-inequality") {
    PowerInequalityGrid grid = PowerInequalityGrid::standard();
    if (quick) grid.exponent_span = 6;
    return check_power_inequality(grid);
  }
  if (name == "refined-binary32") return check_refined_binary32_bound();
  if (name == "alpha-beta") return check_alpha_exceeds_beta();
  if (name == "n-max") return check_n_max_floor();
  if (name == "small-squares") return check_small_squares_round_down(5, quick ? 20 : 32);
  if (name == "power-bound") return check_power_bound_exhaustive(5, quick ? 11 : 14);
  if (name == "downward-step") return check_downward_step_implies_bound(5, quick ? 9 : 11);
  if (name == "product-bracket") {
    return check_product_bracket(quick ? 2000 : 100000, 20140101);
  }
  if (name == "fraction-bound") return check_fraction_bound(quick ? 2000 : 20000, 7);
  if (name == "rounding") return check_rounding_properties(quick ? 2000 : 20000, 11);
  if (name == "refined-unit") return check_refined_unit_attainment(2, quick ? 64 : 256);
  throw UsageError("unknown check '" + name + "'");
}

CommandOutput run_verify(const RunConfig& config) {
  const std::vector<std::string>& names =
      config.checks.empty() ? all_checks() : config.checks;
  CommandOutput out;
  out.table.headers = {"check", "result", "checked", "notes"};
  Json checks = Json::array();
  for (const std::string& name : names) {
    const VerificationReport r = run_check(name, config.quick);
    Json j;
    j["name"] = name;
    j["passed"] = r.passed;
    j["checked"] = r.checked;
    j["notes"] = r.notes;
    std::vector<std::string> shown(
        r.failures.begin(),
        r.failures.begin() + static_cast<std::ptrdiff_t>(
                                 std::min<std::size_t>(20, r.failures.size())));
    j["failures"] = shown;
    checks.push_back(std::move(j));
    std::string notes;
    for (const auto& n : r.notes) notes += (notes.empty() ? "" : "; ") + n;
    out.table.rows.push_back({name, r.passed ? "pass" : "FAIL",
                              std::to_string(r.checked), notes});
    if (!r.passed) {
      out.ok = false;
      for (const auto& f : shown) out.notes.push_back(name + ": " + f);
    }
  }
  out.doc["quick"] = config.quick;
  out.doc["checks"] = std::move(checks);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string render(const CommandOutput& out, const RunConfig& config) {
  std::ostringstream os;
  switch (config.format) {
    case OutputFormat::Json: {
      Json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["command"] = command_name(config.command);
      doc["invocation"] = canonical_invocation(config);
      for (const auto& [key, value] : out.doc.items()) doc[key] = value;
      doc["notes"] = out.notes;
      doc["ok"] = out.ok;
      os << doc.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          os << (i ? "," : "") << csv_field(cells[i]);
        }
        os << "\n";
      };
      line(out.table.headers);
      for (const auto& row : out.table.rows) line(row);
      break;
    }
    case OutputFormat::Table: {
      std::vector<std::size_t> width(out.table.headers.size());
      for (std::size_t i = 0; i < width.size(); ++i) {
        width[i] = out.table.headers[i].size();
        for (const auto& row : out.table.rows) {
          width[i] = std::max(width[i], row[i].size());
        }
      }
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          os << (i ? "  " : "") << cells[i];
          if (i + 1 < cells.size()) {
            os << std::string(width[i] - cells[i].size(), ' ');
          }
        }
        os << "\n";
      };
      line(out.table.headers);
      for (const auto& row : out.table.rows) line(row);
      for (const auto& note : out.notes) os << "# " << note << "\n";
      if (!out.ok) os << "# verification FAILED\n";
      break;
    }
  }
  return os.str();
}

}  // namespace

NRange parse_n_range(const std::string& text) {
  auto parse_one = [&](const std::string& s) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw UsageError("bad n range '" + text + "'");
    }
    if (used != s.size()) throw UsageError("bad n range '" + text + "'");
    return v;
  };
  NRange r;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    r.first = parse_one(text.substr(0, dots));
    r.last = parse_one(text.substr(dots + 2));
  } else {
    r.first = r.last = parse_one(text);
  }
  if (r.first < 1 || r.last < r.first) {
    throw UsageError("n range '" + text + "' must satisfy 1 <= a <= b");
  }
  return r;
}

RunConfig parse_command_line(const std::vector<std::string>& args) {
  RunConfig config;
  CLI::App app{"Exact error analysis of floating-point powers and products",
               "rnpow"};
  app.require_subcommand(1);

  std::string n_text, mode_text = "even", format_text = "table";
  std::string checkpoint_text;
  const std::map<std::string, OutputFormat> formats{
      {"table", OutputFormat::Table},
      {"csv", OutputFormat::Csv},
      {"json", OutputFormat::Json}};

  auto common = [&](CLI::App* sub, bool needs_n, bool has_mode) {
    sub->add_option("-p,--p", config.p, "precision in bits")
        ->required()
        ->check(CLI::Range(Precision::kMin, Precision::kMax));
    auto* n_opt = sub->add_option("-n,--n", n_text, "n or inclusive range a..b");
    if (needs_n) n_opt->required();
    if (has_mode) {
      sub->add_option("--mode", mode_text, "even | away")
          ->check(CLI::IsMember({"even", "away", "ties-even", "ties-away"}));
    }
    sub->add_option("--format", format_text, "table | csv | json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--digits", config.digits, "decimal digits shown")
        ->check(CLI::Range(1, 1000));
  };

  auto* search = app.add_subcommand("search", "exhaustive worst-case search over [1, 2)");
  common(search, true, true);
  search->add_option("--jobs", config.jobs, "worker threads (0 = all cores)");
  search->add_option("--checkpoint", checkpoint_text, "resumable state file");
  search->add_option("--k-begin", config.k_begin, "first significand offset");
  search->add_option("--k-end", config.k_end, "one past the last offset");
  search->add_flag("--allow-large-p", config.allow_large_p,
                   "permit full scans above p = 26");
  search->add_flag("--progress", config.progress, "report progress on stderr");

  auto* spot = app.add_subcommand("spot", "error of naive_power at one x");
  common(spot, true, true);
  spot->add_option("--x", config.x, "x as a/b, a/2^k or a*2^k")->required();

  auto* bounds = app.add_subcommand("bounds", "gamma, psi and (n-1)u bounds, n_max");
  common(bounds, false, false);

  auto* adversary = app.add_subcommand("adversary", "adversarial product sequences");
  common(adversary, true, true);

  auto* verify = app.add_subcommand("verify", "exact checks of the supporting inequalities");
  verify->add_option("--check", config.checks, "check to run (repeatable)")
      ->check(CLI::IsMember(all_checks()));
  verify->add_flag("--quick", config.quick, "smaller grids");
  verify->add_option("--format", format_text, "table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  auto* regress_cmd = app.add_subcommand("regress", "rerun golden scenarios");
  std::string golden_text;
  regress_cmd->add_option("--golden", golden_text, "golden directory")->required();
  regress_cmd->add_flag("--update", config.update, "rewrite the golden files");
  regress_cmd->add_option("--jobs", config.jobs, "worker threads for searches");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw UsageError(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (search->parsed()) config.command = Command::Search;
  if (spot->parsed()) config.command = Command::Spot;
  if (bounds->parsed()) config.command = Command::Bounds;
  if (adversary->parsed()) config.command = Command::Adversary;
  if (verify->parsed()) config.command = Command::Verify;
  if (regress_cmd->parsed()) {
    config.command = Command::Regress;
    config.golden_dir = golden_text;
  }
  if (!n_text.empty()) config.n = parse_n_range(n_text);
  config.mode = parse_rounding_mode(mode_text);
  config.format = formats.at(format_text);
  if (!checkpoint_text.empty()) config.checkpoint = checkpoint_text;
  return config;
}

std::vector<std::string> canonical_invocation(const RunConfig& config) {
  std::vector<std::string> args{command_name(config.command)};
  auto add = [&](const std::string& flag, const std::string& value) {
    args.push_back(flag);
    args.push_back(value);
  };
  switch (config.command) {
    case Command::Search:
    case Command::Spot:
    case Command::Adversary:
      add("--p", std::to_string(config.p));
      if (config.command == Command::Spot) add("--x", config.x);
      add("--n", range_string(*config.n));
      add("--mode", std::string(to_string(config.mode)));
      add("--digits", std::to_string(config.digits));
      if (config.command == Command::Search) {
        if (config.k_begin) add("--k-begin", std::to_string(*config.k_begin));
        if (config.k_end) add("--k-end", std::to_string(*config.k_end));
        if (config.allow_large_p) args.push_back("--allow-large-p");
      }
      break;
    case Command::Bounds:
      add("--p", std::to_string(config.p));
      if (config.n) add("--n", range_string(*config.n));
      add("--digits", std::to_string(config.digits));
      break;
    case Command::Verify:
      for (const auto& c : config.checks) add("--check", c);
      if (config.quick) args.push_back("--quick");
      break;
    case Command::Regress:
      add("--golden", config.golden_dir.string());
      break;
  }
  return args;
}

RunResult run(const RunConfig& config) {
  if (config.command == Command::Regress) {
    return regress(config.golden_dir, config.update, config.jobs);
  }
  CommandOutput out;
  switch (config.command) {
    case Command::Search:
      out = run_search(config);
      break;
    case Command::Spot:
      out = run_spot(config);
      break;
    case Command::Bounds:
      out = run_bounds(config);
      break;
    case Command::Adversary:
      out = run_adversary(config);
      break;
    case Command::Verify:
      out = run_verify(config);
      break;
    case Command::Regress:
      break;
  }
  return {out.ok ? 0 : 1, render(out, config)};
}

RunResult run_command_line(const std::vector<std::string>& args) {
  try {
    return run(parse_command_line(args));
  } catch (const GuardViolation& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
}

std::vector<GoldenScenario> default_golden_scenarios() {
  std::vector<GoldenScenario> s{
      {"search_p8", {"search", "--p", "8", "--n", "3..8"}},
      {"search_p9", {"search", "--p", "9", "--n", "6..11"}},
      {"bounds_p8", {"bounds", "--p", "8", "--n", "3..8"}},
      {"bounds_p9", {"bounds", "--p", "9", "--n", "6..11"}},
      // Neighbourhoods of +-2^12 significands around the binary32 maxima.
      {"binary32_n6_neighbourhood",
       {"search", "--p", "24", "--n", "6", "--k-begin", "81104", "--k-end",
        "89297"}},
      {"binary32_n10_neighbourhood",
       {"search", "--p", "24", "--n", "10", "--k-begin", "36574", "--k-end",
        "44767"}},
      {"spot_binary32_n6",
       {"spot", "--p", "24", "--x", "8473808/2^23", "--n", "6", "--digits", "15"}},
      {"spot_binary32_n10",
       {"spot", "--p", "24", "--x", "8429278/2^23", "--n", "10", "--digits", "15"}},
      {"spot_binary64_n6",
       {"spot", "--p", "53", "--x", "4507062722867963/2^52", "--n", "6",
        "--digits", "15"}},
      {"spot_binary64_n10",
       {"spot", "--p", "53", "--x", "4503796447992526/2^52", "--n", "10",
        "--digits", "15"}},
      {"spot_binary128_n6",
       {"spot", "--p", "113", "--x", "5192324351407105984705482084151108/2^112",
        "--n", "6", "--digits", "15"}},
      {"nmax_binary32", {"bounds", "--p", "24", "--n", "2088..2089"}},
      {"nmax_binary64", {"bounds", "--p", "53"}},
      {"nmax_binary128", {"bounds", "--p", "113"}},
  };
  for (const char* p : {"24", "53", "113"}) {
    for (const char* n : {"10", "100"}) {
      s.push_back({std::string("adversary_p") + p + "_n" + n,
                   {"adversary", "--p", p, "--n", n, "--digits", "24"}});
    }
  }
  return s;
}

RunResult regress(const std::filesystem::path& golden_dir, bool update,
                  unsigned jobs) {
  namespace fs = std::filesystem;
  RunResult result;
  std::ostringstream log;
  if (update) {
    fs::create_directories(golden_dir);
    for (const GoldenScenario& scenario : default_golden_scenarios()) {
      RunConfig config = parse_command_line(scenario.args);
      config.format = OutputFormat::Json;
      config.jobs = jobs;
      RunResult r = run(config);
      std::ofstream file(golden_dir / (scenario.name + ".json"), std::ios::binary);
      file << r.output;
      log << "WROTE " << scenario.name << "\n";
    }
    result.output = log.str();
    return result;
  }

  std::vector<fs::path> files;
  if (fs::is_directory(golden_dir)) {
    for (const auto& entry : fs::directory_iterator(golden_dir)) {
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    return {1, "FAIL no golden files in " + golden_dir.string() + "\n"};
  }
  int failed = 0;
  for (const fs::path& path : files) {
    const std::string name = path.stem().string();
    std::ifstream file(path, std::ios::binary);
    std::stringstream buffer;
    buffer << file.rdbuf();
    const std::string expected = buffer.str();
    std::string actual;
    try {
      const Json doc = Json::parse(expected);
      RunConfig config =
          parse_command_line(doc.at("invocation").get<std::vector<std::string>>());
      config.format = OutputFormat::Json;
      config.jobs = jobs;
      actual = run(config).output;
    } catch (const std::exception& e) {
      ++failed;
      log << "FAIL " << name << ": " << e.what() << "\n";
      continue;
    }
    if (actual == expected) {
      log << "PASS " << name << "\n";
      continue;
    }
    ++failed;
    std::istringstream exp_lines(expected), act_lines(actual);
    std::string e_line, a_line;
    int line_no = 0;
    while (true) {
      ++line_no;
      const bool e_ok = static_cast<bool>(std::getline(exp_lines, e_line));
      const bool a_ok = static_cast<bool>(std::getline(act_lines, a_line));
      if (!e_ok) e_line = "<eof>";
      if (!a_ok) a_line = "<eof>";
      if (e_line != a_line || (!e_ok && !a_ok)) break;
    }
    log << "FAIL " << name << ": line " << line_no << "\n"
        << "  expected: " << e_line << "\n"
        << "  actual:   " << a_line << "\n";
  }
  log << (files.size() - static_cast<std::size_t>(failed)) << "/" << files.size()
      << " golden scenarios match\n";
  result.status = failed == 0 ? 0 : 1;
  result.output = log.str();
  return result;
}

}  // namespace rnpow::cli
