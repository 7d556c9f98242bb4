#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rnpow/adversary.hpp"
#include "rnpow/bounds.hpp"
#include "rnpow/checks.hpp"
#include "rnpow/cli.hpp"
#include "rnpow/search.hpp"

namespace py = pybind11;
using namespace rnpow;

namespace {

// Exact values cross the boundary as fractions.Fraction.
py::object fraction(const ExactValue& v) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_fraction_string(v));
}

// Accepts int, Fraction or a string such as "8473808/2^23".
ExactValue exact(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return parse_rational(obj.cast<std::string>());
  return parse_rational(py::str(obj).cast<std::string>());
}

FpNumber representable(const py::handle& obj, int p) {
  const ExactValue v = exact(obj);
  FpNumber x = round_nearest(v, Precision(p));
  if (to_rational(x) != v) {
    throw py::value_error(to_fraction_string(v) + " is not a " + std::to_string(p) +
                          "-bit floating-point number");
  }
  return x;
}

RoundingMode mode_of(const std::string& s) { return parse_rounding_mode(s); }

py::list directions(const std::vector<RoundingDirection>& dirs) {
  py::list out;
  for (RoundingDirection d : dirs) out.append(std::string(to_string(d)));
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["passed"] = r.passed;
  d["checked"] = r.checked;
  d["notes"] = r.notes;
  d["failures"] = r.failures;
  return d;
}

}  // namespace

PYBIND11_MODULE(_rnpow, m) {
  m.doc() = "Exact error analysis of floating-point powers and products";

  m.def(
      "round_nearest",
      [](const py::object& t, int p, const std::string& mode) {
        return fraction(to_rational(round_nearest(exact(t), Precision(p), mode_of(mode))));
      },
      py::arg("t"), py::arg("p"), py::arg("mode") = "even");

  m.def(
      "fp_mul",
      [](const py::object& a, const py::object& b, int p, const std::string& mode) {
        const RoundedProduct r =
            fp_mul_directed(representable(a, p), representable(b, p), mode_of(mode));
        return py::make_tuple(fraction(to_rational(r.value)),
                              std::string(to_string(r.direction)));
      },
      py::arg("a"), py::arg("b"), py::arg("p"), py::arg("mode") = "even");

  m.def(
      "naive_power",
      [](const py::object& x, int p, std::int64_t n, const std::string& mode) {
        const PowerTrace t = naive_power(representable(x, p), n, mode_of(mode));
        std::vector<RoundingDirection> dirs;
        py::list values;
        for (const PowerStep& s : t.steps) {
          dirs.push_back(s.direction);
          values.append(fraction(to_rational(s.value)));
        }
        py::dict d;
        d["final"] = fraction(to_rational(t.final));
        d["steps"] = values;
        d["directions"] = directions(dirs);
        return d;
      },
      py::arg("x"), py::arg("p"), py::arg("n"), py::arg("mode") = "even");

  m.def(
      "spot_error",
      [](const py::object& x, int p, std::int64_t n, const std::string& mode) {
        return fraction(spot_error(representable(x, p), n, mode_of(mode)).value());
      },
      py::arg("x"), py::arg("p"), py::arg("n"), py::arg("mode") = "even",
      "Relative error of the naive power in units of 2^-p.");

  m.def(
      "exhaustive_max_error",
      [](int p, std::int64_t n, const std::string& mode, unsigned jobs,
         std::optional<std::uint64_t> k_begin, std::optional<std::uint64_t> k_end) {
        SearchOptions o;
        o.jobs = jobs;
        o.k_begin = k_begin;
        o.k_end = k_end;
        SearchReport r;
        {
          py::gil_scoped_release release;
          r = exhaustive_max_error(Precision(p), n, mode_of(mode), o);
        }
        py::dict d;
        d["max_error"] = fraction(r.max_error.value());
        d["argmax_k"] = r.argmax_k;
        d["argmax_x"] = fraction(to_rational(r.argmax_x()));
        d["scanned"] = r.scanned;
        d["violations"] = r.violations;
        return d;
      },
      py::arg("p"), py::arg("n"), py::arg("mode") = "even", py::arg("jobs") = 0,
      py::arg("k_begin") = py::none(), py::arg("k_end") = py::none());

  m.def(
      "bounds",
      [](int p, std::int64_t n) {
        const BoundSet b = bound_set(Precision(p), n);
        py::dict d;
        d["u"] = fraction(b.u);
        d["simple"] = fraction(b.simple);
        d["psi"] = fraction(b.psi);
        d["gamma"] = fraction(b.gamma);
        d["refined_unit"] = fraction(b.refined_unit);
        return d;
      },
      py::arg("p"), py::arg("n"));

  m.def("n_max", [](int p) { return n_max(Precision(p)); }, py::arg("p"));

  m.def(
      "build_sequence",
      [](int p, std::int64_t n, const std::string& mode) {
        const AdversarySequence s = build_sequence(Precision(p), n, mode_of(mode));
        const SequenceCheck c = verify_sequence(s);
        py::list factors;
        for (const FpNumber& f : s.factors) factors.append(fraction(to_rational(f)));
        py::dict d;
        d["factors"] = factors;
        d["achieved_error"] = fraction(s.achieved_error.value());
        d["gap"] = fraction(c.gap);
        d["verified"] = c.report.passed;
        return d;
      },
      py::arg("p"), py::arg("n"), py::arg("mode") = "even");

  m.def(
      "verify",
      [](const std::string& check, bool quick) {
        cli::RunConfig config;
        config.command = cli::Command::Verify;
        config.checks = {check};
        config.quick = quick;
        config.format = cli::OutputFormat::Json;
        const cli::RunResult r = cli::run(config);
        return py::module_::import("json").attr("loads")(r.output);
      },
      py::arg("check"), py::arg("quick") = true);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        const cli::RunResult r = cli::run_command_line(args);
        return py::make_tuple(r.status, r.output);
      },
      py::arg("args"));
}
