#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "univalence/criteria.hpp"
#include "univalence/rational.hpp"
#include "univalence/verifier.hpp"

namespace py = pybind11;
using namespace univalence;

namespace {

py::dict report_dict(const CriterionReport& r) {
  py::dict d;
  d["criterion"] = r.criterion_name;
  d["threshold"] = r.threshold;
  d["attained"] = r.attained;
  d["margin"] = r.margin;
  d["passed"] = r.passed;
  d["inputs"] = r.inputs;
  d["notes"] = r.notes;
  return d;
}

std::vector<BesselParams> bessel_list(const std::vector<double>& vs, double b, cplx d) {
  std::vector<BesselParams> out;
  for (const double v : vs) out.emplace_back(v, b, d);
  return out;
}

template <typename F>
py::object defined_or_none(F&& f) {
  try {
    return py::float_(f());
  } catch (const DomainError&) {
    return py::none();
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Univalence verification core";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_ValueError);
  py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<BesselParams>(m, "BesselParams")
      .def(py::init<double, double, cplx>(), py::arg("v"), py::arg("b") = 1.0,
           py::arg("d") = cplx(1.0))
      .def_property_readonly("v", &BesselParams::v)
      .def_property_readonly("b", &BesselParams::b)
      .def_property_readonly("d", &BesselParams::d)
      .def_property_readonly("k", &BesselParams::k);

  py::class_<OperatorParams>(m, "OperatorParams")
      .def(py::init<double, double, int>(), py::arg("lam") = 0.0, py::arg("gamma") = 0.0,
           py::arg("n") = 0)
      .def_property_readonly("lam", &OperatorParams::lambda)
      .def_property_readonly("gamma", &OperatorParams::gamma_order)
      .def_property_readonly("n", &OperatorParams::n);

  py::class_<NormalizedSeries>(m, "NormalizedSeries")
      .def(py::init([](std::vector<cplx> c) { return NormalizedSeries(std::move(c)); }))
      .def_property_readonly("order", &NormalizedSeries::order)
      .def_property_readonly("coefficients",
                             [](const NormalizedSeries& f) {
                               return std::vector<cplx>(f.coefficients().begin(),
                                                        f.coefficients().end());
                             })
      .def("__call__", [](const NormalizedSeries& f, cplx z) { return evaluate(f, z).value; })
      .def("derivatives", [](const NormalizedSeries& f, cplx z) {
        const EvaluationResult e = evaluate(f, z);
        return py::make_tuple(e.value, e.first_derivative, e.second_derivative);
      });

  m.def("phi_series", &phi_series, py::arg("bessel"), py::arg("order") = kDefaultTruncation);
  m.def("operator_phi", &operator_phi, py::arg("bessel"), py::arg("op"),
        py::arg("order") = kDefaultTruncation);
  m.def("apply_operator", &apply_operator, py::arg("f"), py::arg("op"));
  m.def("multiplier", &multiplier, py::arg("m"), py::arg("op"));
  m.def("multiplier_pochhammer", &multiplier_pochhammer, py::arg("m"), py::arg("op"));
  m.def("gamma", &univalence::gamma, py::arg("x"));
  m.def(
      "closed_form",
      [](const std::string& family, double v, cplx z) {
        if (family != "J" && family != "I") throw ConfigError("family must be 'J' or 'I'");
        return closed_form_value(family == "J" ? BesselFamily::J : BesselFamily::I, v, z);
      },
      py::arg("family"), py::arg("v"), py::arg("z"));

  m.def(
      "bounds",
      [](const BesselParams& bessel, const OperatorParams& op, int m_index) {
        const Admissibility a = check_admissible(bessel, op, m_index);
        if (!a) throw DomainError("inadmissible parameters: " + a.reason);
        const BoundQuantities& q = a.params->bounds;
        py::dict d;
        d["ratio_lower"] = defined_or_none([&] { return ratio_lower_bound(q); });
        d["ratio_upper"] = defined_or_none([&] { return ratio_upper_bound(q); });
        d["diff"] = defined_or_none([&] { return diff_bound(q); });
        d["logderiv"] = defined_or_none([&] { return logderiv_bound(q); });
        d["deriv_lower"] = defined_or_none([&] { return deriv_lower_bound(q); });
        d["deriv_upper"] = defined_or_none([&] { return deriv_upper_bound(q); });
        d["second_deriv"] = defined_or_none([&] { return second_deriv_bound(q); });
        d["exponential_radius"] = defined_or_none([&] { return exponential_radius(q); });
        return d;
      },
      py::arg("bessel"), py::arg("op"), py::arg("m_index") = 1);

  m.def(
      "logderiv_bound_exact",
      [](const std::string& k, const std::string& abs_d, const std::string& lam,
         const std::string& gamma, int n, int m_index) {
        const auto q = compute_quantities<Rational>(parse_rational(k), parse_rational(abs_d),
                                                    parse_rational(lam), parse_rational(gamma), n,
                                                    m_index);
        return to_string(logderiv_bound(q));
      },
      py::arg("k"), py::arg("abs_d"), py::arg("lam") = "1", py::arg("gamma") = "0",
      py::arg("n") = 0, py::arg("m_index") = 1);

  m.def(
      "criterion_H",
      [](const std::vector<double>& vs, double b, cplx d, const OperatorParams& op,
         std::vector<cplx> mus, cplx eta, cplx c, int m_index) {
        if (mus.size() == 1) mus.assign(vs.size(), mus.front());
        return report_dict(criterion_H({bessel_list(vs, b, d), op, mus, eta, c, m_index}));
      },
      py::arg("vs"), py::arg("b") = 1.0, py::arg("d") = cplx(1.0),
      py::arg("op") = OperatorParams(0, 0, 0), py::arg("mus") = std::vector<cplx>{1.0},
      py::arg("eta") = cplx(1.0), py::arg("c") = cplx(0.0), py::arg("m_index") = 1);
  m.def(
      "criterion_F",
      [](const std::vector<double>& vs, double b, cplx d, const OperatorParams& op, cplx mu,
         int m_index) { return report_dict(criterion_F({bessel_list(vs, b, d), op, mu, m_index})); },
      py::arg("vs"), py::arg("b") = 1.0, py::arg("d") = cplx(1.0),
      py::arg("op") = OperatorParams(0, 0, 0), py::arg("mu") = cplx(1.0), py::arg("m_index") = 1);
  m.def(
      "criterion_G",
      [](const BesselParams& bessel, const OperatorParams& op, cplx zeta, int m_index) {
        return report_dict(criterion_G({bessel, op, zeta, m_index}));
      },
      py::arg("bessel"), py::arg("op") = OperatorParams(0, 0, 0), py::arg("zeta") = cplx(1.0),
      py::arg("m_index") = 1);

  m.def(
      "integral_H",
      [](const std::vector<double>& vs, double b, cplx d, const OperatorParams& op,
         std::vector<cplx> mus, cplx eta, cplx z) {
        if (mus.size() == 1) mus.assign(vs.size(), mus.front());
        return integral_H({bessel_list(vs, b, d), op, mus, eta, 0.0, 1}, z).value;
      },
      py::arg("vs"), py::arg("b"), py::arg("d"), py::arg("op"), py::arg("mus"), py::arg("eta"),
      py::arg("z"));
  m.def(
      "integral_F",
      [](const std::vector<double>& vs, double b, cplx d, const OperatorParams& op, cplx mu,
         cplx z) { return integral_F({bessel_list(vs, b, d), op, mu, 1}, z).value; },
      py::arg("vs"), py::arg("b"), py::arg("d"), py::arg("op"), py::arg("mu"), py::arg("z"));
  m.def(
      "integral_G",
      [](const BesselParams& bessel, const OperatorParams& op, cplx zeta, cplx z) {
        return integral_G({bessel, op, zeta, 1}, z).value;
      },
      py::arg("bessel"), py::arg("op"), py::arg("zeta"), py::arg("z"));

  m.def(
      "empirical_injectivity",
      [](const std::function<cplx(cplx)>& f, int radii, int angles, double max_radius,
         std::uint64_t pair_budget, std::uint64_t seed) {
        const InjectivityReport r =
            empirical_injectivity(f, DiskGrid{radii, angles, max_radius}, pair_budget, seed);
        py::dict d;
        d["min_ratio"] = r.min_ratio;
        d["z1"] = r.z1;
        d["z2"] = r.z2;
        d["pairs_checked"] = r.pairs_checked;
        d["collision"] = r.collision;
        return d;
      },
      py::arg("f"), py::arg("radii") = 32, py::arg("angles") = 64, py::arg("max_radius") = 0.999,
      py::arg("pair_budget") = 2'000'000, py::arg("seed") = 42);

  m.def(
      "run",
      [](const std::string& command, const std::map<std::string, std::string>& options,
         const std::string& format) {
        RunConfig cfg;
        cfg.command = command;
        for (const auto& [key, value] : options) set_option(cfg, key, {value});
        const Report report = run_command(cfg);
        std::ostringstream out;
        if (format == "json") {
          write_json(report, out);
        } else {
          write_csv(report, out);
        }
        return py::make_tuple(out.str(), report.all_passed());
      },
      "Run a verifier command; returns (report text, all rows passed).", py::arg("command"),
      py::arg("options") = std::map<std::string, std::string>{}, py::arg("format") = "csv");
}
