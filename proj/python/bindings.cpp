#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "genusone/canonical.hpp"
#include "genusone/characteristics.hpp"
#include "genusone/cli.hpp"
#include "genusone/field.hpp"
#include "genusone/jensen.hpp"
#include "genusone/kernels.hpp"
#include "genusone/measures.hpp"
#include "genusone/suites.hpp"
#include "genusone/transforms.hpp"

namespace py = pybind11;
using namespace genusone;

namespace {

PlanarMeasure measure_from_atoms(const std::vector<std::pair<Complex, double>>& atoms) {
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (const auto& [z, m] : atoms) out.push_back({z, m});
  return PlanarMeasure(std::move(out));
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["suite"] = r.suite;
  d["check"] = r.check;
  d["fixture"] = r.fixture;
  d["kind"] = r.kind;
  d["status"] = status_name(r.status);
  d["abscissa"] = r.abscissa;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["max_stat"] = r.max_stat;
  d["median_stat"] = r.median_stat;
  d["constant"] = r.constant;
  d["constant_coarse"] = r.constant_coarse;
  d["stability"] = r.stability;
  d["tolerance"] = r.tolerance;
  d["note"] = r.note;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Genus-one canonical integrals, characteristics and verification suites";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ArithmeticError);

  m.def("kernel_H", &kernel_H, py::arg("z"));
  m.def("kernel_K1", &kernel_K1, py::arg("z"), py::arg("t"), py::arg("R"));
  m.def("kernel_K2", &kernel_K2, py::arg("z"), py::arg("R"), py::arg("phi"));
  m.def("kernel_K3", &kernel_K3, py::arg("z"), py::arg("zeta"), py::arg("R"));
  m.def("closed_form_K1_integral", &closed_form_K1_integral, py::arg("t"), py::arg("r"), py::arg("R"));
  m.def("closed_form_K2_integral", &closed_form_K2_integral, py::arg("r"), py::arg("R"), py::arg("phi"));
  m.def("closed_form_K3_integral", &closed_form_K3_integral, py::arg("zeta"), py::arg("r"), py::arg("R"));

  py::class_<PlanarMeasure>(m, "Measure")
      .def(py::init(&measure_from_atoms), py::arg("atoms"),
           "Atomic measure from a list of (point, mass) pairs.")
      .def_static("from_json", &measure_from_json, py::arg("text"))
      .def("to_json", [](const PlanarMeasure& mu) { return measure_to_json(mu); })
      .def_property_readonly("genus_norm", &PlanarMeasure::genus_norm)
      .def_property_readonly("genus_one", &PlanarMeasure::genus_one)
      .def_property_readonly("pv_admissible", &PlanarMeasure::pv_admissible)
      .def_property_readonly("total_mass", &PlanarMeasure::total_mass)
      .def_property_readonly("atoms", [](const PlanarMeasure& mu) {
        std::vector<std::pair<Complex, double>> out;
        for (const auto& a : mu.atoms()) out.emplace_back(a.z, a.mass);
        return out;
      })
      .def("counting", [](const PlanarMeasure& mu, double r) { return counting_mu(mu, r); }, py::arg("r"))
      .def("counting_levin_tsuji", [](const PlanarMeasure& mu, double r) { return counting_levin_tsuji(mu, r); },
           py::arg("r"))
      .def("reflect_to_lower", &reflect_to_lower);

  m.def("eval_canonical", [](const PlanarMeasure& mu, Complex z) { return eval_canonical(mu, z); },
        py::arg("measure"), py::arg("z"));
  m.def("eval_canonical_pv", [](const PlanarMeasure& mu, Complex z) { return eval_canonical_pv(mu, z); },
        py::arg("measure"), py::arg("z"));

  py::class_<UpFixture>(m, "UpFixture")
      .def(py::init(&fixture_up), py::arg("p"), py::arg("A") = 1e3)
      .def_readonly("p", &UpFixture::p)
      .def_readonly("c_p", &UpFixture::c_p)
      .def_readonly("A", &UpFixture::A)
      .def("__call__", &UpFixture::operator(), py::arg("z"))
      .def("truncation_bound", &UpFixture::truncation_bound, py::arg("r"))
      .def("truncated_measure", &UpFixture::truncated_measure);

  py::class_<SubharmonicField>(m, "Field")
      .def(py::init<std::string, SubharmonicField::Evaluator, std::vector<Complex>>(), py::arg("name"),
           py::arg("evaluator"), py::arg("singular") = std::vector<Complex>{})
      .def_static("from_measure",
                  [](const PlanarMeasure& mu) { return SubharmonicField::from_measure(mu); }, py::arg("measure"))
      .def("__call__", &SubharmonicField::operator(), py::arg("z"))
      .def_property_readonly("name", &SubharmonicField::name);

  m.def("max_modulus", [](const SubharmonicField& u, double r) { return max_modulus(u, r); }, py::arg("u"),
        py::arg("r"));
  m.def("nevanlinna_T", [](const SubharmonicField& u, double r) { return nevanlinna_T(u, r); }, py::arg("u"),
        py::arg("r"));
  m.def("tsuji", [](const SubharmonicField& u, double r) {
    const TsujiPair p = tsuji_characteristics(u, r);
    return std::make_pair(p.T, p.m);
  }, py::arg("u"), py::arg("r"), "Tsuji characteristic and proximity function as (T, m).");
  m.def("levin", [](const SubharmonicField& u, const PlanarMeasure& mu, double R) {
    return std::make_pair(levin_lhs(u, R), levin_rhs(mu, R));
  }, py::arg("u"), py::arg("measure"), py::arg("R"));
  m.def("carleman", [](const SubharmonicField& u, const PlanarMeasure& mu, double R) {
    return std::make_pair(carleman_lhs(u, R), carleman_rhs(mu, R));
  }, py::arg("u"), py::arg("measure"), py::arg("R"));

  m.def("jensen_circle_potential", [](int n, double rho, Complex z) {
    return potential_V(JensenMeasure::uniform_circle(n, rho), z);
  }, py::arg("n"), py::arg("rho"), py::arg("z"));

  m.def("hilbert_inputs", &named_inputs);
  m.def("hilbert_pair", [](const std::string& name, int intervals, bool tail_extension) {
    HilbertOptions opt;
    opt.intervals = intervals;
    opt.tail_extension = tail_extension;
    const HilbertPair p = hilbert_pair(named_input(name), opt);
    py::dict d;
    d["t"] = p.t;
    d["h"] = p.h;
    d["g"] = p.g;
    d["err"] = p.err;
    d["certified"] = p.certified;
    d["convention"] = p.convention;
    return d;
  }, py::arg("name"), py::arg("intervals") = 4096,
        py::arg("tail_extension") = false);

  m.def("suite_names", &suite_names);
  m.def("run_suite", [](const std::string& name, int per_decade, std::vector<std::string> fixtures,
                        int workers, std::uint64_t seed) {
    SuiteConfig cfg;
    cfg.per_decade = per_decade;
    cfg.fixtures = std::move(fixtures);
    cfg.workers = workers;
    cfg.seed = seed;
    std::vector<VerificationReport> reports;
    {
      py::gil_scoped_release release;
      reports = run_suite(name, cfg);
    }
    py::list out;
    for (const auto& r : reports) out.append(report_dict(r));
    return out;
  }, py::arg("name"), py::arg("per_decade") = 16, py::arg("fixtures") = std::vector<std::string>{},
        py::arg("workers") = 1, py::arg("seed") = 1);
}
