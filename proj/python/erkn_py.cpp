#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "erkn/conditions.hpp"
#include "erkn/harness.hpp"
#include "erkn/integrator.hpp"
#include "erkn/phi.hpp"
#include "erkn/resonance.hpp"
#include "erkn/scheme.hpp"
#include "erkn/system.hpp"

namespace py = pybind11;
using namespace erkn;

namespace {

State make_state(std::vector<double> q, std::vector<double> p) {
    return State{std::move(q), std::move(p)};
}

OscillatorySystem make_system(double epsilon, const std::vector<std::pair<double, std::size_t>>& blocks,
                              const py::function& potential, const py::function& gradient) {
    std::vector<FrequencyBlock> fb;
    for (const auto& [lambda, dim] : blocks) fb.push_back({lambda, dim});
    PotentialFn u = [potential](std::span<const double> q) {
        py::gil_scoped_acquire gil;
        return potential(std::vector<double>(q.begin(), q.end())).cast<double>();
    };
    GradientFn g = [gradient](std::span<const double> q, std::span<double> out) {
        py::gil_scoped_acquire gil;
        auto v = gradient(std::vector<double>(q.begin(), q.end())).cast<std::vector<double>>();
        if (v.size() != out.size()) throw ShapeError("gradient returned wrong length");
        std::copy(v.begin(), v.end(), out.begin());
    };
    return OscillatorySystem(epsilon, std::move(fb), std::move(u), std::move(g));
}

}  // namespace

PYBIND11_MODULE(_erkn, m) {
    m.doc() = "Explicit ERKN integrators for multi-frequency oscillatory systems";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UnsupportedOrderError>(m, "UnsupportedOrderError", PyExc_ValueError);
    py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<IndexError>(m, "IndexError", PyExc_IndexError);
    py::register_exception<LookupError>(m, "LookupError", PyExc_KeyError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
    py::register_exception<SingularityError>(m, "SingularityError", PyExc_ZeroDivisionError);
    py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_ArithmeticError);

    m.def("phi", &phi, py::arg("j"), py::arg("xi"));
    m.def("sinc", &sinc, py::arg("x"));

    py::class_<ErknScheme>(m, "Scheme")
        .def(py::init([](std::string name, double c1, CoefficientFn b1, CoefficientFn bbar1) {
                 return ErknScheme{std::move(name), c1, std::move(b1), std::move(bbar1)};
             }),
             py::arg("name"), py::arg("c1"), py::arg("b1"), py::arg("bbar1"))
        .def_readonly("name", &ErknScheme::name)
        .def_readonly("c1", &ErknScheme::c1)
        .def("b1", [](const ErknScheme& s, double xi) { return s.b1(xi); })
        .def("bbar1", [](const ErknScheme& s, double xi) { return s.bbar1(xi); })
        .def("sigma", [](const ErknScheme& s, double xi) { return sigma(s, xi); })
        .def("__repr__", [](const ErknScheme& s) { return "<Scheme " + s.name + ">"; });
    m.def("builtin_scheme", [](const std::string& name) { return builtin_scheme(name); });
    m.def("builtin_scheme_names", &builtin_scheme_names);

    py::class_<ConditionReport>(m, "ConditionReport")
        .def_readonly("name", &ConditionReport::name)
        .def_readonly("max_residual", &ConditionReport::max_residual)
        .def_readonly("grid", &ConditionReport::grid)
        .def_readonly("tolerance", &ConditionReport::tolerance)
        .def_readonly("passed", &ConditionReport::passed)
        .def_readonly("note", &ConditionReport::note);
    m.def("check_order2", &check_order2);
    m.def("check_symmetry", &check_symmetry);
    m.def("check_symplecticity", &check_symplecticity);
    m.def("check_newcond", &check_newcond);
    m.def("coefficient_bound_ratio", &coefficient_bound_ratio);

    py::class_<SchemeProperties>(m, "SchemeProperties")
        .def_readonly("order2", &SchemeProperties::order2)
        .def_readonly("symmetric", &SchemeProperties::symmetric)
        .def_readonly("symplectic", &SchemeProperties::symplectic)
        .def_readonly("newcond", &SchemeProperties::newcond);
    py::class_<CheckSummary>(m, "CheckSummary")
        .def_readonly("scheme", &CheckSummary::scheme)
        .def_readonly("reports", &CheckSummary::reports)
        .def_readonly("expected", &CheckSummary::expected)
        .def_readonly("matches_expected", &CheckSummary::matches_expected)
        .def("__str__", [](const CheckSummary& s) {
            std::ostringstream os;
            print_checks(s, os);
            return os.str();
        });
    m.def("run_checks", py::overload_cast<const std::string&>(&run_checks), py::arg("scheme"));
    m.def("run_checks", py::overload_cast<const ErknScheme&>(&run_checks), py::arg("scheme"));

    py::class_<ResonanceScan>(m, "ResonanceScan")
        .def_readonly("lambda_", &ResonanceScan::lambda)
        .def_readonly("module_vectors", &ResonanceScan::module_vectors)
        .def_readonly("representatives", &ResonanceScan::representatives)
        .def_readonly("N", &ResonanceScan::N)
        .def_readonly("tol", &ResonanceScan::tol);
    m.def("resonance_scan",
          [](const std::vector<double>& lambda, int N, std::optional<double> tol) {
              return resonance_scan(lambda, N, tol ? *tol : default_resonance_tol(lambda));
          },
          py::arg("lambda_"), py::arg("N"), py::arg("tol") = py::none());
    m.def("nonresonance_margin",
          [](double h, double eps, const std::vector<double>& lambda, int N,
             const ResonanceScan& scan) { return nonresonance_margin(h, eps, lambda, N, scan); },
          py::arg("h"), py::arg("epsilon"), py::arg("lambda_"), py::arg("N"), py::arg("scan"));

    py::class_<State>(m, "State")
        .def(py::init(&make_state), py::arg("q"), py::arg("p"))
        .def_readwrite("q", &State::q)
        .def_readwrite("p", &State::p)
        .def(py::self == py::self)
        .def("__repr__", [](const State& s) {
            return "<State dim=" + std::to_string(s.q.size()) + ">";
        });

    py::class_<OscillatorySystem>(m, "OscillatorySystem")
        .def(py::init(&make_system), py::arg("epsilon"), py::arg("blocks"), py::arg("potential"),
             py::arg("gradient"),
             "blocks is a list of (lambda, dim); block 0 must have lambda = 0.")
        .def_property_readonly("epsilon", &OscillatorySystem::epsilon)
        .def_property_readonly("dimension", &OscillatorySystem::dimension)
        .def_property_readonly("num_oscillatory", &OscillatorySystem::num_oscillatory)
        .def_property_readonly("lambdas", &OscillatorySystem::lambdas)
        .def("omega", &OscillatorySystem::omega)
        .def("potential",
             [](const OscillatorySystem& s, const std::vector<double>& q) { return s.potential(q); })
        .def("force", [](const OscillatorySystem& s, const std::vector<double>& q) {
            std::vector<double> out(q.size());
            s.force(q, out);
            return out;
        });

    m.def("total_energy", &total_energy);
    m.def("oscillatory_energy", &oscillatory_energy, py::arg("system"), py::arg("state"),
          py::arg("j"));
    m.def("total_oscillatory_energy", &total_oscillatory_energy);
    m.def("weighted_oscillatory_energy",
          [](const OscillatorySystem& sys, const State& s, const std::vector<double>& mu) {
              return weighted_oscillatory_energy(sys, s, mu);
          });

    m.def("make_quartic_system", &make_quartic_system, py::arg("epsilon"), py::arg("lambda_"),
          py::arg("dims"), py::arg("coeffs"));
    m.def("paper_initial_state", &paper_initial_state, py::arg("epsilon"));
    m.def("test_problem",
          [](double eps_inv) {
              auto setup = build_paper_system(eps_inv);
              return py::make_tuple(std::move(setup.system), std::move(setup.initial));
          },
          py::arg("epsilon_inv") = kPaperOmega,
          "Returns (system, initial_state) for the quartic three-frequency problem.");

    m.def("step",
          [](const ErknScheme& scheme, const OscillatorySystem& sys, double h, const State& s) {
              StepWorkspace ws;
              return step(scheme, sys, h, s, ws);
          },
          py::arg("scheme"), py::arg("system"), py::arg("h"), py::arg("state"));
    m.def("propagate", &propagate, py::arg("scheme"), py::arg("system"), py::arg("h"),
          py::arg("state"), py::arg("n_steps"), py::call_guard<py::gil_scoped_release>());
    m.def("integrate",
          [](const ErknScheme& scheme, const OscillatorySystem& sys, double h, const State& s0,
             std::size_t n_steps, std::size_t sample_every, const std::vector<double>& mu) {
              std::vector<Observer> obs{
                  {"H", [&](const State& s) { return total_energy(sys, s); }},
                  {"I", [&](const State& s) { return total_oscillatory_energy(sys, s); }}};
              if (!mu.empty())
                  obs.push_back({"I_mu", [&](const State& s) {
                                     return weighted_oscillatory_energy(sys, s, mu);
                                 }});
              State final_state;
              auto series = integrate(scheme, sys, h, s0, n_steps, sample_every, obs, {},
                                      &final_state);
              py::dict out;
              out["t"] = series.t;
              for (std::size_t c = 0; c < series.labels.size(); ++c) {
                  std::vector<double> col;
                  for (const auto& row : series.values) col.push_back(row[c]);
                  out[py::str(series.labels[c])] = col;
              }
              out["final"] = final_state;
              return out;
          },
          py::arg("scheme"), py::arg("system"), py::arg("h"), py::arg("state"),
          py::arg("n_steps"), py::arg("sample_every") = 1,
          py::arg("mu") = std::vector<double>{},
          "Samples H, I and optionally I_mu; returns a dict of lists plus the final state.");
    m.def("adjoint_roundtrip", &adjoint_roundtrip);
    m.def("jacobian_symplecticity", &jacobian_symplecticity);
    m.def("modified_energies",
          [](const ErknScheme& scheme, const OscillatorySystem& sys, const State& s, double h,
             const std::vector<double>& mu) {
              auto e = modified_energies(scheme, sys, s, h, mu);
              return py::make_tuple(e.h_star, e.i_mu_star);
          },
          py::arg("scheme"), py::arg("system"), py::arg("state"), py::arg("h"), py::arg("mu"),
          "Returns (H*, I*_mu).");
    m.def("block_sigmas", &block_sigmas);

    py::class_<ConvergenceReport>(m, "ConvergenceReport")
        .def_readonly("scheme", &ConvergenceReport::scheme)
        .def_readonly("h", &ConvergenceReport::h)
        .def_readonly("error", &ConvergenceReport::error)
        .def_readonly("reference_h", &ConvergenceReport::reference_h)
        .def_readonly("slope", &ConvergenceReport::slope)
        .def_readonly("exact", &ConvergenceReport::exact);
    m.def("run_convergence",
          py::overload_cast<const std::string&, const std::vector<double>&, double, double>(
              &run_convergence),
          py::arg("scheme"), py::arg("h_list"), py::arg("t_end"), py::arg("epsilon_inv") = 10.0,
          py::call_guard<py::gil_scoped_release>());

    m.def("format_double", &format_double);
    m.def("run_longrun",
          [](const std::string& config_text, std::optional<std::string> output_path) {
              auto cfg = parse_config(config_text);
              if (output_path) cfg.output_path = *output_path;
              LongrunResult r;
              {
                  py::gil_scoped_release nogil;
                  r = run_longrun(cfg);
              }
              py::dict out;
              for (std::size_t c = 0; c < r.series.columns.size(); ++c) {
                  std::vector<double> col;
                  for (const auto& row : r.series.rows) col.push_back(row[c]);
                  out[py::str(r.series.columns[c])] = col;
              }
              return py::make_tuple(out, r.diverged, r.message);
          },
          py::arg("config_text"), py::arg("output_path") = py::none(),
          "Runs a long-time energy study from config text; output_path overrides the config\n"
          "(empty string: no CSV). Returns (columns, diverged, message).");
}
