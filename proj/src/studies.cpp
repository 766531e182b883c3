#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "erkn/errors.hpp"
#include "erkn/harness.hpp"
#include "erkn/integrator.hpp"

namespace erkn {
namespace {

std::size_t whole_steps(double t_end, double h) {
    const double n = t_end / h;
    const double rounded = std::round(n);
    if (rounded < 1.0 || std::fabs(n - rounded) > 1e-9 * rounded)
        throw DomainError("run_convergence: h = " + format_double(h) + " does not divide t_end");
    return static_cast<std::size_t>(rounded);
}

double max_norm_difference(const State& a, const State& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.q.size(); ++i)
        d = std::max({d, std::fabs(a.q[i] - b.q[i]), std::fabs(a.p[i] - b.p[i])});
    return d;
}

double max_norm(const State& a) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.q.size(); ++i) d = std::max({d, std::fabs(a.q[i]), std::fabs(a.p[i])});
    return d;
}

std::string yes_no(bool b) { return b ? "pass" : "fail"; }

}  // namespace

ConvergenceReport run_convergence(const ErknScheme& scheme, const OscillatorySystem& sys,
                                  const State& s0, const std::vector<double>& h_list,
                                  double t_end) {
    if (h_list.size() < 3) throw DomainError("run_convergence: need at least three step sizes");
    if (!std::is_sorted(h_list.begin(), h_list.end(), std::greater<>()) ||
        std::adjacent_find(h_list.begin(), h_list.end()) != h_list.end())
        throw DomainError("run_convergence: h_list must be strictly descending");

    ConvergenceReport report;
    report.scheme = scheme.name;
    report.h = h_list;
    report.reference_h = h_list.back() / 50.0;
    const State reference = propagate(scheme, sys, report.reference_h, s0,
                                      whole_steps(t_end, report.reference_h));
    for (double h : h_list)
        report.error.push_back(
            max_norm_difference(propagate(scheme, sys, h, s0, whole_steps(t_end, h)), reference));

    const double floor = 1e-13 * std::max(1.0, max_norm(reference));
    report.exact = std::all_of(report.error.begin(), report.error.end(),
                               [floor](double e) { return e <= floor; });
    if (report.exact) {
        report.slope = std::numeric_limits<double>::quiet_NaN();
        return report;
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(h_list.size());
    for (std::size_t i = 0; i < h_list.size(); ++i) {
        const double x = std::log(h_list[i]);
        const double y = std::log(std::max(report.error[i], std::numeric_limits<double>::min()));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    report.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return report;
}

ConvergenceReport run_convergence(const std::string& scheme_name,
                                  const std::vector<double>& h_list, double t_end,
                                  double epsilon_inv) {
    const ErknScheme scheme = builtin_scheme(scheme_name);
    const ProblemSetup problem = build_paper_system(epsilon_inv);
    return run_convergence(scheme, problem.system, problem.initial, h_list, t_end);
}

std::optional<SchemeProperties> expected_properties(const std::string& name) {
    if (name == "ERKN1") return SchemeProperties{true, false, false, false};
    if (name == "ERKN2") return SchemeProperties{true, true, false, false};
    if (name == "ERKN3") return SchemeProperties{true, true, true, true};
    if (name == "ERKN4") return SchemeProperties{true, true, false, false};
    return std::nullopt;
}

CheckSummary run_checks(const ErknScheme& scheme) {
    CheckSummary summary;
    summary.scheme = scheme.name;
    summary.reports = {check_order2(scheme), check_symmetry(scheme), check_symplecticity(scheme),
                       check_newcond(scheme)};
    summary.expected = expected_properties(scheme.name);
    if (summary.expected) {
        const auto& e = *summary.expected;
        const bool want[] = {e.order2, e.symmetric, e.symplectic, e.newcond};
        for (std::size_t i = 0; i < summary.reports.size(); ++i)
            summary.matches_expected = summary.matches_expected && summary.reports[i].passed == want[i];
    }
    return summary;
}

CheckSummary run_checks(const std::string& scheme_name) {
    return run_checks(builtin_scheme(scheme_name));
}

ResonanceReport run_resonance(const std::vector<double>& lambda, int N, double tol, double h,
                              double epsilon) {
    ResonanceReport report;
    report.scan = resonance_scan(lambda, N, tol);
    report.margin = nonresonance_margin(h, epsilon, lambda, N, report.scan);
    report.h = h;
    report.epsilon = epsilon;
    return report;
}

void print_checks(const CheckSummary& summary, std::ostream& out) {
    out << summary.scheme << '\n';
    const bool* want = nullptr;
    bool expected[4] = {};
    if (summary.expected) {
        const auto& e = *summary.expected;
        expected[0] = e.order2;
        expected[1] = e.symmetric;
        expected[2] = e.symplectic;
        expected[3] = e.newcond;
        want = expected;
    }
    for (std::size_t i = 0; i < summary.reports.size(); ++i) {
        const auto& r = summary.reports[i];
        out << "  " << std::left << std::setw(11) << r.name << std::right << yes_no(r.passed)
            << "  max_residual=" << std::setprecision(3) << std::scientific << r.max_residual
            << "  tol=" << r.tolerance << std::defaultfloat;
        if (want) out << "  expected=" << yes_no(want[i]) << (want[i] == r.passed ? "" : "  MISMATCH");
        out << '\n';
        if (!r.note.empty()) out << "             " << r.note << '\n';
    }
    out << "  grid: " << (summary.reports.size() > 1 ? summary.reports[1].grid : "") << '\n';
}

void print_convergence(const ConvergenceReport& report, std::ostream& out) {
    out << report.scheme << " self-convergence (reference h = " << format_double(report.reference_h)
        << ")\n";
    for (std::size_t i = 0; i < report.h.size(); ++i)
        out << "  h = " << std::setw(8) << format_double(report.h[i]) << "  error = "
            << std::setprecision(6) << std::scientific << report.error[i] << std::defaultfloat
            << '\n';
    if (report.exact)
        out << "  exact: errors at round-off, slope not computed\n";
    else
        out << "  slope = " << std::setprecision(4) << std::fixed << report.slope
            << std::defaultfloat << '\n';
}

void print_resonance(const ResonanceReport& report, std::ostream& out) {
    auto print_vec = [&out](const IntVec& k) {
        out << '(';
        for (std::size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
        out << ')';
    };
    out << "lambda = (";
    for (std::size_t i = 0; i < report.scan.lambda.size(); ++i)
        out << (i ? ", " : "") << format_double(report.scan.lambda[i]);
    out << "), N = " << report.scan.N << ", tol = " << report.scan.tol << '\n';
    out << "resonance module (|k| <= N): " << report.scan.module_vectors.size() << " vectors\n";
    for (const auto& k : report.scan.module_vectors) {
        out << "  ";
        print_vec(k);
        out << '\n';
    }
    out << "class representatives: " << report.scan.representatives.size()
        << " (including the zero class)\n";
    out << "non-resonance margin min|sin(h/(2 eps) k.lambda)|/sqrt(h) at h = "
        << format_double(report.h) << ", eps = " << format_double(report.epsilon) << ": "
        << std::setprecision(10) << report.margin << std::defaultfloat << '\n';
}

}  // namespace erkn
