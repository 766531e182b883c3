#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "erkn/conditions.hpp"
#include "erkn/resonance.hpp"
#include "erkn/scheme.hpp"
#include "erkn/system.hpp"

namespace erkn {

// ---------------------------------------------------------------------------
// Test problem: three fast frequencies plus a slow block, quartic coupling
//   U(q) = (a · q)^4,  a = (0.001, 1, 1, 1, 1),  λ = (1, √2, 2), ε = 1/70.
// ---------------------------------------------------------------------------

inline constexpr double kSqrt2 = 1.4142135623730951;
inline constexpr double kPaperOmega = 70.0;

struct ProblemSetup {
    OscillatorySystem system;
    State initial;
};

[[nodiscard]] std::vector<double> paper_lambda();
/// Dimensions of the oscillatory blocks: q₁ has two components, q₂ and q₃ one.
[[nodiscard]] std::vector<std::size_t> paper_dims();
[[nodiscard]] std::vector<double> paper_potential_coeffs();

/// Slow block of dim 1 plus oscillatory blocks (lambda[j], dims[j]);
/// U(q) = (coeffs · q)^4.
[[nodiscard]] OscillatorySystem make_quartic_system(double epsilon, std::vector<double> lambda,
                                                    std::vector<std::size_t> dims,
                                                    std::vector<double> coeffs);

/// q(0) = (1, 0.3ε, 0.8ε, -1.1ε, 0.7ε), p(0) = (-0.75, 0.6, 0.7, -0.9, 0.8).
[[nodiscard]] State paper_initial_state(double epsilon);

/// The full test problem at the given ω = 1/ε (default 70).
[[nodiscard]] ProblemSetup build_paper_system(double epsilon_inv = kPaperOmega);

// ---------------------------------------------------------------------------
// Long-time energy runs
// ---------------------------------------------------------------------------

using MuEntry = std::pair<std::string, std::vector<double>>;

/// μ = (1, 0, 2) labelled "I1+I3" and μ = (0, √2, 0) labelled "I2".
[[nodiscard]] std::vector<MuEntry> default_mu_list();

inline constexpr std::size_t kDefaultSampleEvery = 100;
inline constexpr double kDeskTEnd = 1000.0;
inline constexpr double kFullPaperTEnd = 10000.0;
/// ‖q‖ + ‖p‖ above this aborts a run.
inline constexpr double kDivergenceBound = 1e6;

struct ExperimentConfig {
    std::string scheme_name;
    double epsilon_inv = kPaperOmega;
    double h = 0.01;
    double t_end = kDeskTEnd;
    std::size_t sample_every = kDefaultSampleEvery;
    std::vector<MuEntry> mu_list = default_mu_list();
    std::string output_path;
    std::vector<double> lambda = paper_lambda();
    std::vector<std::size_t> dims = paper_dims();
    std::vector<double> potential_coeffs = paper_potential_coeffs();
    /// Explicit initial state; defaults to paper_initial_state(ε) when unset.
    std::optional<std::vector<double>> q0;
    std::optional<std::vector<double>> p0;

    /// Throws DomainError when h ≤ 0, t_end < h, sample_every = 0, or shapes disagree.
    void validate() const;
    [[nodiscard]] std::size_t n_steps() const;
};

/// Parses `key = value` lines; `#` starts a comment. Vectors are comma-separated,
/// mu_list entries are `label: v1, v2, ...` separated by `;`. Every key except
/// mu_list, dims, potential_coeffs, q0 and p0 is required. Throws
/// std::invalid_argument naming the line on malformed input.
[[nodiscard]] ExperimentConfig parse_config(const std::string& text);
[[nodiscard]] ExperimentConfig load_config(const std::string& path);

/// Signed deviations from the t = 0 value, one row per sample, t first.
struct EnergySeries {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    [[nodiscard]] std::size_t column(const std::string& name) const;
};

/// Shortest decimal string that round-trips to the same double.
[[nodiscard]] std::string format_double(double v);

/// Header plus one line per row, '\n' terminated, shortest round-trip numbers.
void write_csv(const EnergySeries& series, std::ostream& out);

struct LongrunResult {
    EnergySeries series;
    bool diverged = false;
    std::size_t divergence_step = 0;
    std::string message;
};

/// Integrates the configured problem and samples err_H, err_I, err_I<j>,
/// err_Imu_<label>, err_Hstar, err_Istar_<label>. Writes the CSV to
/// cfg.output_path unless it is empty. On divergence the partial series is
/// written and returned with `diverged` set.
[[nodiscard]] LongrunResult run_longrun(const ExperimentConfig& cfg);

/// Max |column| over rows with t in [t_lo, t_hi].
[[nodiscard]] double max_abs_in_window(const EnergySeries& series, const std::string& column,
                                       double t_lo, double t_hi);

// ---------------------------------------------------------------------------
// Convergence, structural checks, resonance report
// ---------------------------------------------------------------------------

struct ConvergenceReport {
    std::string scheme;
    std::vector<double> h;
    std::vector<double> error;
    double reference_h = 0.0;
    /// Least-squares slope of log(error) against log(h); NaN when exact.
    double slope = 0.0;
    /// All errors at round-off level; slope not computed.
    bool exact = false;
};

/// Final-time max-norm error over (q, p) against the same scheme at
/// min(h_list)/50. h_list must be descending with ≥ 3 entries dividing t_end.
[[nodiscard]] ConvergenceReport run_convergence(const ErknScheme& scheme,
                                                const OscillatorySystem& sys, const State& s0,
                                                const std::vector<double>& h_list, double t_end);

/// Same on the test problem with ω = epsilon_inv.
[[nodiscard]] ConvergenceReport run_convergence(const std::string& scheme_name,
                                                const std::vector<double>& h_list, double t_end,
                                                double epsilon_inv = 10.0);

/// Expected structural properties of a builtin scheme.
struct SchemeProperties {
    bool order2 = true;
    bool symmetric = false;
    bool symplectic = false;
    bool newcond = false;
};

/// The Symmetric / Symplectic table for ERKN1..ERKN4 plus which satisfies σ ≡ 1.
[[nodiscard]] std::optional<SchemeProperties> expected_properties(const std::string& name);

struct CheckSummary {
    std::string scheme;
    std::vector<ConditionReport> reports;  // order2, symmetric, symplectic, newcond
    std::optional<SchemeProperties> expected;
    /// True when every report agrees with `expected` (or there is no expectation).
    bool matches_expected = true;
};

[[nodiscard]] CheckSummary run_checks(const ErknScheme& scheme);
[[nodiscard]] CheckSummary run_checks(const std::string& scheme_name);

struct ResonanceReport {
    ResonanceScan scan;
    double margin = 0.0;
    double h = 0.0;
    double epsilon = 0.0;
};

[[nodiscard]] ResonanceReport run_resonance(const std::vector<double>& lambda, int N, double tol,
                                            double h, double epsilon);

void print_checks(const CheckSummary& summary, std::ostream& out);
void print_convergence(const ConvergenceReport& report, std::ostream& out);
void print_resonance(const ResonanceReport& report, std::ostream& out);

}  // namespace erkn
