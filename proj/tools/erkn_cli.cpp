// Command-line driver: structural checks, convergence, long-time energy runs
// and resonance reports for the builtin one-stage ERKN schemes.

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "erkn/harness.hpp"

namespace {

constexpr double kSlopeLo = 1.8;
constexpr double kSlopeHi = 2.2;

int cmd_check(const std::string& which) {
    std::vector<std::string> names;
    if (which == "all")
        names = erkn::builtin_scheme_names();
    else
        names.push_back(which);
    bool ok = true;
    for (const auto& name : names) {
        const auto summary = erkn::run_checks(name);
        erkn::print_checks(summary, std::cout);
        ok = ok && summary.matches_expected;
    }
    std::cout << (ok ? "all checks match the expected table\n" : "MISMATCH against expected table\n");
    return ok ? 0 : 1;
}

int cmd_converge(const std::string& scheme, std::vector<double> hs, double t_end, double omega) {
    const auto report = erkn::run_convergence(scheme, hs, t_end, omega);
    erkn::print_convergence(report, std::cout);
    if (report.exact) return 0;
    const bool ok = report.slope >= kSlopeLo && report.slope <= kSlopeHi;
    if (!ok) std::cout << "slope outside [" << kSlopeLo << ", " << kSlopeHi << "]\n";
    return ok ? 0 : 1;
}

struct LongrunOverrides {
    double h = 0.0;
    double t_end = 0.0;
    double omega = 0.0;
    std::string output;
    std::size_t sample_every = 0;
    bool full_paper_run = false;
};

int cmd_longrun(const std::string& path, const LongrunOverrides& o) {
    erkn::ExperimentConfig cfg = erkn::load_config(path);
    if (o.h > 0.0) cfg.h = o.h;
    if (o.full_paper_run) cfg.t_end = erkn::kFullPaperTEnd;
    if (o.t_end > 0.0) cfg.t_end = o.t_end;
    if (o.omega > 0.0) cfg.epsilon_inv = o.omega;
    if (!o.output.empty()) cfg.output_path = o.output;
    if (o.sample_every > 0) cfg.sample_every = o.sample_every;

    const auto result = erkn::run_longrun(cfg);
    const auto& s = result.series;
    std::cout << cfg.scheme_name << ": " << s.rows.size() << " rows";
    if (!cfg.output_path.empty()) std::cout << " -> " << cfg.output_path;
    std::cout << '\n';
    const double t_last = s.rows.empty() ? 0.0 : s.rows.back()[0];
    for (std::size_t c = 1; c < s.columns.size(); ++c)
        std::cout << "  max|" << s.columns[c] << "| = "
                  << erkn::max_abs_in_window(s, s.columns[c], 0.0, t_last) << '\n';
    if (result.diverged) {
        std::cerr << "diverged at step " << result.divergence_step << ": " << result.message << '\n';
        return 2;
    }
    return 0;
}

int cmd_resonance(const std::vector<double>& lambda, int N, double tol, double h, double omega) {
    if (tol <= 0.0) tol = erkn::default_resonance_tol(lambda);
    const auto report = erkn::run_resonance(lambda, N, tol, h, 1.0 / omega);
    erkn::print_resonance(report, std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-stage explicit ERKN integrators for multi-frequency oscillatory systems"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    std::string check_scheme;
    auto* check = app.add_subcommand("check", "Order, symmetry, symplecticity and sigma checks");
    check->add_option("scheme", check_scheme, "ERKN1..ERKN4 or 'all'")->required();

    std::string conv_scheme;
    std::vector<double> conv_h{0.02, 0.01, 0.005};
    double conv_t_end = 1.0;
    double conv_omega = 10.0;
    auto* converge = app.add_subcommand("converge", "Self-convergence slope on the test problem");
    converge->add_option("scheme", conv_scheme, "ERKN1..ERKN4")->required();
    converge->add_option("--h", conv_h, "Step sizes, descending")->delimiter(',');
    converge->add_option("--t-end", conv_t_end, "Final time");
    converge->add_option("--omega", conv_omega, "1/epsilon");

    std::string config_path;
    LongrunOverrides overrides;
    auto* longrun = app.add_subcommand("longrun", "Long-time energy error run, CSV output");
    longrun->add_option("config", config_path, "Config file (key = value lines)")
        ->required()
        ->check(CLI::ExistingFile);
    longrun->add_option("--h", overrides.h, "Override h");
    longrun->add_option("--t-end", overrides.t_end, "Override t_end");
    longrun->add_option("--omega", overrides.omega, "Override epsilon_inv");
    longrun->add_option("--output", overrides.output, "Override output_path");
    longrun->add_option("--sample-every", overrides.sample_every, "Override sample_every");
    longrun->add_flag("--full-paper-run", overrides.full_paper_run, "Integrate to t = 10000");

    std::vector<double> res_lambda = erkn::paper_lambda();
    int res_n = 3;
    double res_tol = 0.0;
    double res_h = 0.01;
    double res_omega = erkn::kPaperOmega;
    auto* resonance = app.add_subcommand("resonance", "Resonance module and non-resonance margin");
    resonance->add_option("--lambda", res_lambda, "Frequencies lambda_1..lambda_l")->delimiter(',');
    resonance->add_option("--N", res_n, "Truncation |k| <= N");
    resonance->add_option("--tol", res_tol, "Tolerance on |k.lambda| (default 1e-9 max lambda)");
    resonance->add_option("--h", res_h, "Step size");
    resonance->add_option("--omega", res_omega, "1/epsilon");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return cmd_check(check_scheme);
        if (*converge) return cmd_converge(conv_scheme, conv_h, conv_t_end, conv_omega);
        if (*longrun) return cmd_longrun(config_path, overrides);
        if (*resonance) return cmd_resonance(res_lambda, res_n, res_tol, res_h, res_omega);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
