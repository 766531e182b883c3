#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "erkn/errors.hpp"
#include "erkn/harness.hpp"
#include "erkn/integrator.hpp"

namespace erkn {

std::vector<MuEntry> default_mu_list() {
    return {{"I1+I3", {1.0, 0.0, 2.0}}, {"I2", {0.0, kSqrt2, 0.0}}};
}

std::size_t EnergySeries::column(const std::string& name) const {
    auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw LookupError("no column '" + name + "'");
    return static_cast<std::size_t>(it - columns.begin());
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::runtime_error("format_double: buffer too small");
    return std::string(buf, ptr);
}

void write_csv(const EnergySeries& series, std::ostream& out) {
    for (std::size_t c = 0; c < series.columns.size(); ++c)
        out << (c ? "," : "") << series.columns[c];
    out << '\n';
    for (const auto& row : series.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_double(row[c]);
        out << '\n';
    }
}

double max_abs_in_window(const EnergySeries& series, const std::string& column, double t_lo,
                         double t_hi) {
    const std::size_t c = series.column(column);
    double worst = 0.0;
    for (const auto& row : series.rows)
        if (row[0] >= t_lo && row[0] <= t_hi) worst = std::max(worst, std::fabs(row[c]));
    return worst;
}

namespace {

struct Problem {
    OscillatorySystem system;
    State initial;
};

Problem configured_problem(const ExperimentConfig& cfg) {
    const double eps = 1.0 / cfg.epsilon_inv;
    OscillatorySystem sys = make_quartic_system(eps, cfg.lambda, cfg.dims, cfg.potential_coeffs);
    State s0 = paper_initial_state(eps);
    if (cfg.q0) s0.q = *cfg.q0;
    if (cfg.p0) s0.p = *cfg.p0;
    sys.check_state(s0);
    return {std::move(sys), std::move(s0)};
}

// Raw observables; the series stores deviations from their t = 0 values.
std::vector<Observer> energy_observers(const OscillatorySystem& sys, const ExperimentConfig& cfg,
                                       const std::vector<double>& sig) {
    std::vector<Observer> obs;
    obs.push_back({"err_H", [&sys](const State& s) { return total_energy(sys, s); }});
    obs.push_back({"err_I", [&sys](const State& s) { return total_oscillatory_energy(sys, s); }});
    for (std::size_t j = 1; j <= sys.num_oscillatory(); ++j)
        obs.push_back({"err_I" + std::to_string(j),
                       [&sys, j](const State& s) { return oscillatory_energy(sys, s, j); }});
    for (const auto& [label, mu] : cfg.mu_list)
        obs.push_back({"err_Imu_" + label, [&sys, &mu = mu](const State& s) {
                           return weighted_oscillatory_energy(sys, s, mu);
                       }});
    obs.push_back({"err_Hstar", [&sys, &sig](const State& s) {
                       double v = total_energy(sys, s);
                       for (std::size_t j = 1; j <= sys.num_oscillatory(); ++j)
                           v += (sig[j - 1] - 1.0) * oscillatory_energy(sys, s, j);
                       return v;
                   }});
    for (const auto& [label, mu] : cfg.mu_list)
        obs.push_back({"err_Istar_" + label, [&sys, &sig, &mu = mu](const State& s) {
                           double v = 0.0;
                           for (std::size_t j = 1; j <= sys.num_oscillatory(); ++j)
                               v += sig[j - 1] * mu[j - 1] / sys.blocks()[j].lambda *
                                    oscillatory_energy(sys, s, j);
                           return v;
                       }});
    return obs;
}

EnergySeries to_errors(const SampledSeries& raw) {
    EnergySeries out;
    out.columns.push_back("t");
    out.columns.insert(out.columns.end(), raw.labels.begin(), raw.labels.end());
    out.rows.reserve(raw.t.size());
    for (std::size_t i = 0; i < raw.t.size(); ++i) {
        std::vector<double> row{raw.t[i]};
        for (std::size_t c = 0; c < raw.labels.size(); ++c)
            row.push_back(raw.values[i][c] - raw.values[0][c]);
        out.rows.push_back(std::move(row));
    }
    return out;
}

void write_csv_file(const EnergySeries& series, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    write_csv(series, out);
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

LongrunResult run_longrun(const ExperimentConfig& cfg) {
    cfg.validate();
    const ErknScheme scheme = builtin_scheme(cfg.scheme_name);
    const Problem problem = configured_problem(cfg);
    const std::vector<double> sig = block_sigmas(scheme, problem.system, cfg.h);
    const std::vector<Observer> observers = energy_observers(problem.system, cfg, sig);

    LongrunResult result;
    try {
        const SampledSeries raw = integrate(scheme, problem.system, cfg.h, problem.initial,
                                            cfg.n_steps(), cfg.sample_every, observers,
                                            IntegrateOptions{kDivergenceBound});
        result.series = to_errors(raw);
    } catch (const SeriesDivergenceError& e) {
        result.series = to_errors(e.partial());
        result.diverged = true;
        result.divergence_step = e.step_index();
        result.message = e.what();
    }
    if (!cfg.output_path.empty()) write_csv_file(result.series, cfg.output_path);
    return result;
}

}  // namespace erkn
