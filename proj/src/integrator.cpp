#include "erkn/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "erkn/phi.hpp"

namespace erkn {
namespace {

bool finite_state(const State& s) {
    return std::all_of(s.q.begin(), s.q.end(), [](double v) { return std::isfinite(v); }) &&
           std::all_of(s.p.begin(), s.p.end(), [](double v) { return std::isfinite(v); });
}

double state_norm(const State& s) {
    double nq = 0.0;
    double np = 0.0;
    for (double v : s.q) nq += v * v;
    for (double v : s.p) np += v * v;
    return std::sqrt(nq) + std::sqrt(np);
}

void sample(const std::vector<Observer>& observers, const State& s, std::size_t n, double h,
            SampledSeries& out) {
    std::vector<double> row;
    row.reserve(observers.size());
    for (const auto& o : observers) row.push_back(o.fn(s));
    out.step.push_back(n);
    out.t.push_back(static_cast<double>(n) * h);
    out.values.push_back(std::move(row));
}

}  // namespace

bool StepWorkspace::valid_for(const ErknScheme& scheme, const OscillatorySystem& sys,
                              double h) const noexcept {
    return scheme_ == &scheme && system_ == &sys && h_ == h;
}

void StepWorkspace::prepare(const ErknScheme& scheme, const OscillatorySystem& sys, double h) {
    if (valid_for(scheme, sys, h)) return;
    if (!std::isfinite(h) || h == 0.0) throw DomainError("step: h must be finite and nonzero");

    const double c1 = scheme.c1;
    coeff_.assign(sys.blocks().size(), {});
    for (std::size_t j = 0; j < sys.blocks().size(); ++j) {
        const double w = sys.omega(j);
        const double xi = h * w;
        auto& c = coeff_[j];
        c.cos_stage = phi(0, c1 * xi);
        c.p_stage = h * c1 * phi(1, c1 * xi);
        c.cos_full = phi(0, xi);
        c.p_to_q = h * phi(1, xi);
        // -hΩ²φ₁(V) per block; stays finite (zero) on the ω = 0 block.
        c.q_to_p = -h * w * w * phi(1, xi);
        c.force_q = h * h * scheme.bbar1(xi);
        c.force_p = h * scheme.b1(xi);
    }
    stage_.assign(sys.dimension(), 0.0);
    force_.assign(sys.dimension(), 0.0);
    scheme_ = &scheme;
    system_ = &sys;
    h_ = h;
}

void step_in_place(const ErknScheme& scheme, const OscillatorySystem& sys, double h, State& s,
                   StepWorkspace& ws, std::size_t step_index) {
    sys.check_state(s);
    ws.prepare(scheme, sys, h);

    const auto& blocks = sys.blocks();
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        const auto& c = ws.coeff_[j];
        const std::size_t off = sys.offset(j);
        for (std::size_t i = off; i < off + blocks[j].dim; ++i)
            ws.stage_[i] = c.cos_stage * s.q[i] + c.p_stage * s.p[i];
    }
    sys.force(ws.stage_, ws.force_);
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        const auto& c = ws.coeff_[j];
        const std::size_t off = sys.offset(j);
        for (std::size_t i = off; i < off + blocks[j].dim; ++i) {
            const double q = s.q[i];
            const double p = s.p[i];
            s.q[i] = c.cos_full * q + c.p_to_q * p + c.force_q * ws.force_[i];
            s.p[i] = c.q_to_p * q + c.cos_full * p + c.force_p * ws.force_[i];
        }
    }
    if (!finite_state(s))
        throw DivergenceError("non-finite state at step " + std::to_string(step_index),
                              step_index);
}

State step(const ErknScheme& scheme, const OscillatorySystem& sys, double h, const State& s,
           StepWorkspace& ws, std::size_t step_index) {
    State next = s;
    step_in_place(scheme, sys, h, next, ws, step_index);
    return next;
}

SampledSeries integrate(const ErknScheme& scheme, const OscillatorySystem& sys, double h,
                        const State& s0, std::size_t n_steps, std::size_t sample_every,
                        const std::vector<Observer>& observers, const IntegrateOptions& options,
                        State* final_state) {
    if (n_steps < 1) throw DomainError("integrate: n_steps must be >= 1");
    if (sample_every < 1) throw DomainError("integrate: sample_every must be >= 1");
    sys.check_state(s0);

    SampledSeries out;
    for (const auto& o : observers) out.labels.push_back(o.name);
    out.t.reserve(n_steps / sample_every + 2);

    StepWorkspace ws;
    State s = s0;
    State last_finite = s0;
    sample(observers, s, 0, h, out);
    for (std::size_t n = 1; n <= n_steps; ++n) {
        try {
            step_in_place(scheme, sys, h, s, ws, n);
        } catch (const DivergenceError& e) {
            throw SeriesDivergenceError(e.what(), n, std::move(out), std::move(last_finite));
        }
        if (state_norm(s) > options.state_bound)
            throw SeriesDivergenceError("state norm exceeded bound at step " + std::to_string(n),
                                        n, std::move(out), std::move(last_finite));
        if (n % sample_every == 0 || n == n_steps) sample(observers, s, n, h, out);
        last_finite = s;
    }
    if (final_state) *final_state = std::move(s);
    return out;
}

State propagate(const ErknScheme& scheme, const OscillatorySystem& sys, double h,
                const State& s0, std::size_t n_steps) {
    StepWorkspace ws;
    State s = s0;
    for (std::size_t n = 1; n <= n_steps; ++n) step_in_place(scheme, sys, h, s, ws, n);
    return s;
}

double adjoint_roundtrip(const ErknScheme& scheme, const OscillatorySystem& sys, double h,
                         const State& s) {
    StepWorkspace forward;
    StepWorkspace backward;
    const State there = step(scheme, sys, h, s, forward, 1);
    const State back = step(scheme, sys, -h, there, backward, 2);

    double dev = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < s.q.size(); ++i) {
        dev = std::max({dev, std::fabs(back.q[i] - s.q[i]), std::fabs(back.p[i] - s.p[i])});
        scale = std::max({scale, std::fabs(s.q[i]), std::fabs(s.p[i])});
    }
    return scale > 0.0 ? dev / scale : dev;
}

double jacobian_symplecticity(const ErknScheme& scheme, const OscillatorySystem& sys, double h,
                              const State& s) {
    sys.check_state(s);
    const std::size_t d = sys.dimension();
    if (d > kMaxJacobianDimension)
        throw ShapeError("jacobian_symplecticity: dimension " + std::to_string(d) +
                         " exceeds " + std::to_string(kMaxJacobianDimension));
    const std::size_t n = 2 * d;

    auto get = [&](const State& x, std::size_t i) { return i < d ? x.q[i] : x.p[i - d]; };
    auto at = [&](State& x, std::size_t i) -> double& { return i < d ? x.q[i] : x.p[i - d]; };

    // jac[r][c] = ∂z⁺_r / ∂z_c
    std::vector<std::vector<double>> jac(n, std::vector<double>(n, 0.0));
    StepWorkspace ws;
    for (std::size_t c = 0; c < n; ++c) {
        const double delta = 1e-6 * std::max(1.0, std::fabs(get(s, c)));
        State plus = s;
        State minus = s;
        at(plus, c) += delta;
        at(minus, c) -= delta;
        step_in_place(scheme, sys, h, plus, ws, 1);
        step_in_place(scheme, sys, h, minus, ws, 1);
        for (std::size_t r = 0; r < n; ++r)
            jac[r][c] = (get(plus, r) - get(minus, r)) / (2.0 * delta);
    }

    // (J₀ J)[r][c]: J₀ = [[0, I], [-I, 0]].
    auto omega_j = [&](std::size_t r, std::size_t c) {
        return r < d ? jac[r + d][c] : -jac[r - d][c];
    };
    double worst = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            double v = 0.0;
            for (std::size_t r = 0; r < n; ++r) v += jac[r][a] * omega_j(r, b);
            double canonical = 0.0;
            if (a < d && b == a + d) canonical = 1.0;
            if (a >= d && b + d == a) canonical = -1.0;
            worst = std::max(worst, std::fabs(v - canonical));
        }
    }
    return worst;
}

std::vector<double> block_sigmas(const ErknScheme& scheme, const OscillatorySystem& sys,
                                 double h) {
    std::vector<double> out;
    out.reserve(sys.num_oscillatory());
    for (std::size_t j = 1; j < sys.blocks().size(); ++j) out.push_back(sigma(scheme, h * sys.omega(j)));
    return out;
}

ModifiedEnergies modified_energies(const ErknScheme& scheme, const OscillatorySystem& sys,
                                   const State& s, double h, std::span<const double> mu) {
    if (mu.size() != sys.num_oscillatory())
        throw ShapeError("modified_energies: mu has wrong length");
    const std::vector<double> sig = block_sigmas(scheme, sys, h);
    ModifiedEnergies out;
    out.h_star = total_energy(sys, s);
    for (std::size_t j = 1; j < sys.blocks().size(); ++j) {
        const double ij = oscillatory_energy(sys, s, j);
        out.h_star += (sig[j - 1] - 1.0) * ij;
        out.i_mu_star += sig[j - 1] * mu[j - 1] / sys.blocks()[j].lambda * ij;
    }
    return out;
}

}  // namespace erkn
