#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "erkn/errors.hpp"
#include "erkn/scheme.hpp"
#include "erkn/system.hpp"

namespace erkn {

/// Scratch storage and per-block coefficients for one (scheme, system, h).
///
/// The coefficient cache is keyed by h and by the addresses of the scheme and
/// system objects; prepare() recomputes when any of them changes. One workspace
/// must not be shared between threads.
class StepWorkspace {
public:
    void prepare(const ErknScheme& scheme, const OscillatorySystem& sys, double h);
    [[nodiscard]] bool valid_for(const ErknScheme& scheme, const OscillatorySystem& sys,
                                 double h) const noexcept;

private:
    friend void step_in_place(const ErknScheme&, const OscillatorySystem&, double, State&,
                              StepWorkspace&, std::size_t);

    struct BlockCoefficients {
        double cos_stage = 1.0;    // cos(c₁ξ)
        double p_stage = 0.0;      // h c₁ sinc(c₁ξ)
        double cos_full = 1.0;     // cos ξ
        double p_to_q = 0.0;       // h sinc ξ
        double q_to_p = 0.0;       // -h ω² sinc ξ
        double force_q = 0.0;      // h² b̄₁(ξ)
        double force_p = 0.0;      // h b₁(ξ)
    };

    const void* scheme_ = nullptr;
    const void* system_ = nullptr;
    double h_ = std::numeric_limits<double>::quiet_NaN();
    std::vector<BlockCoefficients> coeff_;
    std::vector<double> stage_;
    std::vector<double> force_;
};

/// One ERKN step, per block with ξ = hω:
///   Q  = cos(c₁ξ) q + h c₁ sinc(c₁ξ) p
///   q⁺ = cos ξ q + h sinc ξ p + h² b̄₁(ξ) g(Q)
///   p⁺ = -h ω² sinc ξ q + cos ξ p + h b₁(ξ) g(Q)
/// One force evaluation. Negative h runs the step backwards (coefficients are
/// even in ξ). Throws DivergenceError tagged with `step_index` if the result is
/// not finite.
void step_in_place(const ErknScheme& scheme, const OscillatorySystem& sys, double h, State& s,
                   StepWorkspace& ws, std::size_t step_index = 0);

[[nodiscard]] State step(const ErknScheme& scheme, const OscillatorySystem& sys, double h,
                         const State& s, StepWorkspace& ws, std::size_t step_index = 0);

/// A named scalar functional sampled along a trajectory.
struct Observer {
    std::string name;
    std::function<double(const State&)> fn;
};

/// Observer values at sampled steps; values[i][c] belongs to labels[c] at time t[i].
struct SampledSeries {
    std::vector<std::string> labels;
    std::vector<std::size_t> step;
    std::vector<double> t;
    std::vector<std::vector<double>> values;
};

struct IntegrateOptions {
    /// Abort once ‖q‖ + ‖p‖ exceeds this (Euclidean norms).
    double state_bound = std::numeric_limits<double>::infinity();
};

/// Divergence during integrate(); carries everything sampled before it.
class SeriesDivergenceError : public DivergenceError {
public:
    SeriesDivergenceError(const std::string& what, std::size_t step_index, SampledSeries partial,
                          State last_finite)
        : DivergenceError(what, step_index),
          partial_(std::move(partial)),
          last_finite_(std::move(last_finite)) {}
    [[nodiscard]] const SampledSeries& partial() const noexcept { return partial_; }
    [[nodiscard]] const State& last_finite_state() const noexcept { return last_finite_; }

private:
    SampledSeries partial_;
    State last_finite_;
};

/// Runs n_steps steps from s0 and samples every `sample_every` steps; step 0 and
/// step n_steps are always sampled, and t = n·h. If `final_state` is given it
/// receives the last state.
[[nodiscard]] SampledSeries integrate(const ErknScheme& scheme, const OscillatorySystem& sys,
                                      double h, const State& s0, std::size_t n_steps,
                                      std::size_t sample_every,
                                      const std::vector<Observer>& observers,
                                      const IntegrateOptions& options = {},
                                      State* final_state = nullptr);

/// Advances n_steps without sampling.
[[nodiscard]] State propagate(const ErknScheme& scheme, const OscillatorySystem& sys, double h,
                              const State& s0, std::size_t n_steps);

/// ‖Φ_{-h}(Φ_h(s)) − s‖_∞ / ‖s‖_∞ over the concatenated (q, p).
[[nodiscard]] double adjoint_roundtrip(const ErknScheme& scheme, const OscillatorySystem& sys,
                                       double h, const State& s);

/// Largest system dimension accepted by jacobian_symplecticity.
inline constexpr std::size_t kMaxJacobianDimension = 20;

/// ‖JᵀJ₀J − J₀‖_max for the central-difference Jacobian J of one step, where J₀ is
/// the canonical symplectic matrix. Perturbation δ = 1e-6·max(1, |z_i|).
[[nodiscard]] double jacobian_symplecticity(const ErknScheme& scheme,
                                            const OscillatorySystem& sys, double h,
                                            const State& s);

struct ModifiedEnergies {
    double h_star = 0.0;
    double i_mu_star = 0.0;
};

/// H* = H + Σ_j (σ(ξ_j) − 1) I_j and I*_μ = Σ_j σ(ξ_j) (μ_j/λ_j) I_j, ξ_j = hλ_j/ε.
[[nodiscard]] ModifiedEnergies modified_energies(const ErknScheme& scheme,
                                                 const OscillatorySystem& sys, const State& s,
                                                 double h, std::span<const double> mu);

/// σ(hλ_j/ε) for j = 1..l.
[[nodiscard]] std::vector<double> block_sigmas(const ErknScheme& scheme,
                                               const OscillatorySystem& sys, double h);

}  // namespace erkn
