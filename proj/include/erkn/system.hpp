#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace erkn {

/// One block λ_j I_{d_j} of the frequency matrix; ω_j = λ_j / ε.
struct FrequencyBlock {
    double lambda = 0.0;
    std::size_t dim = 0;
};

/// Phase-space point with flat q, p vectors laid out block after block.
struct State {
    std::vector<double> q;
    std::vector<double> p;

    friend bool operator==(const State&, const State&) = default;
};

using PotentialFn = std::function<double(std::span<const double>)>;
using GradientFn = std::function<void(std::span<const double> q, std::span<double> grad)>;

/// The system q'' = -Ω² q + g(q), g = -∇U, with Ω = diag(λ_j/ε I_{d_j}).
///
/// Immutable after construction. Block 0 must have λ = 0 (it may have dim 0);
/// later blocks need λ ≥ 1 and pairwise distinct values. The potential and
/// gradient callables must be thread-safe if the system is shared across threads.
class OscillatorySystem {
public:
    OscillatorySystem(double epsilon, std::vector<FrequencyBlock> blocks, PotentialFn potential,
                      GradientFn gradient);

    [[nodiscard]] double epsilon() const noexcept { return epsilon_; }
    [[nodiscard]] const std::vector<FrequencyBlock>& blocks() const noexcept { return blocks_; }
    /// Number of oscillatory blocks l (block 0 excluded).
    [[nodiscard]] std::size_t num_oscillatory() const noexcept { return blocks_.size() - 1; }
    [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
    [[nodiscard]] std::size_t offset(std::size_t block) const { return offsets_.at(block); }
    [[nodiscard]] double omega(std::size_t block) const { return blocks_.at(block).lambda / epsilon_; }
    /// λ_1..λ_l.
    [[nodiscard]] std::vector<double> lambdas() const;

    [[nodiscard]] double potential(std::span<const double> q) const;
    /// Writes g(q) = -∇U(q) into `out`.
    void force(std::span<const double> q, std::span<double> out) const;

    /// Throws ShapeError unless q and p both have length dimension().
    void check_state(const State& s) const;

private:
    double epsilon_;
    std::vector<FrequencyBlock> blocks_;
    std::vector<std::size_t> offsets_;
    std::size_t dimension_ = 0;
    PotentialFn potential_;
    GradientFn gradient_;
};

/// H(q, p) = ½ Σ_j (‖p_j‖² + ω_j² ‖q_j‖²) + U(q), block 0 included.
[[nodiscard]] double total_energy(const OscillatorySystem& sys, const State& s);

/// I_j = ½ (‖p_j‖² + ω_j² ‖q_j‖²) for 1 ≤ j ≤ l.
[[nodiscard]] double oscillatory_energy(const OscillatorySystem& sys, const State& s, std::size_t j);

/// I = Σ_{j≥1} I_j.
[[nodiscard]] double total_oscillatory_energy(const OscillatorySystem& sys, const State& s);

/// I_μ = Σ_j (μ_j / λ_j) I_j; μ has one entry per oscillatory block.
[[nodiscard]] double weighted_oscillatory_energy(const OscillatorySystem& sys, const State& s,
                                                 std::span<const double> mu);

/// ½‖p₀‖², the kinetic energy of the slow block.
[[nodiscard]] double slow_kinetic_energy(const OscillatorySystem& sys, const State& s);

}  // namespace erkn
