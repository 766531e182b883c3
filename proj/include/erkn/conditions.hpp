#pragma once

#include <string>
#include <vector>

#include "erkn/scheme.hpp"

namespace erkn {

/// Outcome of one algebraic check on a scheme's coefficient functions.
struct ConditionReport {
    std::string name;
    double max_residual = 0.0;
    /// Human-readable description of the ξ samples used.
    std::string grid;
    double tolerance = 0.0;
    bool passed = false;
    /// Extra facts worth printing (e.g. whether c₁ = ½, the estimated d₁).
    std::string note;
};

/// The ξ grid shared by the identity checks: 200 uniform points on [1e-3, 3].
inline constexpr double kGridLo = 1e-3;
inline constexpr double kGridHi = 3.0;
inline constexpr int kGridPoints = 200;
/// Pass bound for the analytic identities (symmetry, symplecticity, σ ≡ 1).
inline constexpr double kIdentityTolerance = 1e-12;

[[nodiscard]] std::vector<double> condition_grid();

/// Order-two conditions: (b₁ − φ₁)/ξ², (c₁b₁ − φ₂)/ξ and (b̄₁ − φ₂)/ξ must stay
/// bounded as ξ → 0. Sampled at ξ = 1e-1..1e-4; a ratio counts as bounded when
/// its last two samples agree to 1% (relative to max(1, |ratio|)).
/// max_residual is the largest |ratio| at ξ = 1e-4.
[[nodiscard]] ConditionReport check_order2(const ErknScheme& scheme);

/// c₁ = ½, b̄₁ = φ₁b₁ − φ₀b̄₁ and φ₀(c₁²V)b̄₁ = c₁φ₁(c₁²V)b₁ on the grid.
[[nodiscard]] ConditionReport check_symmetry(const ErknScheme& scheme);

/// φ₀b₁ + Vφ₁b̄₁ = d₁φ₀(c₁²V) and φ₁b₁ − φ₀b̄₁ = c₁d₁φ₁(c₁²V) with d₁ = b₁(0).
[[nodiscard]] ConditionReport check_symplecticity(const ErknScheme& scheme);

/// max |σ(ξ) − 1| on the grid; a singular σ fails with an infinite residual.
[[nodiscard]] ConditionReport check_newcond(const ErknScheme& scheme);

/// max over the grid of |b₁(ξ)| / |sinc(ξ/2)|; a diagnostic for the bound
/// |b₁(hω_j)| ≤ C₂ |sinc(hω_j/2)|, which is not enforced.
[[nodiscard]] double coefficient_bound_ratio(const ErknScheme& scheme);

}  // namespace erkn
