#pragma once

// Scalar φ-functions of the trigonometric integrators,
//
//   φ_j(ξ²) = Σ_k (-1)^k ξ^{2k} / (2k + j)!,
//
// so that φ₀ = cos ξ, φ₁ = sin ξ / ξ, φ₂ = (1 - cos ξ) / ξ², φ₃ = (ξ - sin ξ) / ξ³.
// Every function here takes ξ (not ξ²) and is even in it. Ω is diagonal, so the
// integrator only ever needs these per frequency block.

namespace erkn {

/// Highest φ order exposed by the kernel.
inline constexpr int kMaxPhiOrder = 3;

/// Below this |ξ| the truncated Taylor series is used for φ₀..φ₂.
inline constexpr double kPhiSeriesThreshold = 1e-2;

/// φ₃ has a cancellation-prone closed form; its series branch extends to here.
inline constexpr double kPhi3SeriesThreshold = 2.0;

/// φ_j(ξ²) for j in [0, 3]. Throws DomainError for non-finite ξ and
/// UnsupportedOrderError for other j.
[[nodiscard]] double phi(int j, double xi);

/// sin(x)/x with sinc(0) = 1.
[[nodiscard]] double sinc(double x);

}  // namespace erkn
