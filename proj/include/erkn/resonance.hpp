#pragma once

#include <span>
#include <vector>

namespace erkn {

using IntVec = std::vector<int>;

/// Largest |k| = Σ|k_i| accepted by resonance_scan.
inline constexpr int kMaxResonanceOrder = 12;

/// Integer relations k·λ ≈ 0 among the frequencies, truncated to |k| ≤ N.
struct ResonanceScan {
    std::vector<double> lambda;
    /// Nonzero k with |k| ≤ N and |k·λ| ≤ tol, lexicographic order.
    std::vector<IntVec> module_vectors;
    /// One minimal-|k| member per class k + M met in the ball |k| ≤ N, closed
    /// under negation. The zero vector represents M itself; drop it for N*.
    /// Ordered by (|k|, lexicographic).
    std::vector<IntVec> representatives;
    int N = 0;
    double tol = 0.0;
};

/// 1e-9 · max_j λ_j.
[[nodiscard]] double default_resonance_tol(std::span<const double> lambda);

/// Σ|k_i|.
[[nodiscard]] int l1_norm(std::span<const int> k);

[[nodiscard]] double dot(std::span<const int> k, std::span<const double> lambda);

/// All k ∈ Z^l with |k| ≤ N, in lexicographic order. ResourceError when the
/// ball would hold more than a few million points.
[[nodiscard]] std::vector<IntVec> enumerate_l1_ball(std::size_t l, int N);

/// Throws ResourceError for N > kMaxResonanceOrder, DomainError for N < 1 or tol ≤ 0.
[[nodiscard]] ResonanceScan resonance_scan(std::span<const double> lambda, int N, double tol);

/// min over nonzero k ∉ M with |k| ≤ N of |sin(h/(2ε) k·λ)| / √h.
/// The caller compares this with their constant c of the non-resonance bound.
[[nodiscard]] double nonresonance_margin(double h, double epsilon, std::span<const double> lambda,
                                         int N, const ResonanceScan& scan);

}  // namespace erkn
