#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace erkn {

using CoefficientFn = std::function<double(double xi)>;

/// Coefficients (c₁, b₁(ξ), b̄₁(ξ)) of a one-stage explicit ERKN method.
///
/// b₁ and b̄₁ are scalar functions of ξ = hω applied block by block; they
/// should be even and bounded on [0, 10].
struct ErknScheme {
    std::string name;
    double c1 = 0.5;
    CoefficientFn b1;
    CoefficientFn bbar1;
};

/// "ERKN1".."ERKN4". Throws LookupError for anything else.
[[nodiscard]] ErknScheme builtin_scheme(std::string_view name);

[[nodiscard]] const std::vector<std::string>& builtin_scheme_names();

/// Guard on |b₁| and |b̄₁| below which σ is reported as singular.
inline constexpr double kSigmaSingularityThreshold = 1e-8;

/// σ(ξ) = sinc ξ cos(ξ/2) / (2 b̄₁(ξ)) + ξ² sinc ξ · ½ sinc(ξ/2) / (2 b₁(ξ)).
///
/// For the symmetric schemes this equals cos(ξ/2)/b₁(ξ); the two-term form is
/// what is evaluated. Throws SingularityError when a denominator is below
/// kSigmaSingularityThreshold.
[[nodiscard]] double sigma(const ErknScheme& scheme, double xi);

}  // namespace erkn
