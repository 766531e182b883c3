#include "erkn/phi.hpp"

#include <cmath>
#include <string>

#include "erkn/errors.hpp"

namespace erkn {
namespace {

// Σ_{k<terms} (-1)^k x^k / (2k + j)!, x = ξ², evaluated by Horner from the tail.
double phi_series(int j, double x, int terms) {
    double sum = 0.0;
    for (int k = terms - 1; k >= 0; --k) {
        double denom = 1.0;
        for (int m = 1; m <= 2 * k + j; ++m) denom *= m;
        sum = 1.0 / denom - x * sum;
    }
    return sum;
}

void require_finite(double x, const char* fn) {
    if (!std::isfinite(x)) throw DomainError(std::string(fn) + ": non-finite argument");
}

}  // namespace

double sinc(double x) {
    require_finite(x, "sinc");
    const double ax = std::fabs(x);
    if (ax < kPhiSeriesThreshold) return phi_series(1, ax * ax, 4);
    return std::sin(ax) / ax;
}

double phi(int j, double xi) {
    require_finite(xi, "phi");
    if (j < 0 || j > kMaxPhiOrder)
        throw UnsupportedOrderError("phi: order " + std::to_string(j) + " not in [0, 3]");

    const double ax = std::fabs(xi);
    if (j == 3) {
        // 12 terms: truncation below ξ^24/27! ≈ 1e-21 on |ξ| < 2.
        if (ax < kPhi3SeriesThreshold) return phi_series(3, ax * ax, 12);
        return (ax - std::sin(ax)) / (ax * ax * ax);
    }
    if (ax < kPhiSeriesThreshold) return phi_series(j, ax * ax, 4);
    switch (j) {
        case 0: return std::cos(ax);
        case 1: return std::sin(ax) / ax;
        default: {
            // (1 - cos ξ)/ξ² rewritten with the half-angle identity.
            const double s = std::sin(0.5 * ax) / (0.5 * ax);
            return 0.5 * s * s;
        }
    }
}

}  // namespace erkn
