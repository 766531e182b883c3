#include "erkn/conditions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "erkn/errors.hpp"
#include "erkn/phi.hpp"

namespace erkn {
namespace {

std::string grid_description() {
    std::ostringstream os;
    os << kGridPoints << " uniform points on [" << kGridLo << ", " << kGridHi << "]";
    return os.str();
}

}  // namespace

std::vector<double> condition_grid() {
    std::vector<double> xs(kGridPoints);
    for (int i = 0; i < kGridPoints; ++i)
        xs[i] = kGridLo + (kGridHi - kGridLo) * i / (kGridPoints - 1);
    return xs;
}

ConditionReport check_order2(const ErknScheme& scheme) {
    constexpr std::array<double, 4> xs{1e-1, 1e-2, 1e-3, 1e-4};
    constexpr double stabilization = 1e-2;

    std::array<std::array<double, 4>, 3> ratio{};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double xi = xs[i];
        const double b1 = scheme.b1(xi);
        const double bbar1 = scheme.bbar1(xi);
        ratio[0][i] = (b1 - phi(1, xi)) / (xi * xi);
        ratio[1][i] = (scheme.c1 * b1 - phi(2, xi)) / xi;
        ratio[2][i] = (bbar1 - phi(2, xi)) / xi;
    }

    ConditionReport r{"order2", 0.0, "xi = 1e-1, 1e-2, 1e-3, 1e-4", stabilization, true, ""};
    constexpr std::array<const char*, 3> labels{"(b1-phi1)/xi^2", "(c1*b1-phi2)/xi",
                                                "(bbar1-phi2)/xi"};
    std::ostringstream note;
    note.precision(6);
    for (std::size_t c = 0; c < 3; ++c) {
        const double last = ratio[c][3];
        const double prev = ratio[c][2];
        const bool ok = std::isfinite(last) &&
                        std::fabs(last - prev) <= stabilization * std::max(1.0, std::fabs(prev));
        r.passed = r.passed && ok;
        r.max_residual = std::max(r.max_residual, std::isfinite(last)
                                                      ? std::fabs(last)
                                                      : std::numeric_limits<double>::infinity());
        note << (c ? "; " : "") << labels[c] << " -> " << last << (ok ? "" : " (unbounded)");
    }
    r.note = note.str();
    return r;
}

ConditionReport check_symmetry(const ErknScheme& scheme) {
    ConditionReport r{"symmetric", 0.0, grid_description(), kIdentityTolerance, false, ""};
    const double c1 = scheme.c1;
    for (double xi : condition_grid()) {
        const double b1 = scheme.b1(xi);
        const double bbar1 = scheme.bbar1(xi);
        const double first = bbar1 - (phi(1, xi) * b1 - phi(0, xi) * bbar1);
        const double second = phi(0, c1 * xi) * bbar1 - c1 * phi(1, c1 * xi) * b1;
        r.max_residual = std::max({r.max_residual, std::fabs(first), std::fabs(second)});
    }
    const bool half = c1 == 0.5;
    r.passed = half && r.max_residual <= r.tolerance;
    r.note = half ? "c1 = 1/2" : "c1 != 1/2";
    return r;
}

ConditionReport check_symplecticity(const ErknScheme& scheme) {
    ConditionReport r{"symplectic", 0.0, grid_description(), kIdentityTolerance, false, ""};
    const double c1 = scheme.c1;
    const double d1 = scheme.b1(0.0);
    for (double xi : condition_grid()) {
        const double b1 = scheme.b1(xi);
        const double bbar1 = scheme.bbar1(xi);
        const double v = xi * xi;
        const double first = phi(0, xi) * b1 + v * phi(1, xi) * bbar1 - d1 * phi(0, c1 * xi);
        const double second = phi(1, xi) * b1 - phi(0, xi) * bbar1 - c1 * d1 * phi(1, c1 * xi);
        r.max_residual = std::max({r.max_residual, std::fabs(first), std::fabs(second)});
    }
    r.passed = r.max_residual <= r.tolerance;
    std::ostringstream note;
    note.precision(17);
    note << "d1 = b1(0) = " << d1;
    r.note = note.str();
    return r;
}

ConditionReport check_newcond(const ErknScheme& scheme) {
    ConditionReport r{"newcond", 0.0, grid_description(), kIdentityTolerance, false, ""};
    for (double xi : condition_grid()) {
        try {
            r.max_residual = std::max(r.max_residual, std::fabs(sigma(scheme, xi) - 1.0));
        } catch (const SingularityError& e) {
            r.max_residual = std::numeric_limits<double>::infinity();
            r.note = e.what();
            break;
        }
    }
    r.passed = r.max_residual <= r.tolerance;
    return r;
}

double coefficient_bound_ratio(const ErknScheme& scheme) {
    double worst = 0.0;
    for (double xi : condition_grid())
        worst = std::max(worst, std::fabs(scheme.b1(xi)) / std::fabs(sinc(0.5 * xi)));
    return worst;
}

}  // namespace erkn
