#include "erkn/scheme.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "erkn/errors.hpp"
#include "erkn/phi.hpp"

namespace erkn {

ErknScheme builtin_scheme(std::string_view name) {
    // φ_j(V/4) is φ_j evaluated at ξ/2.
    if (name == "ERKN1") {
        return {"ERKN1", 0.5, [](double xi) { return phi(0, 0.5 * xi); },
                [](double xi) { return phi(2, xi); }};
    }
    if (name == "ERKN2") {
        return {"ERKN2", 0.5,
                [](double xi) {
                    const double c = phi(0, 0.5 * xi);
                    return c * c * c;
                },
                [](double xi) { return 0.5 * phi(0, 0.5 * xi) * phi(1, xi); }};
    }
    if (name == "ERKN3") {
        return {"ERKN3", 0.5, [](double xi) { return phi(0, 0.5 * xi); },
                [](double xi) { return 0.5 * phi(1, 0.5 * xi); }};
    }
    if (name == "ERKN4") {
        return {"ERKN4", 0.5, [](double xi) { return phi(1, xi) * phi(0, 0.5 * xi); },
                [](double xi) { return 0.5 * phi(1, xi) * phi(1, 0.5 * xi); }};
    }
    throw LookupError("unknown scheme '" + std::string(name) + "' (expected ERKN1..ERKN4)");
}

const std::vector<std::string>& builtin_scheme_names() {
    static const std::vector<std::string> names{"ERKN1", "ERKN2", "ERKN3", "ERKN4"};
    return names;
}

double sigma(const ErknScheme& scheme, double xi) {
    const double b1 = scheme.b1(xi);
    const double bbar1 = scheme.bbar1(xi);
    if (std::fabs(b1) < kSigmaSingularityThreshold ||
        std::fabs(bbar1) < kSigmaSingularityThreshold) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "sigma: " << scheme.name << " coefficient vanishes at xi = " << xi;
        throw SingularityError(msg.str(), xi);
    }
    const double s = sinc(xi);
    return s * std::cos(0.5 * xi) / (2.0 * bbar1) +
           xi * xi * s * (0.5 * sinc(0.5 * xi)) / (2.0 * b1);
}

}  // namespace erkn
