#include "erkn/harness.hpp"

#include <cmath>
#include <numeric>

#include "erkn/errors.hpp"

namespace erkn {

std::vector<double> paper_lambda() { return {1.0, kSqrt2, 2.0}; }

std::vector<std::size_t> paper_dims() { return {2, 1, 1}; }

std::vector<double> paper_potential_coeffs() { return {0.001, 1.0, 1.0, 1.0, 1.0}; }

OscillatorySystem make_quartic_system(double epsilon, std::vector<double> lambda,
                                      std::vector<std::size_t> dims, std::vector<double> coeffs) {
    if (lambda.size() != dims.size())
        throw ShapeError("make_quartic_system: lambda and dims differ in length");
    std::vector<FrequencyBlock> blocks{{0.0, 1}};
    for (std::size_t j = 0; j < lambda.size(); ++j) blocks.push_back({lambda[j], dims[j]});
    const std::size_t d = 1 + std::accumulate(dims.begin(), dims.end(), std::size_t{0});
    if (coeffs.size() != d)
        throw ShapeError("make_quartic_system: potential_coeffs must have " + std::to_string(d) +
                         " entries");

    auto inner = [coeffs](std::span<const double> q) {
        double s = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) s += coeffs[i] * q[i];
        return s;
    };
    auto potential = [inner](std::span<const double> q) {
        const double s = inner(q);
        return (s * s) * (s * s);
    };
    auto gradient = [inner, coeffs](std::span<const double> q, std::span<double> grad) {
        const double s = inner(q);
        const double ds = 4.0 * s * s * s;
        for (std::size_t i = 0; i < q.size(); ++i) grad[i] = ds * coeffs[i];
    };
    return OscillatorySystem(epsilon, std::move(blocks), potential, gradient);
}

State paper_initial_state(double epsilon) {
    return {{1.0, 0.3 * epsilon, 0.8 * epsilon, -1.1 * epsilon, 0.7 * epsilon},
            {-0.75, 0.6, 0.7, -0.9, 0.8}};
}

ProblemSetup build_paper_system(double epsilon_inv) {
    if (!(epsilon_inv > 0.0)) throw DomainError("build_paper_system: omega must be positive");
    const double eps = 1.0 / epsilon_inv;
    return {make_quartic_system(eps, paper_lambda(), paper_dims(), paper_potential_coeffs()),
            paper_initial_state(eps)};
}

}  // namespace erkn
