#include "erkn/system.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "erkn/errors.hpp"

namespace erkn {
namespace {

double block_energy(const OscillatorySystem& sys, const State& s, std::size_t j) {
    const std::size_t off = sys.offset(j);
    const std::size_t dim = sys.blocks()[j].dim;
    const double w = sys.omega(j);
    double kin = 0.0;
    double pot = 0.0;
    for (std::size_t i = off; i < off + dim; ++i) {
        kin += s.p[i] * s.p[i];
        pot += s.q[i] * s.q[i];
    }
    return 0.5 * (kin + w * w * pot);
}

}  // namespace

OscillatorySystem::OscillatorySystem(double epsilon, std::vector<FrequencyBlock> blocks,
                                     PotentialFn potential, GradientFn gradient)
    : epsilon_(epsilon),
      blocks_(std::move(blocks)),
      potential_(std::move(potential)),
      gradient_(std::move(gradient)) {
    if (!(epsilon_ > 0.0) || !std::isfinite(epsilon_))
        throw DomainError("OscillatorySystem: epsilon must be positive and finite");
    if (blocks_.empty() || blocks_.front().lambda != 0.0)
        throw DomainError("OscillatorySystem: block 0 must have lambda = 0");
    for (std::size_t j = 1; j < blocks_.size(); ++j) {
        const double lj = blocks_[j].lambda;
        if (!std::isfinite(lj) || lj < 1.0)
            throw DomainError("OscillatorySystem: lambda_" + std::to_string(j) + " must be >= 1");
        if (blocks_[j].dim == 0)
            throw DomainError("OscillatorySystem: oscillatory block " + std::to_string(j) +
                              " has dim 0");
        for (std::size_t i = 1; i < j; ++i)
            if (blocks_[i].lambda == lj)
                throw DomainError("OscillatorySystem: lambdas must be distinct");
    }
    if (!potential_ || !gradient_)
        throw DomainError("OscillatorySystem: potential and gradient are required");
    offsets_.reserve(blocks_.size());
    for (const auto& b : blocks_) {
        offsets_.push_back(dimension_);
        dimension_ += b.dim;
    }
}

std::vector<double> OscillatorySystem::lambdas() const {
    std::vector<double> out;
    out.reserve(num_oscillatory());
    for (std::size_t j = 1; j < blocks_.size(); ++j) out.push_back(blocks_[j].lambda);
    return out;
}

double OscillatorySystem::potential(std::span<const double> q) const {
    if (q.size() != dimension_) throw ShapeError("potential: q has wrong length");
    return potential_(q);
}

void OscillatorySystem::force(std::span<const double> q, std::span<double> out) const {
    if (q.size() != dimension_ || out.size() != dimension_)
        throw ShapeError("force: q or output has wrong length");
    gradient_(q, out);
    for (double& v : out) v = -v;
}

void OscillatorySystem::check_state(const State& s) const {
    if (s.q.size() != dimension_ || s.p.size() != dimension_)
        throw ShapeError("state has dimension (" + std::to_string(s.q.size()) + ", " +
                         std::to_string(s.p.size()) + "), system has " +
                         std::to_string(dimension_));
}

double total_energy(const OscillatorySystem& sys, const State& s) {
    sys.check_state(s);
    double h = 0.0;
    for (std::size_t j = 0; j < sys.blocks().size(); ++j) h += block_energy(sys, s, j);
    return h + sys.potential(s.q);
}

double oscillatory_energy(const OscillatorySystem& sys, const State& s, std::size_t j) {
    if (j == 0 || j > sys.num_oscillatory())
        throw IndexError("oscillatory_energy: block index " + std::to_string(j) +
                         " not in [1, " + std::to_string(sys.num_oscillatory()) + "]");
    sys.check_state(s);
    return block_energy(sys, s, j);
}

double total_oscillatory_energy(const OscillatorySystem& sys, const State& s) {
    sys.check_state(s);
    double total = 0.0;
    for (std::size_t j = 1; j < sys.blocks().size(); ++j) total += block_energy(sys, s, j);
    return total;
}

double weighted_oscillatory_energy(const OscillatorySystem& sys, const State& s,
                                   std::span<const double> mu) {
    if (mu.size() != sys.num_oscillatory())
        throw ShapeError("weighted_oscillatory_energy: mu has length " +
                         std::to_string(mu.size()) + ", expected " +
                         std::to_string(sys.num_oscillatory()));
    sys.check_state(s);
    double total = 0.0;
    for (std::size_t j = 1; j < sys.blocks().size(); ++j)
        total += mu[j - 1] / sys.blocks()[j].lambda * block_energy(sys, s, j);
    return total;
}

double slow_kinetic_energy(const OscillatorySystem& sys, const State& s) {
    sys.check_state(s);
    return block_energy(sys, s, 0);
}

}  // namespace erkn
