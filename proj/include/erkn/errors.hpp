#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace erkn {

/// Argument outside the mathematical domain (non-finite input, empty candidate set).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Requested φ order not supported by the kernel.
class UnsupportedOrderError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Vector lengths disagree with the system's block layout.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class LookupError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Enumeration would exceed the supported size.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A σ coefficient denominator vanished; carries the offending ξ.
class SingularityError : public std::domain_error {
public:
    SingularityError(const std::string& what, double xi) : std::domain_error(what), xi_(xi) {}
    [[nodiscard]] double xi() const noexcept { return xi_; }

private:
    double xi_;
};

/// The numerical solution left the finite (or bounded) region at `step_index`.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& what, std::size_t step_index)
        : std::runtime_error(what), step_index_(step_index) {}
    [[nodiscard]] std::size_t step_index() const noexcept { return step_index_; }

private:
    std::size_t step_index_;
};

}  // namespace erkn
