#pragma once

#include <stdexcept>
#include <string>

namespace photonfield {

struct ZeroWavevector : std::domain_error {
    ZeroWavevector() : std::domain_error("wavevector has zero norm") {}
};

struct SingularAxis : std::domain_error {
    explicit SingularAxis(const std::string& what) : std::domain_error(what) {}
};

struct NonPositiveRadius : std::domain_error {
    explicit NonPositiveRadius(double r)
        : std::domain_error("radius must be positive, got " + std::to_string(r)) {}
};

struct UnsupportedAlpha : std::domain_error {
    explicit UnsupportedAlpha(double alpha)
        : std::domain_error("alpha outside (0,3): " + std::to_string(alpha)) {}
};

struct QuadratureBudgetExceeded : std::runtime_error {
    double achieved_error;
    explicit QuadratureBudgetExceeded(double achieved, const std::string& what)
        : std::runtime_error(what + " (achieved error estimate " + std::to_string(achieved) + ")"),
          achieved_error(achieved) {}
};

struct InsufficientSamples : std::invalid_argument {
    explicit InsufficientSamples(const std::string& what) : std::invalid_argument(what) {}
};

struct NonPositiveValues : std::invalid_argument {
    explicit NonPositiveValues(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptyLattice : std::invalid_argument {
    EmptyLattice() : std::invalid_argument("cutoff filter removed every lattice mode") {}
};

struct StateSpaceTooLarge : std::length_error {
    explicit StateSpaceTooLarge(const std::string& what) : std::length_error(what) {}
};

struct ModeBudgetExceeded : std::length_error {
    explicit ModeBudgetExceeded(const std::string& what) : std::length_error(what) {}
};

struct NonPositiveTemperature : std::domain_error {
    explicit NonPositiveTemperature(double theta)
        : std::domain_error("temperature must be positive, got " + std::to_string(theta)) {}
};

}  // namespace photonfield
