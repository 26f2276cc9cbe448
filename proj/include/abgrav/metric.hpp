#pragma once

// Weak-field Schwarzschild parameters for one constant-altitude segment.
// G = 1 throughout; c comes from Constants wherever a factor of the metric
// is evaluated.

#include "abgrav/constants.hpp"
#include "abgrav/errors.hpp"

namespace abgrav {

struct MetricParams {
    double M = 0.0; // central mass
    double R = 1.0; // areal radius of the constant-altitude segment

    void validate() const {
        if (!(R > 0.0))
            throw DomainError("MetricParams: R must be positive");
        if (!(M >= 0.0))
            throw DomainError("MetricParams: M must be non-negative");
    }

    // Dimensionless field strength M/(R c^2).
    double compactness(const Constants& constants) const {
        return M / (R * constants.c * constants.c);
    }

    // Weak-field validity proxy.
    bool weak_field_ok(const Constants& constants) const {
        return compactness(constants) < 0.1;
    }

    void require_weak_field(const Constants& constants) const {
        validate();
        if (!weak_field_ok(constants))
            throw DomainError(
                "MetricParams: M/(R c^2) >= 0.1, outside the weak-field regime");
    }
};

enum class RedshiftMode { Exact, WeakField };

} // namespace abgrav
