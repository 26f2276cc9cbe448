#pragma once

// Physical constants in natural grid units. Defaults follow the library's
// units policy: hbar = m = e = 1, c = 1000 (tunable so the low-velocity
// regime and the size of relativistic corrections can be dialed).
// Newton's constant is fixed to 1 and never appears explicitly.

#include <cmath>

#include "abgrav/errors.hpp"

namespace abgrav {

struct Constants {
    double hbar = 1.0;   // action scale
    double c = 1000.0;   // speed of light
    double mass = 1.0;   // particle mass
    double charge = 1.0; // particle charge

    void validate() const {
        auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
        if (!ok(hbar))
            throw DomainError("Constants: hbar must be positive and finite");
        if (!ok(c))
            throw DomainError("Constants: c must be positive and finite");
        if (!ok(mass))
            throw DomainError("Constants: mass must be positive and finite");
        if (!ok(charge))
            throw DomainError("Constants: charge must be positive and finite");
    }

    double rest_energy() const { return mass * c * c; }
};

} // namespace abgrav
