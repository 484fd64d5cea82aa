#pragma once

#include "moyal/errors.hpp"

namespace moyal {

// Physical constants shared by the star algebra and the oscillator machinery.
// hbar = 0 is accepted deliberately: it is the classical-limit contract
// (star products collapse to pointwise products). All physical models keep
// hbar > 0.
struct PhysContext {
    double hbar = 1.0;
    double omega_cap = 1.0; // the constant Omega of the scaled oscillator

    PhysContext() = default;
    PhysContext(double hbar_, double omega_cap_) : hbar(hbar_), omega_cap(omega_cap_) {
        validate();
    }

    void validate() const {
        if (!(hbar >= 0.0))
            throw ValidationError("PhysContext: hbar must be >= 0");
        if (!(omega_cap > 0.0))
            throw ValidationError("PhysContext: omega_cap must be > 0");
    }
};

} // namespace moyal
