#pragma once

#include <stdexcept>
#include <string>

namespace moyal {

// Base class for everything thrown by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid arguments or violated type invariants. The CLI maps these to exit 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A runtime numerical guard tripped (pole bands, boundary decay, coverage, ...).
// The CLI maps these to exit 3; the message always names the guard.
class NumericGuard : public Error {
public:
    NumericGuard(std::string guard, const std::string& detail)
        : Error(guard + ": " + detail), guard_(std::move(guard)) {}
    const std::string& guard() const noexcept { return guard_; }

private:
    std::string guard_;
};

#define MOYAL_GUARD_TYPE(Name, tag)                                          \
    class Name : public NumericGuard {                                       \
    public:                                                                  \
        explicit Name(const std::string& detail) : NumericGuard(tag, detail) {} \
    };

MOYAL_GUARD_TYPE(PoleGuard, "pole-guard")
MOYAL_GUARD_TYPE(BoundaryDecayGuard, "boundary-decay")
MOYAL_GUARD_TYPE(GridMismatchGuard, "grid-mismatch")
MOYAL_GUARD_TYPE(StencilGuard, "stencil-width")
MOYAL_GUARD_TYPE(CoverageGuard, "coverage")
MOYAL_GUARD_TYPE(StepUnderflowGuard, "step-underflow")
MOYAL_GUARD_TYPE(WronskianGuard, "wronskian-drift")
MOYAL_GUARD_TYPE(ResidualGuard, "residual-bound")
MOYAL_GUARD_TYPE(PositivityGuard, "rho-positivity")
MOYAL_GUARD_TYPE(QuadratureGuard, "quadrature")
MOYAL_GUARD_TYPE(BranchGuard, "branch-selection")
MOYAL_GUARD_TYPE(ClipGuard, "resample-clip")

#undef MOYAL_GUARD_TYPE

} // namespace moyal
