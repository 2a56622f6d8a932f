#pragma once

#include <stdexcept>

namespace ratsode {

// Specialization dropped degree or squarefreeness; caller resamples.
struct DegenerateSample : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSquarefree : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Singularity budget exceeded (negative genus): the curve cannot be irreducible.
struct ReducibleSuspected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BlowupDepthExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The t-equation is not of Riccati shape: movable critical points upstream.
struct FuchsViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ratsode
