#pragma once

#include <stdexcept>
#include <string>

namespace rfph {

// Base class for all failures raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Constant solving did not converge; carries the final residual in the message.
struct solver_failure : error {
    solver_failure(const std::string& what, double residual)
        : error(what), final_residual(residual) {}
    double final_residual;
};

// A constructed profile violates positivity, slope, or pole-root requirements.
struct invalid_profile : error {
    using error::error;
};

// Root bracketing failed (no sign change over the search interval).
struct bracketing_error : error {
    using error::error;
};

// Flow state became unusable (psi <= 0 somewhere).
struct degenerate_state : error {
    using error::error;
};

// Time step exceeds the parabolic stability guard.
struct stiffness_error : error {
    using error::error;
};

// Requested sample coordinate lies outside the snapshot domain.
struct out_of_domain : error {
    using error::error;
};

// A simplex below the filtration dimension has no d-coface.
struct ill_posed_filtration : error {
    using error::error;
};

// Filtration fails monotonicity; names the offending face/coface pair.
struct validation_error : error {
    using error::error;
};

// Simplices fed to the reducer are not in filtration order.
struct ordering_error : error {
    using error::error;
};

// Too few samples to classify a singularity trend.
struct insufficient_data : error {
    using error::error;
};

} // namespace rfph
