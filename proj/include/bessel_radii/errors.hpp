#pragma once

#include <stdexcept>
#include <string>

namespace bessel_radii {

// Raised when an argument lies outside the admissible window of an operation
// (order below the map's window, alpha outside [0,1), probe outside range...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A bracketed or iterative computation did not converge within its budget.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Evaluation too close to a pole of a quotient or a partial-fraction sum.
class singularity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bessel_radii
