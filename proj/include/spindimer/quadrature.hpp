#pragma once
#include <functional>

#include "spindimer/errors.hpp"

namespace spindimer {

// Adaptive Simpson integration of f over [a, b]. Bisection recursion is capped
// at max_levels; if the local error estimate is still above tolerance there,
// QuadratureFailure is thrown.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-10, int max_levels = 40);

} // namespace spindimer
