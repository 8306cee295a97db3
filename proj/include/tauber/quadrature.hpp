#pragma once

#include <functional>

namespace tauber {

// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
// Throws numeric_error when the recursion cannot reach the tolerance.
double integrate(const std::function<double(double)>& f, double a, double b, double tol);

// Same, but [a, b] is first cut into panels of width <= max_panel and each
// panel integrated adaptively with its share of tol. Used for integrands
// whose oscillation a single Simpson estimate would step over.
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        double max_panel, double tol);

}  // namespace tauber
