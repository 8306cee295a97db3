#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tauber/rational.hpp"

namespace tauber {

// Numerical spot-checks of the analytic ingredients behind the Tauberian
// argument: the fractional-power Laplace identity, the smoothing-kernel
// limit, and the reduction of a Dirichlet series to the Laplace transform of
// its coefficient step function.

struct KernelCheckSpec {
    std::vector<double> s_samples{1.5, 2.0};
    std::vector<double> v_grid{50.0, 100.0, 200.0};
    double truncation_u = 0.0;  // 0 = derive U from the analytic tail bound
    double quad_tol = 1e-10;
};

// Residual of (s-1)^{-alpha} = Gamma(alpha)^{-1} int_0^inf e^{-(s-1)u}
// u^{alpha-1} du, the integral truncated at U and evaluated by adaptive
// quadrature (the u^{alpha-1} endpoint singularity is removed by the
// substitution u = w^{1/alpha} on [0,1]). Requires s > 1, alpha > 0.
double laplace_identity_check(double alpha, double s, const KernelCheckSpec& spec);

// Fejer-type kernel Phi(u) = (sin u / u)^2. Safe at u = 0.
double fejer_kernel(double u);

// Kernel mass under the lambda = (2 pi)^{-1/2} Lebesgue normalization:
// int Phi d lambda = pi / sqrt(2 pi) = sqrt(pi/2).
double fejer_mass_lambda();

// For each v in spec.v_grid, the normalized value
//   v^{1-alpha} int_0^inf Phi(v-u) u^{alpha-1} du / int_R Phi d lambda,
// which tends to 1 as v grows. Requires 0 < alpha < 2 (the truncation-tail
// handling assumes it). Returns (v, value) pairs in grid order.
std::vector<std::pair<double, double>> kernel_limit_check(double alpha,
                                                          const KernelCheckSpec& spec);

// Cross-checks F(s) = int_0^inf f(u) e^{-su} du = (1/s) L(s) for the step
// function f(u) = sum_n a_n [u >= log n], a_n = c^Omega(n), everything
// truncated at n <= n_trunc: closed-form sum, direct Dirichlet sum, and
// piecewise quadrature of the step function. Returns the maximum pairwise
// discrepancy. Requires s > 1.
double laplace_of_step_check(const Rational& c, double s, std::uint64_t n_trunc,
                             const KernelCheckSpec& spec);

}  // namespace tauber
