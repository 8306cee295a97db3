#include "tauber/kernels.hpp"

#include <cmath>
#include <numbers>

#include "tauber/errors.hpp"
#include "tauber/gamma.hpp"
#include "tauber/primes.hpp"
#include "tauber/quadrature.hpp"
#include "tauber/sieve.hpp"
#include "tauber/summation.hpp"

namespace tauber {

namespace {

// Smallest power-of-two U with e^{-(s-1)U} U^alpha (1 + 1/(s-1)) < 1e-12,
// which keeps the dropped Laplace tail below the reporting threshold.
double auto_truncation(double alpha, double s) {
    const double margin = 1.0 + 1.0 / (s - 1.0);
    for (double u = 2.0; u < 1e18; u *= 2.0)
        if (std::exp(-(s - 1.0) * u) * std::pow(u, alpha) * margin < 1e-12) return u;
    throw numeric_error("laplace check: cannot satisfy the truncation bound");
}

}  // namespace

double laplace_identity_check(double alpha, double s, const KernelCheckSpec& spec) {
    if (!(alpha > 0.0)) throw numeric_error("laplace check: alpha must be positive");
    if (!(s > 1.0)) throw numeric_error("laplace check: s must exceed 1");
    const double u_max = spec.truncation_u > 0.0 ? spec.truncation_u : auto_truncation(alpha, s);
    const double rate = s - 1.0;

    // On [0, min(1, U)] substitute u = w^{1/alpha}: u^{alpha-1} du = dw / alpha,
    // which removes the endpoint singularity for alpha < 1.
    const double split = std::min(1.0, u_max);
    const double head = integrate(
                            [&](double w) { return std::exp(-rate * std::pow(w, 1.0 / alpha)); },
                            0.0, std::pow(split, alpha), spec.quad_tol) /
                        alpha;
    const double tail =
        u_max > 1.0
            ? integrate([&](double u) { return std::exp(-rate * u) * std::pow(u, alpha - 1.0); },
                        1.0, u_max, spec.quad_tol)
            : 0.0;

    return std::fabs((head + tail) / gamma(alpha) - std::pow(rate, -alpha));
}

double fejer_kernel(double u) {
    const double x = std::fabs(u);
    if (x < 1e-6) {
        const double x2 = x * x;
        return 1.0 - x2 / 3.0 + 2.0 * x2 * x2 / 45.0;
    }
    const double ratio = std::sin(x) / x;
    return ratio * ratio;
}

double fejer_mass_lambda() { return std::sqrt(std::numbers::pi / 2.0); }

std::vector<std::pair<double, double>> kernel_limit_check(double alpha,
                                                          const KernelCheckSpec& spec) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw numeric_error("kernel limit: alpha must lie in (0, 2)");
    for (std::size_t i = 0; i < spec.v_grid.size(); ++i) {
        if (!(spec.v_grid[i] > 1.0))
            throw numeric_error("kernel limit: v must exceed 1");
        if (i > 0 && !(spec.v_grid[i] > spec.v_grid[i - 1]))
            throw numeric_error("kernel limit: v grid must be increasing");
    }

    std::vector<std::pair<double, double>> result;
    result.reserve(spec.v_grid.size());
    for (const double v : spec.v_grid) {
        // Cut at U - v = 400 pi, a zero of sin(2(u - v)), so the oscillating
        // half of the dropped tail is O(U^{alpha-1} (U-v)^{-2}) after one
        // integration by parts.
        const double u_max = v + 400.0 * std::numbers::pi;

        const double head =
            integrate([&](double w) { return fejer_kernel(v - std::pow(w, 1.0 / alpha)); },
                      0.0, 1.0, spec.quad_tol) /
            alpha;
        const double mid = integrate_panels(
            [&](double u) { return fejer_kernel(v - u) * std::pow(u, alpha - 1.0); }, 1.0,
            u_max, 1.0, spec.quad_tol);

        // Smooth half of the tail: Phi(x) = (1 - cos 2x)/(2x^2), and
        // int_U^inf u^{alpha-1}/(2(u-v)^2) du becomes, via w = 1/(u-v) and
        // then w = z^{1/(2-alpha)}, a bounded integrand on a short interval.
        const double b = std::pow(1.0 / (u_max - v), 2.0 - alpha);
        const double tail = integrate(
                                [&](double z) {
                                    const double w = std::pow(z, 1.0 / (2.0 - alpha));
                                    return std::pow(1.0 + v * w, alpha - 1.0);
                                },
                                0.0, b, spec.quad_tol) /
                            (2.0 * (2.0 - alpha));

        const double total = head + mid + tail;
        const double dropped =
            std::pow(u_max, alpha - 1.0) / (4.0 * (u_max - v) * (u_max - v));
        if (!(dropped < 1e-4 * total))
            throw numeric_error("kernel limit: truncation bound too coarse at v = " +
                                std::to_string(v));

        const double value = std::pow(v, 1.0 - alpha) *
                             (total / std::sqrt(2.0 * std::numbers::pi)) / fejer_mass_lambda();
        result.emplace_back(v, value);
    }
    return result;
}

double laplace_of_step_check(const Rational& c, double s, std::uint64_t n_trunc,
                             const KernelCheckSpec& spec) {
    if (!(s > 1.0)) throw numeric_error("laplace of step: s must exceed 1");
    if (n_trunc == 0) throw numeric_error("laplace of step: truncation must be >= 1");

    const std::vector<double> table = power_table(c, n_trunc);
    std::vector<std::uint8_t> omega;
    if (n_trunc >= 2) {
        const auto base = primes_up_to(isqrt(n_trunc));
        omega = sieve_omega_segment(2, n_trunc, base);
    }
    const auto weight = [&](std::uint64_t n) {
        return n == 1 ? table[0] : table[omega[n - 2]];
    };

    NeumaierSum exp_form;    // a_n e^{-s log n}
    NeumaierSum power_form;  // a_n n^{-s}
    NeumaierSum quad_form;   // quadrature between consecutive jumps of the step
    NeumaierSum step;        // running S_n = sum_{k<=n} a_k
    const double interval_tol = spec.quad_tol / static_cast<double>(n_trunc);
    for (std::uint64_t n = 1; n <= n_trunc; ++n) {
        const double a = weight(n);
        exp_form.add(a * std::exp(-s * std::log(static_cast<double>(n))));
        power_form.add(a * std::pow(static_cast<double>(n), -s));
        step.add(a);
        if (n < n_trunc) {
            const double lo = std::log(static_cast<double>(n));
            const double hi = std::log(static_cast<double>(n + 1));
            const double level = step.value();
            quad_form.add(level *
                          integrate([&](double u) { return std::exp(-s * u); }, lo, hi,
                                    interval_tol));
        }
    }
    // Beyond log(n_trunc) the truncated step stays at S_N; that tail of the
    // Laplace integral is exact.
    const double s_n = step.value();
    const double closed = exp_form.value() / s;
    const double dirichlet = power_form.value() / s;
    const double quad =
        quad_form.value() + s_n * std::pow(static_cast<double>(n_trunc), -s) / s;

    const double d1 = std::fabs(closed - dirichlet);
    const double d2 = std::fabs(closed - quad);
    const double d3 = std::fabs(dirichlet - quad);
    return std::max({d1, d2, d3});
}

}  // namespace tauber
