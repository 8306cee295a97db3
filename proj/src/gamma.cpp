#include "tauber/gamma.hpp"

#include <cmath>
#include <numbers>

#include "tauber/errors.hpp"

namespace tauber {

namespace {

// Godfrey's g = 7, n = 9 Lanczos coefficients.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,    -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_gamma(double x) {
    // Valid for x >= 0.5.
    x -= 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x + i);
    const double t = x + kLanczosG + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

}  // namespace

double gamma(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw numeric_error("gamma: argument must be a positive real");
    if (alpha >= 0.5) return lanczos_gamma(alpha);
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x); 1 - alpha >= 0.5 here.
    return std::numbers::pi / (std::sin(std::numbers::pi * alpha) * lanczos_gamma(1.0 - alpha));
}

double zeta2() { return std::numbers::pi * std::numbers::pi / 6.0; }

}  // namespace tauber
