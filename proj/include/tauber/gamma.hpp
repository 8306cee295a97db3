#pragma once

namespace tauber {

// Gamma function on the positive real axis, accurate to ~15 significant
// digits (Lanczos approximation, g = 7). Throws for alpha <= 0; the poles
// are out of scope here.
double gamma(double alpha);

// zeta(2) = pi^2 / 6 to machine precision.
double zeta2();

}  // namespace tauber
