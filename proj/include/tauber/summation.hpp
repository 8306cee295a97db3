#pragma once

#ifdef __FAST_MATH__
#error "fast-math would defeat compensated summation; build without it"
#endif

#include <cmath>

namespace tauber {

// Neumaier-compensated accumulator. Adding terms in a fixed order gives
// reproducible, bit-identical sums; the compensation keeps the error below
// one ulp growth over very long accumulations.
struct NeumaierSum {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            compensation += (sum - t) + x;
        else
            compensation += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + compensation; }
};

}  // namespace tauber
