#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tauber/euler_product.hpp"
#include "tauber/sieve.hpp"

namespace tauber {

// Predicted main term A X^d / (d Gamma(alpha) (log X)^{1-alpha}) and the
// comparison of sieved partial sums against it.

// Requires X >= 10: near X = 1 the log power is degenerate and the
// asymptotic claim says nothing anyway.
double predict(const PoleData& pole, double x);

struct AsymptoticRow {
    std::uint64_t x;
    double s;
    double prediction;
    double ratio;  // s / prediction
};

// Decade k spans (10^k, 10^(k+1)].
struct DecadeStat {
    int decade;
    std::size_t count;
    double median_abs_dev;  // median of |ratio - 1| over the decade
};

struct AsymptoticReport {
    std::vector<AsymptoticRow> rows;
    std::vector<DecadeStat> decade_stats;
    PoleData pole;
};

// Per-checkpoint ratio S(X)/predict(X) plus per-decade medians of
// |ratio - 1|. Rows with X < 10 are outside the asymptotic regime and are
// dropped. The series and the pole must come from the same c (checked via
// c = l/m).
AsymptoticReport compare(const PartialSumSeries& series, const PoleData& pole);

}  // namespace tauber
