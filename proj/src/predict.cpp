#include "tauber/predict.hpp"

#include <algorithm>
#include <cmath>

#include "tauber/errors.hpp"
#include "tauber/gamma.hpp"

namespace tauber {

double predict(const PoleData& pole, double x) {
    if (!(x >= 10.0))
        throw numeric_error("predict: X must be >= 10 (asymptotic regime only)");
    return pole.a * std::pow(x, pole.d) /
           (pole.d * gamma(pole.alpha) * std::pow(std::log(x), 1.0 - pole.alpha));
}

namespace {

int decade_of(std::uint64_t x) {
    // largest k with 10^k < x, i.e. x in (10^k, 10^(k+1)]
    int k = 0;
    std::uint64_t power = 10;
    while (power < x) {
        ++k;
        if (power > UINT64_MAX / 10) break;
        power *= 10;
    }
    return k;
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

AsymptoticReport compare(const PartialSumSeries& series, const PoleData& pole) {
    if (series.c != Rational(static_cast<long>(pole.l), static_cast<long>(pole.m)))
        throw numeric_error("compare: series and pole were built from different c");

    AsymptoticReport report;
    report.pole = pole;
    std::vector<std::pair<int, double>> deviations;  // (decade, |ratio - 1|)
    for (const PartialSumRow& row : series.rows) {
        if (row.x < 10) continue;
        const double prediction = predict(pole, static_cast<double>(row.x));
        const double ratio = row.s / prediction;
        report.rows.push_back({row.x, row.s, prediction, ratio});
        deviations.emplace_back(decade_of(row.x), std::fabs(ratio - 1.0));
    }

    for (std::size_t i = 0; i < deviations.size();) {
        const int decade = deviations[i].first;
        std::vector<double> bucket;
        while (i < deviations.size() && deviations[i].first == decade)
            bucket.push_back(deviations[i++].second);
        report.decade_stats.push_back({decade, bucket.size(), median(std::move(bucket))});
    }
    return report;
}

}  // namespace tauber
