#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tauber/rational.hpp"

namespace tauber {

// Bulk evaluation of Omega(n) (prime factors counted with multiplicity) with
// a segmented sieve, and checkpointed partial sums S(X) = sum_{n<=X} c^Omega(n).

struct SieveConfig {
    std::uint64_t x_max = 10'000'000;
    std::uint64_t segment_size = 1u << 20;
    Rational c = Rational(2, 3);                // weight base, in (0, 1]
    std::vector<std::uint64_t> checkpoints;     // strictly increasing, last <= x_max
};

struct PartialSumRow {
    std::uint64_t x;
    double s;             // S(x), compensation already folded in
    double compensation;  // running Neumaier compensation at this point
};

struct PartialSumSeries {
    std::vector<PartialSumRow> rows;
    Rational c;
    std::uint64_t x_max = 0;
};

// Progress record: everything needed to continue a run at n = next_n.
struct SieveState {
    std::uint64_t next_n = 1;
    double sum = 0.0;
    double compensation = 0.0;
};

// Omega(n) by trial division. The oracle the sieve is tested against.
unsigned omega_of(std::uint64_t n);

// Omega(n) for every n in [lo, hi], 2 <= lo <= hi. base_primes must contain
// every prime <= sqrt(hi) (ascending), else throws. The two-span overload
// reuses caller scratch: cofactor[i] ends up as the unfactored part of n
// (1, or a single prime > sqrt(hi)).
void sieve_omega_segment(std::uint64_t lo, std::uint64_t hi,
                         std::span<const std::uint32_t> base_primes,
                         std::span<std::uint8_t> omega,
                         std::span<std::uint64_t> cofactor);
std::vector<std::uint8_t> sieve_omega_segment(std::uint64_t lo, std::uint64_t hi,
                                              std::span<const std::uint32_t> base_primes);

// Geometric checkpoint grid: round(10^{k/per_decade}) for every k with value
// in [10, x_max], deduplicated and sorted, with x_max appended.
std::vector<std::uint64_t> checkpoint_grid(std::uint64_t x_max, unsigned per_decade);

// c^k for k = 0 .. floor(log2 x_max), each exact rational power rounded to
// double once. floor(log2 x_max) bounds Omega(n) for n <= x_max.
std::vector<double> power_table(const Rational& c, std::uint64_t x_max);

// Called after each finished segment with the updated state and the rows
// completed inside that segment. Return false to stop early (the simulated
// interruption used by resume tests); the partial series is then returned.
using SegmentCallback =
    std::function<bool(const SieveState&, std::span<const PartialSumRow>)>;

// S(X) at every checkpoint, accumulated in ascending n with Neumaier
// compensation. The order of floating-point operations is fixed, so results
// are bit-identical for any segment_size. Pass `resume` to continue from a
// previously recorded state; checkpoints below resume->next_n are assumed
// already emitted and are skipped.
PartialSumSeries partial_sums(const SieveConfig& config);
PartialSumSeries partial_sums(const SieveConfig& config, const SegmentCallback& on_segment,
                              const SieveState* resume);

// Resume file: one line "next_n sum compensation", round-trippable decimals.
SieveState read_sieve_state(const std::string& path);
void write_sieve_state(const std::string& path, const SieveState& state);

}  // namespace tauber
