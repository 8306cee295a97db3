#pragma once

#include <cstdint>
#include <vector>

namespace tauber {

// All primes <= limit, ascending. Plain Eratosthenes; limit must fit the
// byte sieve in memory (throws otherwise). Desk-scale cutoffs (<= 1e7 for
// products, sqrt(x_max) for the segmented sieve) stay far below that.
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

// Integer floor square root.
std::uint64_t isqrt(std::uint64_t n);

}  // namespace tauber
