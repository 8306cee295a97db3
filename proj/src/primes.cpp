#include "tauber/primes.hpp"

#include <cmath>
#include <limits>
#include <new>

#include "tauber/errors.hpp"

namespace tauber {

std::uint64_t isqrt(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
    if (limit < 2) return {};
    if (limit > std::numeric_limits<std::uint32_t>::max())
        throw numeric_error("primes_up_to: limit exceeds 32-bit range");
    std::vector<std::uint8_t> composite;
    try {
        composite.assign(limit + 1, 0);
    } catch (const std::bad_alloc&) {
        throw numeric_error("primes_up_to: sieve does not fit in memory");
    }
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) primes.push_back(static_cast<std::uint32_t>(i));
    return primes;
}

}  // namespace tauber
