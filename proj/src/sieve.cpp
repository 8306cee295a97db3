#include "tauber/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <new>
#include <sstream>

#include "tauber/errors.hpp"
#include "tauber/io_format.hpp"
#include "tauber/primes.hpp"
#include "tauber/summation.hpp"

namespace tauber {

unsigned omega_of(std::uint64_t n) {
    if (n == 0) throw numeric_error("omega: n must be positive");
    unsigned count = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++count;
    }
    for (std::uint64_t p = 3; p <= n / p; p += 2) {
        while (n % p == 0) {
            n /= p;
            ++count;
        }
    }
    if (n > 1) ++count;
    return count;
}

namespace {

bool is_prime_by(std::span<const std::uint32_t> primes, std::uint64_t q) {
    for (std::uint32_t p : primes) {
        const std::uint64_t pp = p;
        if (pp * pp > q) break;
        if (q % pp == 0) return false;
    }
    return q >= 2;
}

// base must contain every prime <= r.
void require_base_cover(std::span<const std::uint32_t> base, std::uint64_t r) {
    if (r < 2) return;
    if (base.empty()) throw numeric_error("sieve segment: insufficient base primes");
    const std::uint64_t bmax = base.back();
    if (bmax >= r) return;
    if (bmax * bmax < r)
        throw numeric_error("sieve segment: insufficient base primes");
    for (std::uint64_t q = bmax + 1; q <= r; ++q)
        if (is_prime_by(base, q))
            throw numeric_error("sieve segment: insufficient base primes");
}

}  // namespace

void sieve_omega_segment(std::uint64_t lo, std::uint64_t hi,
                         std::span<const std::uint32_t> base_primes,
                         std::span<std::uint8_t> omega,
                         std::span<std::uint64_t> cofactor) {
    if (lo < 2 || lo > hi) throw numeric_error("sieve segment: need 2 <= lo <= hi");
    const std::size_t len = hi - lo + 1;
    if (omega.size() < len || cofactor.size() < len)
        throw numeric_error("sieve segment: scratch buffers too small");

    const std::uint64_t r = isqrt(hi);
    require_base_cover(base_primes, r);

    for (std::size_t i = 0; i < len; ++i) {
        omega[i] = 0;
        cofactor[i] = lo + i;
    }

    // For every prime power q = p^e <= hi, each multiple of q gains one
    // factor of p: visiting q, q^2, ... credits the full multiplicity and
    // strips cofactor down to its part coprime to all base primes.
    for (std::uint32_t p32 : base_primes) {
        const std::uint64_t p = p32;
        if (p > r) break;
        for (std::uint64_t q = p;;) {
            for (std::uint64_t x = ((lo + q - 1) / q) * q; x <= hi; x += q) {
                const std::size_t i = x - lo;
                ++omega[i];
                cofactor[i] /= p;
            }
            if (q > hi / p) break;
            q *= p;
        }
    }

    // Whatever survives is 1 or a single prime > sqrt(hi).
    for (std::size_t i = 0; i < len; ++i)
        if (cofactor[i] > 1) ++omega[i];
}

std::vector<std::uint8_t> sieve_omega_segment(std::uint64_t lo, std::uint64_t hi,
                                              std::span<const std::uint32_t> base_primes) {
    if (lo < 2 || lo > hi) throw numeric_error("sieve segment: need 2 <= lo <= hi");
    std::vector<std::uint8_t> omega(hi - lo + 1);
    std::vector<std::uint64_t> cofactor(hi - lo + 1);
    sieve_omega_segment(lo, hi, base_primes, omega, cofactor);
    return omega;
}

std::vector<std::uint64_t> checkpoint_grid(std::uint64_t x_max, unsigned per_decade) {
    if (per_decade == 0) throw numeric_error("checkpoint grid: per_decade must be >= 1");
    std::vector<std::uint64_t> grid;
    for (std::uint64_t k = per_decade;; ++k) {
        const double v = std::pow(10.0, static_cast<double>(k) / per_decade);
        if (v > static_cast<double>(x_max) * (1.0 + 1e-12)) break;
        const auto rounded = static_cast<std::uint64_t>(std::llround(v));
        if (rounded >= 10 && rounded <= x_max) grid.push_back(rounded);
    }
    grid.push_back(x_max);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

std::vector<double> power_table(const Rational& c, std::uint64_t x_max) {
    if (c <= Rational(0) || c > Rational(1))
        throw numeric_error("power table: c must lie in (0, 1]");
    if (x_max == 0) throw numeric_error("power table: x_max must be positive");
    const unsigned kmax = std::bit_width(x_max) - 1;  // floor(log2 x_max) >= Omega(n)
    std::vector<double> table(kmax + 1);
    Rational power(1);
    for (unsigned k = 0; k <= kmax; ++k) {
        table[k] = power.to_double();
        power *= c;
    }
    return table;
}

namespace {

void validate_config(const SieveConfig& config) {
    if (config.x_max == 0) throw numeric_error("sieve: x_max must be positive");
    if (config.segment_size < 2) throw numeric_error("sieve: segment_size must be >= 2");
    if (config.c <= Rational(0) || config.c > Rational(1))
        throw numeric_error("sieve: c must lie in (0, 1]");
    for (std::size_t i = 0; i < config.checkpoints.size(); ++i) {
        if (config.checkpoints[i] == 0)
            throw numeric_error("sieve: checkpoints must be positive");
        if (i > 0 && config.checkpoints[i] <= config.checkpoints[i - 1])
            throw numeric_error("sieve: checkpoints must be strictly increasing");
    }
    if (!config.checkpoints.empty() && config.checkpoints.back() > config.x_max)
        throw numeric_error("sieve: last checkpoint exceeds x_max");
}

void validate_state(const SieveConfig& config, const SieveState& state) {
    if (state.next_n < 1 || state.next_n > config.x_max + 1)
        throw numeric_error("sieve: resume state out of range for this x_max");
    if (!std::isfinite(state.sum) || !std::isfinite(state.compensation))
        throw numeric_error("sieve: resume state is not finite");
}

}  // namespace

PartialSumSeries partial_sums(const SieveConfig& config) {
    return partial_sums(config, SegmentCallback{}, nullptr);
}

PartialSumSeries partial_sums(const SieveConfig& config, const SegmentCallback& on_segment,
                              const SieveState* resume) {
    validate_config(config);
    SieveState state;
    if (resume) {
        state = *resume;
        validate_state(config, state);
    }

    // Allocate everything up front so an impossible x_max fails before any
    // work is done.
    std::vector<std::uint32_t> base;
    std::vector<std::uint8_t> omega;
    std::vector<std::uint64_t> cofactor;
    try {
        base = primes_up_to(isqrt(config.x_max));
        const std::size_t seg =
            static_cast<std::size_t>(std::min<std::uint64_t>(config.segment_size, config.x_max));
        omega.resize(seg);
        cofactor.resize(seg);
    } catch (const std::bad_alloc&) {
        throw numeric_error("sieve: x_max too large for available address space");
    } catch (const std::length_error&) {
        throw numeric_error("sieve: x_max too large for available address space");
    }

    const std::vector<double> table = power_table(config.c, config.x_max);
    NeumaierSum acc;
    acc.sum = state.sum;
    acc.compensation = state.compensation;

    auto next_checkpoint = std::lower_bound(config.checkpoints.begin(),
                                            config.checkpoints.end(), state.next_n);

    PartialSumSeries series;
    series.c = config.c;
    series.x_max = config.x_max;

    std::uint64_t n = state.next_n;
    bool stop = false;
    while (n <= config.x_max && !stop) {
        const std::uint64_t seg_lo = n;
        const std::uint64_t seg_hi =
            std::min(config.x_max, seg_lo + (config.segment_size - 1));
        const std::size_t first_row = series.rows.size();

        if (seg_lo == 1) {
            acc.add(table[0]);  // Omega(1) = 0, so a_1 = 1 exactly
            if (next_checkpoint != config.checkpoints.end() && *next_checkpoint == 1) {
                series.rows.push_back({1, acc.value(), acc.compensation});
                ++next_checkpoint;
            }
        }
        const std::uint64_t lo = std::max<std::uint64_t>(seg_lo, 2);
        if (lo <= seg_hi) {
            sieve_omega_segment(lo, seg_hi, base, omega, cofactor);
            for (std::uint64_t x = lo; x <= seg_hi; ++x) {
                const std::uint8_t w = omega[x - lo];
                if (w >= table.size())
                    throw numeric_error("sieve: Omega exceeded its log2 bound");
                acc.add(table[w]);
                if (next_checkpoint != config.checkpoints.end() && *next_checkpoint == x) {
                    series.rows.push_back({x, acc.value(), acc.compensation});
                    ++next_checkpoint;
                }
            }
        }

        state = SieveState{seg_hi + 1, acc.sum, acc.compensation};
        if (on_segment &&
            !on_segment(state, std::span<const PartialSumRow>(series.rows).subspan(first_row)))
            stop = true;
        n = seg_hi + 1;
    }
    return series;
}

SieveState read_sieve_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open resume file: " + path);
    std::string line;
    std::getline(in, line);
    std::istringstream tokens(line);
    std::string a, b, c, extra;
    if (!(tokens >> a >> b >> c) || (tokens >> extra))
        throw io_error("malformed resume file: " + path);
    SieveState state;
    state.next_n = parse_u64(a);
    state.sum = parse_double(b);
    state.compensation = parse_double(c);
    return state;
}

void write_sieve_state(const std::string& path, const SieveState& state) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw io_error("cannot write resume file: " + tmp);
        out << state.next_n << ' ' << format_double(state.sum) << ' '
            << format_double(state.compensation) << '\n';
        if (!out) throw io_error("cannot write resume file: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw io_error("cannot move resume file into place: " + path);
}

}  // namespace tauber
