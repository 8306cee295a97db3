#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "tauber/primes.hpp"
#include "tauber/sieve.hpp"

using namespace tauber;

TEST_CASE("omega_of on known factorizations") {
    CHECK(omega_of(1) == 0);
    CHECK(omega_of(12) == 3);   // 2^2 * 3
    CHECK(omega_of(97) == 1);   // prime
    CHECK(omega_of(1024) == 10);
    CHECK(omega_of(1'000'000) == 12);  // 2^6 * 5^6
    CHECK_THROWS_AS(omega_of(0), numeric_error);
}

TEST_CASE("prime generation") {
    const auto primes = primes_up_to(30);
    CHECK(primes == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(1'000'000).size() == 78498);
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(99) == 9);
    CHECK(isqrt(100) == 10);
    CHECK(isqrt((1ull << 62) - 1) == 2147483647ull);
}

TEST_CASE("sieve segment matches hand values") {
    const auto base = primes_up_to(1000);
    CHECK(sieve_omega_segment(2, 10, base) ==
          std::vector<std::uint8_t>{1, 1, 2, 1, 2, 1, 3, 2, 2});
    CHECK(sieve_omega_segment(2, 2, base) == std::vector<std::uint8_t>{1});
    CHECK(sieve_omega_segment(1'000'000, 1'000'000, base) ==
          std::vector<std::uint8_t>{12});
}

TEST_CASE("sieve segment agrees with trial division") {
    const auto base = primes_up_to(isqrt(20'000));
    const auto omega = sieve_omega_segment(2, 20'000, base);
    for (std::uint64_t n = 2; n <= 20'000; ++n) CHECK(omega[n - 2] == omega_of(n));
}

TEST_CASE("sieve segment validates its base primes") {
    CHECK_THROWS_AS(sieve_omega_segment(2, 100, primes_up_to(3)), numeric_error);
    CHECK_THROWS_AS(sieve_omega_segment(2, 100, std::vector<std::uint32_t>{}),
                    numeric_error);
    CHECK_THROWS_AS(sieve_omega_segment(1, 10, primes_up_to(10)), numeric_error);
    CHECK_THROWS_AS(sieve_omega_segment(10, 2, primes_up_to(10)), numeric_error);
    // primes up to 8 cover sqrt(100) = 10: the gap (7, 10] holds no prime
    CHECK_NOTHROW(sieve_omega_segment(2, 100, primes_up_to(8)));
}

TEST_CASE("checkpoint grid") {
    CHECK(checkpoint_grid(100, 1) == std::vector<std::uint64_t>{10, 100});
    CHECK(checkpoint_grid(1000, 2) == std::vector<std::uint64_t>{10, 32, 100, 316, 1000});
    CHECK(checkpoint_grid(10, 10) == std::vector<std::uint64_t>{10});
    const auto grid = checkpoint_grid(10'000'000, 10);
    CHECK(grid.front() == 10);
    CHECK(grid.back() == 10'000'000);
    CHECK(grid.size() == 61);  // 10 per decade over six decades, inclusive ends
    for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);
    CHECK(checkpoint_grid(123, 1) == std::vector<std::uint64_t>{10, 100, 123});
    CHECK_THROWS_AS(checkpoint_grid(100, 0), numeric_error);
}

TEST_CASE("power table holds exact rational powers") {
    const auto table = power_table(Rational(2, 3), 1'000'000);
    CHECK(table.size() == 20);  // floor(log2 1e6) = 19
    CHECK(table[0] == 1.0);
    CHECK(table[3] == Rational(8, 27).to_double());
    CHECK(table[19] == Rational(2, 3).pow(19).to_double());
    CHECK_THROWS_AS(power_table(Rational(0), 10), numeric_error);
    CHECK_THROWS_AS(power_table(Rational(3, 2), 10), numeric_error);
}

namespace {

SieveConfig small_config(const Rational& c, std::uint64_t x_max,
                         std::uint64_t segment_size = 1u << 14) {
    SieveConfig config;
    config.x_max = x_max;
    config.segment_size = segment_size;
    config.c = c;
    config.checkpoints = checkpoint_grid(x_max, 10);
    return config;
}

}  // namespace

TEST_CASE("partial sums reproduce the enumerated S(10)") {
    SieveConfig config = small_config(Rational(2, 3), 10);
    config.checkpoints = {1, 10};
    const PartialSumSeries series = partial_sums(config);
    REQUIRE(series.rows.size() == 2);
    CHECK(series.rows[0].x == 1);
    CHECK(series.rows[0].s == 1.0);
    const double expected = Rational(155, 27).to_double();
    CHECK(std::fabs(series.rows[1].s - expected) < 1e-14 * expected);
}

TEST_CASE("partial sums count integers when c = 1") {
    const PartialSumSeries series = partial_sums(small_config(Rational(1), 10'000));
    for (const PartialSumRow& row : series.rows)
        CHECK(row.s == static_cast<double>(row.x));
}

TEST_CASE("partial sums are monotone and segment-size independent") {
    const auto run = [](std::uint64_t segment_size) {
        return partial_sums(small_config(Rational(2, 3), 200'000, segment_size));
    };
    const PartialSumSeries a = run(1u << 12);
    const PartialSumSeries b = run(1u << 16);
    const PartialSumSeries c = run(1u << 20);
    REQUIRE(a.rows.size() == b.rows.size());
    REQUIRE(a.rows.size() == c.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].x == b.rows[i].x);
        // bit-identical: accumulation order is ascending n in all cases
        CHECK(a.rows[i].s == b.rows[i].s);
        CHECK(a.rows[i].s == c.rows[i].s);
        CHECK(a.rows[i].compensation == b.rows[i].compensation);
        if (i > 0) CHECK(a.rows[i].s >= a.rows[i - 1].s);
    }
}

TEST_CASE("compensated sum matches the exact rational reference") {
    const std::uint64_t x_max = 100'000;
    const Rational c(2, 3);
    const PartialSumSeries series = partial_sums(small_config(c, x_max));

    // exact reference: S(X) = sum_k count{n <= X : Omega(n) = k} c^k
    const auto omega = sieve_omega_segment(2, x_max, primes_up_to(isqrt(x_max)));
    std::vector<std::uint64_t> histogram(64, 0);
    histogram[0] = 1;  // n = 1
    for (const std::uint8_t w : omega) ++histogram[w];
    Rational exact(0);
    for (std::size_t k = 0; k < histogram.size(); ++k)
        if (histogram[k] > 0)
            exact += Rational(static_cast<long>(histogram[k])) * c.pow(static_cast<long>(k));

    const double reference = exact.to_double();
    CHECK(std::fabs(series.rows.back().s - reference) < 1e-12 * reference);
}

TEST_CASE("omega never exceeds its log2 bound") {
    const std::uint64_t x_max = 1u << 18;
    const auto omega = sieve_omega_segment(2, x_max, primes_up_to(isqrt(x_max)));
    unsigned max_omega = 0;
    for (const std::uint8_t w : omega) max_omega = std::max<unsigned>(max_omega, w);
    CHECK(max_omega == 18);  // attained by 2^18
    CHECK(power_table(Rational(1, 2), x_max).size() == 19);
}

TEST_CASE("partial sums validate their configuration") {
    SieveConfig config = small_config(Rational(2, 3), 100);
    config.x_max = 0;
    CHECK_THROWS_AS(partial_sums(config), numeric_error);
    config = small_config(Rational(2, 3), 100);
    config.segment_size = 1;
    CHECK_THROWS_AS(partial_sums(config), numeric_error);
    config = small_config(Rational(3, 2), 100);
    CHECK_THROWS_AS(partial_sums(config), numeric_error);
    config = small_config(Rational(2, 3), 100);
    config.checkpoints = {50, 50};
    CHECK_THROWS_AS(partial_sums(config), numeric_error);
    config.checkpoints = {50, 200};
    CHECK_THROWS_AS(partial_sums(config), numeric_error);
    config.checkpoints = {0, 50};
    CHECK_THROWS_AS(partial_sums(config), numeric_error);
}

TEST_CASE("interrupted run resumes to identical rows") {
    const SieveConfig config = small_config(Rational(2, 3), 100'000, 1u << 12);
    const PartialSumSeries whole = partial_sums(config);

    SieveState saved;
    std::vector<PartialSumRow> rows;
    int segments = 0;
    const SegmentCallback stop_after_three = [&](const SieveState& state,
                                                 std::span<const PartialSumRow> fresh) {
        rows.insert(rows.end(), fresh.begin(), fresh.end());
        saved = state;
        return ++segments < 3;
    };
    partial_sums(config, stop_after_three, nullptr);
    CHECK(saved.next_n == 1 + 3 * (1u << 12));

    const PartialSumSeries tail = partial_sums(config, SegmentCallback{}, &saved);
    rows.insert(rows.end(), tail.rows.begin(), tail.rows.end());

    REQUIRE(rows.size() == whole.rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].x == whole.rows[i].x);
        CHECK(rows[i].s == whole.rows[i].s);
        CHECK(rows[i].compensation == whole.rows[i].compensation);
    }
}

TEST_CASE("sieve state file round trip") {
    const std::string path = "state_roundtrip.txt";
    const SieveState state{123457, 3.141592653589793, -1.1102230246251565e-16};
    write_sieve_state(path, state);
    const SieveState loaded = read_sieve_state(path);
    CHECK(loaded.next_n == state.next_n);
    CHECK(loaded.sum == state.sum);
    CHECK(loaded.compensation == state.compensation);

    std::ofstream(path) << "only two tokens\n";
    CHECK_THROWS_AS(read_sieve_state(path), io_error);
    std::ofstream(path) << "1 2 3 4\n";
    CHECK_THROWS_AS(read_sieve_state(path), io_error);
    std::ofstream(path) << "abc 1.0 2.0\n";
    CHECK_THROWS_AS(read_sieve_state(path), io_error);
    CHECK_THROWS_AS(read_sieve_state("does_not_exist_state.txt"), io_error);
    std::remove(path.c_str());
}

TEST_CASE("resume state is validated against the configuration") {
    const SieveConfig config = small_config(Rational(2, 3), 1000);
    SieveState state{5000, 1.0, 0.0};
    CHECK_THROWS_AS(partial_sums(config, SegmentCallback{}, &state), numeric_error);
    state = {10, std::numeric_limits<double>::infinity(), 0.0};
    CHECK_THROWS_AS(partial_sums(config, SegmentCallback{}, &state), numeric_error);
}
