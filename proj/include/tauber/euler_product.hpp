#pragma once

#include <cstdint>

#include "tauber/poly.hpp"
#include "tauber/rational.hpp"

namespace tauber {

// Prime products with certified truncation tails, and the leading constant A
// of the asymptotic main term.

struct EulerProductSpec {
    Poly factor;                          // per-prime factor, polynomial in t = 1/p
    int exponent = 1;                     // product is prod_p factor(1/p)^exponent
    std::uint64_t prime_cutoff = 1'000'000;
};

struct ProductValue {
    double value = 1.0;
    std::uint64_t cutoff = 0;
    // Bound on |log(full product) - log(truncated product)|. Writing
    // factor = 1 + g with g_1 = 0: |g(1/p)| <= (sum_k |g_k|) p^{-2} for
    // p >= 2, |log(1+g)| <= 2|g| once |g| <= 1/2, and sum_{p>P} p^{-2}
    // < 1/(P-1); scaled by |exponent|.
    double tail_bound = 0.0;
};

// prod_{p <= P} factor(1/p)^exponent, accumulated as a compensated sum of
// logs in ascending-prime order. Requires constant term 1 and zero linear
// coefficient (otherwise the tail is not certifiable: extract the zeta
// factor first).
ProductValue euler_product(const EulerProductSpec& spec);

// Analytic profile of the fractional pole of L(s) = sum c^Omega(n) n^{-s}
// at s = d = 1: L^m has a pole of order l, alpha = l/m, and
// lim_{s->1} L(s)^m (s-1)^l = A^m.
struct PoleData {
    double d = 1.0;
    unsigned l = 1;
    unsigned m = 1;
    double alpha = 1.0;  // l/m
    double a = 1.0;      // leading constant A > 0
};

// A = [prod_p (1-1/p)^l (1-c/p)^{-m}]^{1/m}, each per-prime factor evaluated
// as an exact rational and rounded to double once, folded as a compensated
// log sum in ascending-prime order. Requires 0 < c <= 1.
PoleData leading_constant(const Rational& c, std::uint64_t prime_cutoff);

struct LeadingConstantReport {
    PoleData pole;               // A from the direct per-prime route
    std::uint64_t cutoff = 0;
    // |log A_full - log A| <= (l + m) / (m (P - 1)):
    // log[(1-1/p)^l (1-c/p)^{-m}] = sum_{j>=2} ((m c^j - l)/j) p^{-j} since
    // the j = 1 term is (m c - l)/p = 0, so each |log factor| <= (l+m) p^{-2}.
    double log_tail_bound = 0.0;
    ProductValue cleared;        // F(1) = prod_p D(1/p), D = cleared_factor(c)
    double a_cleared = 1.0;      // (zeta2^l F(1))^{-1/m}, the zeta-cleared route
    double a_cleared_log_tail = 0.0;
};

// Both evaluation routes for A side by side; the two must agree within the
// sum of their certified tails.
LeadingConstantReport leading_constant_report(const Rational& c, std::uint64_t prime_cutoff);

// Exact rational check of the local identity behind the zeta-cleared route:
// (1 - 1/p)^2 (1 - (2/3)/p)^{-3} = (1 - 1/p^2)^2 / quintic(1/p). Requires p >= 2.
bool per_prime_identity_check(std::uint64_t p);

}  // namespace tauber
