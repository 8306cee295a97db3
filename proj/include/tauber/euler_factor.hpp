#pragma once

#include <cstddef>

#include "tauber/poly.hpp"
#include "tauber/rational.hpp"

namespace tauber {

// The Dirichlet series studied here is L(s) = prod_p (1 - c p^{-s})^{-1}
// = sum_n c^{Omega(n)} n^{-s} for a rational weight c in (0, 1]. Writing
// c = l/m in lowest terms, L has a fractional pole of order l/m at s = 1:
// L^m extends meromorphically with a pole of order exactly l.

struct PoleOrder {
    unsigned l = 0;
    unsigned m = 0;
};

// c = l/m in lowest terms. Requires 0 < c <= 1.
PoleOrder pole_order_of(const Rational& c);

// (1 - c t)^m: the per-prime local factor of L(s)^m, as a polynomial in
// t = p^{-s}.
Poly local_factor_power(const Rational& c);

// (1 + t)^l (1 - c t)^m. Multiplying L(s)^m zeta(s)^{-l} by
// (1 + p^{-s})^l / (1 + p^{-s})^l per prime turns its local factor into
// (1 - t^2)^l divided by this polynomial, whose linear coefficient
// l - m c = 0 vanishes; that makes the prime product over it converge on
// Re(s) > 1/2 with a certifiable tail. For c = 2/3 this is the quintic
// 1 - (5/3)t^2 + (10/27)t^3 + (20/27)t^4 - (8/27)t^5.
Poly cleared_factor(const Rational& c);

struct RegularizedFactor {
    unsigned l = 0;
    unsigned m = 0;
    TruncatedSeries series;  // (1 - t)^l (1 - c t)^{-m} up to the requested order
};

// Regularized per-prime factor of L^m / zeta^l. The t^1 coefficient of the
// series is exactly m c - l = 0, the algebraic witness that L^m / zeta^l has
// neither pole nor zero at s = 1 to first order. Requires 0 < c <= 1.
RegularizedFactor euler_regularize(const Rational& c, std::size_t order = 6);

// Expanded coefficients of (1 + t)^2 (1 - (2/3) t)^3.
const Poly& quintic_reference();

// Verifies poly_mul((1+t)^2, (1-(2/3)t)^3) against the reference quintic
// coefficient list [1, 0, -5/3, 10/27, 20/27, -8/27], exactly.
bool quintic_identity_check();

}  // namespace tauber
