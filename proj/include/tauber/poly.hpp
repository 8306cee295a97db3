#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "tauber/rational.hpp"

namespace tauber {

// Dense polynomial in t with exact rational coefficients, index = power of t.
// Throughout this library t stands for p^{-s} (one local Euler factor per
// prime p). The zero polynomial is the empty coefficient list; otherwise the
// trailing (highest-index) coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly one() { return Poly{Rational(1)}; }
    // coeff * t^k
    static Poly monomial(const Rational& coeff, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    // Degree of a nonzero polynomial; the zero polynomial has none.
    std::size_t degree() const;
    // Coefficient of t^k; zero beyond the stored range.
    const Rational& coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& t) const;
    double eval_double(double t) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return a.c_ != b.c_; }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void trim();
    std::vector<Rational> c_;
};

// Power series in t truncated at a fixed order N: exactly N+1 coefficients,
// terms beyond t^N discarded. Arithmetic between two series requires equal
// orders and yields that same order; truncation is silent by contract, the
// order field carries the big-O bookkeeping.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : c_(order + 1) {}
    TruncatedSeries(std::vector<Rational> coeffs, std::size_t order);

    static TruncatedSeries from_poly(const Poly& p, std::size_t order);

    std::size_t order() const { return c_.size() - 1; }
    const Rational& coeff(std::size_t k) const;
    Rational& coeff(std::size_t k);
    const std::vector<Rational>& coeffs() const { return c_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }

private:
    std::vector<Rational> c_;
};

// Exact convolution product.
Poly poly_mul(const Poly& p, const Poly& q);

// Exact k-fold product; poly_pow(p, 0) = 1.
Poly poly_pow(const Poly& p, unsigned k);

// Multiplicative inverse of p as a power series up to t^order.
// Requires constant term exactly 1. Satisfies p * inv = 1 + O(t^{order+1}).
TruncatedSeries series_inv(const Poly& p, std::size_t order);

}  // namespace tauber
