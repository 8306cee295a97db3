#include "tauber/poly.hpp"

#include <algorithm>
#include <ostream>

namespace tauber {

namespace {
const Rational kZero(0);
}

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& coeff, std::size_t k) {
    if (coeff.is_zero()) return Poly();
    std::vector<Rational> c(k + 1);
    c[k] = coeff;
    return Poly(std::move(c));
}

std::size_t Poly::degree() const {
    if (is_zero()) throw numeric_error("poly: zero polynomial has no degree");
    return c_.size() - 1;
}

const Rational& Poly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : kZero; }

Rational Poly::eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double Poly::eval_double(double t) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->to_double();
    return acc;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t k = 0; k < p.c_.size(); ++k) {
        if (p.c_[k].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << p.c_[k] << ")";
        if (k >= 1) os << "*t";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os;
}

Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }

Poly poly_pow(const Poly& p, unsigned k) {
    Poly acc = Poly::one();
    for (unsigned i = 0; i < k; ++i) acc = acc * p;
    return acc;
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, std::size_t order)
    : c_(std::move(coeffs)) {
    if (c_.size() != order + 1)
        throw numeric_error("series: coefficient count does not match order");
}

TruncatedSeries TruncatedSeries::from_poly(const Poly& p, std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t k = 0; k <= order; ++k) s.c_[k] = p.coeff(k);
    return s;
}

const Rational& TruncatedSeries::coeff(std::size_t k) const {
    if (k >= c_.size()) throw numeric_error("series: coefficient index beyond order");
    return c_[k];
}

Rational& TruncatedSeries::coeff(std::size_t k) {
    if (k >= c_.size()) throw numeric_error("series: coefficient index beyond order");
    return c_[k];
}

namespace {
void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw numeric_error("series: operands have different truncation orders");
}
}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= b.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

TruncatedSeries series_inv(const Poly& p, std::size_t order) {
    if (p.coeff(0) != Rational(1))
        throw numeric_error("series_inv: constant term must be 1");
    TruncatedSeries inv(order);
    inv.coeff(0) = Rational(1);
    // b_k = -sum_{j=1..k} p_j b_{k-j}, valid since p_0 = 1.
    for (std::size_t k = 1; k <= order; ++k) {
        Rational acc(0);
        for (std::size_t j = 1; j <= k; ++j) acc += p.coeff(j) * inv.coeff(k - j);
        inv.coeff(k) = -acc;
    }
    return inv;
}

}  // namespace tauber
