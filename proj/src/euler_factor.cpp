#include "tauber/euler_factor.hpp"

namespace tauber {

PoleOrder pole_order_of(const Rational& c) {
    if (c <= Rational(0) || c > Rational(1))
        throw numeric_error("pole order: c must lie in (0, 1]");
    // c is canonical, so numerator/denominator are already coprime.
    if (!c.num().fits_uint_p() || !c.den().fits_uint_p())
        throw numeric_error("pole order: l/m too large");
    return PoleOrder{static_cast<unsigned>(c.num().get_ui()),
                     static_cast<unsigned>(c.den().get_ui())};
}

Poly local_factor_power(const Rational& c) {
    const auto [l, m] = pole_order_of(c);
    (void)l;
    return poly_pow(Poly{Rational(1), -c}, m);
}

Poly cleared_factor(const Rational& c) {
    const auto [l, m] = pole_order_of(c);
    return poly_mul(poly_pow(Poly{Rational(1), Rational(1)}, l),
                    poly_pow(Poly{Rational(1), -c}, m));
}

RegularizedFactor euler_regularize(const Rational& c, std::size_t order) {
    const auto [l, m] = pole_order_of(c);
    const Poly one_minus_t_pow_l = poly_pow(Poly{Rational(1), Rational(-1)}, l);
    const TruncatedSeries inv = series_inv(poly_pow(Poly{Rational(1), -c}, m), order);
    const TruncatedSeries g = TruncatedSeries::from_poly(one_minus_t_pow_l, order) * inv;
    return RegularizedFactor{l, m, g};
}

const Poly& quintic_reference() {
    static const Poly q{Rational(1),      Rational(0),      Rational(-5, 3),
                        Rational(10, 27), Rational(20, 27), Rational(-8, 27)};
    return q;
}

bool quintic_identity_check() {
    const Poly product = poly_mul(poly_pow(Poly{Rational(1), Rational(1)}, 2),
                                  poly_pow(Poly{Rational(1), Rational(-2, 3)}, 3));
    return product == quintic_reference();
}

}  // namespace tauber
