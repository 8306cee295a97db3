#include "tauber/euler_product.hpp"

#include <cmath>

#include "tauber/errors.hpp"
#include "tauber/euler_factor.hpp"
#include "tauber/gamma.hpp"
#include "tauber/primes.hpp"
#include "tauber/summation.hpp"

namespace tauber {

ProductValue euler_product(const EulerProductSpec& spec) {
    if (spec.factor.coeff(0) != Rational(1))
        throw numeric_error("euler product: factor must have constant term 1");
    if (!spec.factor.coeff(1).is_zero())
        throw numeric_error(
            "euler product: product tail not certifiable, extract zeta first");
    if (spec.prime_cutoff < 2)
        throw numeric_error("euler product: prime cutoff must be >= 2");

    Rational coeff_l1(0);
    for (std::size_t k = 2; k < spec.factor.coeffs().size(); ++k)
        coeff_l1 += spec.factor.coeff(k).abs();
    const double coeff_sum = coeff_l1.to_double();
    const double cutoff = static_cast<double>(spec.prime_cutoff);
    // |g(1/p)| <= coeff_sum / p^2 must stay <= 1/2 beyond the cutoff for the
    // |log(1+g)| <= 2|g| step.
    if (coeff_sum > 0.5 * (cutoff + 1.0) * (cutoff + 1.0))
        throw numeric_error("euler product: cutoff too small to certify the tail");

    NeumaierSum log_acc;
    for (std::uint32_t p : primes_up_to(spec.prime_cutoff)) {
        const double value = spec.factor.eval_double(1.0 / p);
        if (!(value > 0.0))
            throw numeric_error("euler product: factor vanishes at p = " + std::to_string(p));
        log_acc.add(std::log(value));
    }

    ProductValue result;
    result.cutoff = spec.prime_cutoff;
    result.value = std::exp(spec.exponent * log_acc.value());
    result.tail_bound = std::abs(spec.exponent) * 2.0 * coeff_sum / (cutoff - 1.0);
    return result;
}

namespace {

// (1 - 1/p)^l (1 - c/p)^{-m} as an exact rational.
Rational regularized_factor_at(const Rational& c, unsigned l, unsigned m, std::uint64_t p) {
    const Rational t(1, static_cast<long>(p));
    const Rational num = (Rational(1) - t).pow(l);
    const Rational den = (Rational(1) - c * t).pow(m);
    return num / den;
}

}  // namespace

PoleData leading_constant(const Rational& c, std::uint64_t prime_cutoff) {
    const auto [l, m] = pole_order_of(c);
    if (prime_cutoff < 2)
        throw numeric_error("leading constant: prime cutoff must be >= 2");

    NeumaierSum log_acc;
    for (std::uint32_t p : primes_up_to(prime_cutoff)) {
        const double value = regularized_factor_at(c, l, m, p).to_double();
        log_acc.add(std::log(value));
    }

    PoleData pole;
    pole.d = 1.0;
    pole.l = l;
    pole.m = m;
    pole.alpha = static_cast<double>(l) / m;
    pole.a = std::exp(log_acc.value() / m);
    return pole;
}

LeadingConstantReport leading_constant_report(const Rational& c, std::uint64_t prime_cutoff) {
    LeadingConstantReport report;
    report.pole = leading_constant(c, prime_cutoff);
    report.cutoff = prime_cutoff;
    const double l = report.pole.l;
    const double m = report.pole.m;
    report.log_tail_bound = (l + m) / (m * (static_cast<double>(prime_cutoff) - 1.0));

    EulerProductSpec spec;
    spec.factor = cleared_factor(c);
    spec.exponent = 1;
    spec.prime_cutoff = prime_cutoff;
    report.cleared = euler_product(spec);
    report.a_cleared =
        std::exp(-(l * std::log(zeta2()) + std::log(report.cleared.value)) / m);
    report.a_cleared_log_tail = report.cleared.tail_bound / m;
    return report;
}

bool per_prime_identity_check(std::uint64_t p) {
    if (p < 2) throw numeric_error("per-prime identity: p must be >= 2");
    const Rational t(1, static_cast<long>(p));
    const Rational lhs =
        (Rational(1) - t).pow(2) / (Rational(1) - Rational(2, 3) * t).pow(3);
    const Rational rhs = (Rational(1) - t * t).pow(2) / quintic_reference().eval(t);
    return lhs == rhs;
}

}  // namespace tauber
