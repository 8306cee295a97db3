#include "tauber/rational.hpp"

#include <ostream>

namespace tauber {

Rational::Rational(long num, long den) {
    if (den == 0) throw numeric_error("rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw numeric_error("rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational Rational::from_string(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            mpz_class n(std::string(text), 10);
            return Rational(n, mpz_class(1));
        }
        mpz_class n(std::string(text.substr(0, slash)), 10);
        mpz_class d(std::string(text.substr(slash + 1)), 10);
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw numeric_error("rational: cannot parse '" + std::string(text) + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw numeric_error("rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(long k) const {
    if (k < 0 && is_zero()) throw numeric_error("rational: negative power of zero");
    const unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1ul
                                  : static_cast<unsigned long>(k);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), e);
    return k < 0 ? Rational(d, n) : Rational(n, d);
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace tauber
