#include "ratsode/rational.hpp"

#include <stdexcept>

namespace ratsode {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n) / mpq_class(d);
    canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Rational: negative power of zero");
        return Rational(0);
    }
    mpz_class n, d;
    unsigned long m = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), m);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), m);
    return e > 0 ? Rational(n, d) : Rational(d, n);
}

std::optional<mpz_class> Rational::integer_sqrt_if_square() const {
    if (sign() < 0 || !is_integer()) return std::nullopt;
    mpz_class n = numerator();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<long> Rational::to_long() const {
    if (!is_integer()) return std::nullopt;
    mpz_class n = numerator();
    if (!n.fits_slong_p()) return std::nullopt;
    return n.get_si();
}

std::optional<Rational> Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(text);
            return Rational(mpq_class(n));
        }
        mpz_class n(text.substr(0, slash));
        mpz_class d(text.substr(slash + 1));
        if (d == 0) return std::nullopt;
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string Rational::str() const {
    return v_.get_str();
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace ratsode
