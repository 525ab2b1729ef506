#include "mme/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace mme {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::invalid_argument("zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
}

Rational Rational::from_string(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(BigInt::from_string(text));
    BigInt num = BigInt::from_string(text.substr(0, slash));
    BigInt den = BigInt::from_string(text.substr(slash + 1));
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) return num().to_string();
    return num().to_string() + "/" + den().to_string();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero");
    Rational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

Rational Rational::pow(const Rational& base, unsigned long exp) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), exp);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), exp);
    return r;  // base canonical implies base^exp canonical
}

std::ostream& operator<<(std::ostream& os, const Rational& a) {
    return os << a.to_string();
}

BigInt round_nearest(const Rational& x) {
    // ceil((2p - q) / 2q): the unique n with -1/2 < x - n <= 1/2.
    BigInt p = x.num();
    BigInt q = x.den();
    return cdiv_q((p << 1) - q, q << 1);
}

}  // namespace mme
