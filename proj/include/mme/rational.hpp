#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <gmp.h>

#include "mme/bigint.hpp"

namespace mme {

/// Exact rational number, always stored reduced with positive denominator.
/// Value type over GMP's mpq_t; operations are pure and thread-safe on
/// distinct values.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(int v) : Rational(static_cast<long>(v)) {}
    Rational(const BigInt& v) {
        mpq_init(q_);
        mpq_set_z(q_, v.raw());
    }
    /// num/den, canonicalized. Throws std::invalid_argument on zero den.
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    /// Parses "p/q" or a plain integer. Throws std::invalid_argument.
    static Rational from_string(std::string_view text);
    /// "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

    BigInt num() const {
        BigInt r;
        mpz_set(r.raw(), mpq_numref(q_));
        return r;
    }
    BigInt den() const {
        BigInt r;
        mpz_set(r.raw(), mpq_denref(q_));
        return r;
    }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) {
        return b < a;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return !(b < a);
    }
    friend bool operator>=(const Rational& a, const Rational& b) {
        return !(a < b);
    }

    friend Rational abs(const Rational& a) {
        Rational r;
        mpq_abs(r.q_, a.q_);
        return r;
    }

    /// Multiply by 2^k exactly.
    Rational mul_2exp(unsigned long k) const {
        Rational r;
        mpq_mul_2exp(r.q_, q_, k);
        return r;
    }

    static Rational pow(const Rational& base, unsigned long exp);

    friend std::ostream& operator<<(std::ostream& os, const Rational& a);

private:
    mpq_t q_;
};

/// Closest integer to x; exact halves a + 1/2 round down to a.
BigInt round_nearest(const Rational& x);

}  // namespace mme
