#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmp.h>

namespace mme {

/// Arbitrary-precision signed integer. Value type over GMP's mpz_t;
/// representation is canonical sign-magnitude (no leading zero limbs,
/// zero is non-negative). Immutable-by-convention: all operations return
/// fresh values, so instances may be shared freely across threads.
class BigInt {
public:
    BigInt() { mpz_init(z_); }
    BigInt(long v) { mpz_init_set_si(z_, v); }
    BigInt(unsigned long v) { mpz_init_set_ui(z_, v); }
    BigInt(int v) : BigInt(static_cast<long>(v)) {}

    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    /// Parses an optionally signed decimal string. Throws std::invalid_argument.
    static BigInt from_string(std::string_view text);
    std::string to_string() const;

    /// 2^k.
    static BigInt pow2(unsigned long k) {
        BigInt r;
        mpz_setbit(r.z_, k);
        return r;
    }
    static BigInt pow(const BigInt& base, unsigned long exp) {
        BigInt r;
        mpz_pow_ui(r.z_, base.z_, exp);
        return r;
    }

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool odd() const { return mpz_odd_p(z_) != 0; }

    /// Bits in |value|; 0 for zero.
    std::size_t bit_length() const {
        return is_zero() ? 0 : mpz_sizeinbase(z_, 2);
    }

    bool fits_ulong() const { return mpz_fits_ulong_p(z_) != 0; }
    bool fits_slong() const { return mpz_fits_slong_p(z_) != 0; }
    unsigned long to_ulong() const;  // throws std::overflow_error unless fits
    long to_slong() const;           // throws std::overflow_error unless fits

    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.z_, z_);
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    BigInt& operator+=(const BigInt& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    friend BigInt operator<<(const BigInt& a, unsigned long k) {
        BigInt r;
        mpz_mul_2exp(r.z_, a.z_, k);
        return r;
    }
    /// Arithmetic (floor) right shift.
    friend BigInt operator>>(const BigInt& a, unsigned long k) {
        BigInt r;
        mpz_fdiv_q_2exp(r.z_, a.z_, k);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return mpz_cmp(a.z_, b.z_) == 0;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) {
        return !(a == b);
    }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        return mpz_cmp(a.z_, b.z_) < 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) {
        return !(b < a);
    }
    friend bool operator>=(const BigInt& a, const BigInt& b) {
        return !(a < b);
    }

    friend BigInt abs(const BigInt& a) {
        BigInt r;
        mpz_abs(r.z_, a.z_);
        return r;
    }
    friend BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }

    /// Floor quotient and remainder: r in [0, |b|) for b > 0.
    friend BigInt fdiv_q(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_fdiv_q(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt fdiv_r(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_fdiv_r(r.z_, a.z_, b.z_);
        return r;
    }
    /// Ceiling quotient.
    friend BigInt cdiv_q(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_cdiv_q(r.z_, a.z_, b.z_);
        return r;
    }
    friend void fdiv_qr(BigInt& q, BigInt& r, const BigInt& a,
                        const BigInt& b) {
        mpz_fdiv_qr(q.z_, r.z_, a.z_, b.z_);
    }

    /// a mod m for word-sized m, result in [0, m).
    friend std::uint64_t fdiv_r_word(const BigInt& a, std::uint64_t m) {
        return mpz_fdiv_ui(a.z_, static_cast<unsigned long>(m));
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& a);

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

private:
    mpz_t z_;
};

/// Nearest integer to n / 2^k, exact halves rounding toward minus infinity
/// (the unique r with -1/2 < n/2^k - r <= 1/2).
BigInt round_div_2exp(const BigInt& n, unsigned long k);

/// Smallest c with 2^c >= n, for n >= 1.
std::size_t ceil_log2(const BigInt& n);

}  // namespace mme
