#pragma once

#include <cstdint>
#include <vector>

#include "mme/bigint.hpp"
#include "mme/dyadic.hpp"
#include "mme/oracle.hpp"
#include "mme/polynomial.hpp"
#include "mme/rational.hpp"

namespace mme {

/// Element of Z[z]/(z^2 + 1): an integer pair with z^2 = -1.
struct GaussianInt {
    BigInt re, im;

    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Complex number given by approximation oracles for its real and imaginary
/// parts.
struct GaussianOracle {
    OraclePtr re, im;
};

/// Exact complex rational re + im*i.
struct GaussianRational {
    Rational re, im;

    friend GaussianRational operator+(const GaussianRational& a,
                                      const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a,
                                      const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational& a,
                           const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Complex dyadic approximation: re and im share the exponent.
struct GaussianDyadic {
    Dyadic re, im;
};

/// Exact MME over Z[z]/(z^2+1) with component magnitudes promised below
/// 2^s: CRT split into word-size primes, Horner over the rings
/// F_p[z]/(z^2+1) (whether or not z^2+1 factors mod p), componentwise signed
/// reconstruction. Throws BoundViolationError when a reconstructed component
/// reaches 2^s (best-effort detection).
std::vector<GaussianInt> mme_gaussian_integers(
    const DensePolynomial<GaussianInt>& f,
    const std::vector<std::vector<GaussianInt>>& points, unsigned long s);

struct GaussianApproxInstance {
    DensePolynomial<GaussianOracle> f;
    std::vector<std::vector<GaussianOracle>> points;
    unsigned long t;

    GaussianApproxInstance(DensePolynomial<GaussianOracle> f,
                           std::vector<std::vector<GaussianOracle>> points,
                           unsigned long t);
};

/// Componentwise-accurate complex MME: pairs (b, c) with
/// |Re f(a_i) - b/2^t| < 2^-t and |Im f(a_i) - c/2^t| < 2^-t. Same rounding
/// and scaling pipeline as the real case, run over the Gaussian ring; the
/// scaling exponents carry dm + 2 extra bits because component bounds only
/// cap the modulus by sqrt(2).
std::vector<GaussianDyadic> approx_mme_complex(
    const GaussianApproxInstance& inst);

}  // namespace mme
