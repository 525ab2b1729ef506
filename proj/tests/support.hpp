#pragma once

// Shared test utilities: deterministic random generators for big integers,
// rationals and dense polynomials, plus reference evaluators that stay
// independent of the library's evaluation pipelines (plain monomial sums,
// no Horner, no CRT).

#include <cstdint>
#include <random>
#include <vector>

#include "mme/bigint.hpp"
#include "mme/dyadic.hpp"
#include "mme/gaussian_mme.hpp"
#include "mme/oracle.hpp"
#include "mme/polynomial.hpp"
#include "mme/rational.hpp"

namespace mme::test {

using Rng = std::mt19937_64;

inline std::uint64_t rand_u64(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// Uniform in [0, 2^bits).
inline BigInt rand_bigint_bits(Rng& rng, std::size_t bits) {
    BigInt r;
    std::size_t produced = 0;
    while (produced < bits) {
        std::size_t chunk = std::min<std::size_t>(32, bits - produced);
        r = (r << chunk) + BigInt(static_cast<unsigned long>(
                               rand_u64(rng, 0, (1ull << chunk) - 1)));
        produced += chunk;
    }
    return r;
}

// Uniform magnitude below 2^bits, either sign.
inline BigInt rand_bigint_signed(Rng& rng, std::size_t bits) {
    BigInt r = rand_bigint_bits(rng, bits);
    return (rand_u64(rng, 0, 1) != 0u) ? -r : r;
}

// Random rational with numerator/denominator below 2^bits, denominator >= 1.
inline Rational rand_rational(Rng& rng, std::size_t bits) {
    BigInt den = rand_bigint_bits(rng, bits) + BigInt(1);
    return Rational(rand_bigint_signed(rng, bits), den);
}

// Random rational strictly inside (-1, 1).
inline Rational rand_rational_unit(Rng& rng, std::size_t bits) {
    BigInt den = rand_bigint_bits(rng, bits) + BigInt(2);
    BigInt num = fdiv_r(rand_bigint_bits(rng, bits + 8), den);  // in [0, den)
    if (rand_u64(rng, 0, 1) != 0u) num = -num;
    return Rational(num, den);
}

// ---- reference (brute-force) evaluators ----------------------------------

// x^e over any ring with *.
template <class T>
T ref_pow(const T& x, std::size_t e, const T& one) {
    T acc = one;
    for (std::size_t i = 0; i < e; ++i) acc = acc * x;
    return acc;
}

// Plain monomial-sum evaluation of a dense polynomial at one point.
template <class T>
T ref_eval(const DensePolynomial<T>& f, const std::vector<T>& point,
           const T& zero, const T& one) {
    T total = zero;
    for (std::size_t idx = 0; idx < f.coeff_count(); ++idx) {
        auto e = f.exponents_of(idx);
        T term = f[idx];
        for (std::size_t i = 0; i < f.num_vars(); ++i)
            term = term * ref_pow(point[i], e[i], one);
        total = total + term;
    }
    return total;
}

inline BigInt ref_eval_int(const DensePolynomial<BigInt>& f,
                           const std::vector<BigInt>& point) {
    return ref_eval(f, point, BigInt(0), BigInt(1));
}

inline Rational ref_eval_rat(const DensePolynomial<Rational>& f,
                             const std::vector<Rational>& point) {
    return ref_eval(f, point, Rational(0), Rational(1));
}

// Monomial-sum evaluation mod q, independent of the backend code paths.
inline std::uint64_t ref_eval_mod(const DensePolynomial<std::uint64_t>& f,
                                  const std::vector<std::uint64_t>& point,
                                  std::uint64_t q) {
    auto mulmod = [q](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(a) * b % q);
    };
    std::uint64_t total = 0;
    for (std::size_t idx = 0; idx < f.coeff_count(); ++idx) {
        auto e = f.exponents_of(idx);
        std::uint64_t term = f[idx] % q;
        for (std::size_t i = 0; i < f.num_vars(); ++i)
            for (std::size_t j = 0; j < e[i]; ++j)
                term = mulmod(term, point[i] % q);
        total = (total + term) % q;
    }
    return total;
}

// ---- oracle-backed instances ----------------------------------------------

// Exact Gaussian rational, the reference domain for the complex pipeline.
using GRat = GaussianRational;

inline GRat ref_eval_gaussian(const DensePolynomial<GRat>& f,
                              const std::vector<GRat>& point) {
    return ref_eval(f, point, GRat{Rational(0), Rational(0)},
                    GRat{Rational(1), Rational(0)});
}

inline DensePolynomial<GaussianOracle> to_gaussian_oracle_poly(
    const DensePolynomial<GRat>& f) {
    DensePolynomial<GaussianOracle> out(f.num_vars(), f.degree_bound());
    for (std::size_t i = 0; i < f.coeff_count(); ++i)
        out[i] = {make_rational_oracle(f[i].re),
                  make_rational_oracle(f[i].im)};
    return out;
}

inline std::vector<std::vector<GaussianOracle>> to_gaussian_oracle_points(
    const std::vector<std::vector<GRat>>& pts) {
    std::vector<std::vector<GaussianOracle>> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (const auto& x : pts[i])
            out[i].push_back({make_rational_oracle(x.re),
                              make_rational_oracle(x.im)});
    return out;
}

inline DensePolynomial<OraclePtr> to_oracle_poly(
    const DensePolynomial<Rational>& f) {
    DensePolynomial<OraclePtr> out(f.num_vars(), f.degree_bound());
    for (std::size_t i = 0; i < f.coeff_count(); ++i)
        out[i] = make_rational_oracle(f[i]);
    return out;
}

inline std::vector<std::vector<OraclePtr>> to_oracle_points(
    const std::vector<std::vector<Rational>>& pts) {
    std::vector<std::vector<OraclePtr>> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (const auto& x : pts[i])
            out[i].push_back(make_rational_oracle(x));
    return out;
}

inline DensePolynomial<Rational> dyadic_poly_values(
    const DensePolynomial<Dyadic>& f) {
    DensePolynomial<Rational> out(f.num_vars(), f.degree_bound());
    for (std::size_t i = 0; i < f.coeff_count(); ++i) out[i] = f[i].value();
    return out;
}

inline std::vector<Rational> dyadic_point_values(
    const std::vector<Dyadic>& point) {
    std::vector<Rational> out;
    out.reserve(point.size());
    for (const auto& x : point) out.push_back(x.value());
    return out;
}

// ---- random polynomials ----------------------------------------------------

template <class T, class Gen>
DensePolynomial<T> rand_poly(std::size_t m, std::size_t d, Gen gen) {
    DensePolynomial<T> f(m, d);
    for (std::size_t i = 0; i < f.coeff_count(); ++i) f[i] = gen();
    return f;
}

template <class T, class Gen>
std::vector<std::vector<T>> rand_points(std::size_t n, std::size_t m,
                                        Gen gen) {
    std::vector<std::vector<T>> pts(n);
    for (auto& p : pts) {
        p.reserve(m);
        for (std::size_t i = 0; i < m; ++i) p.push_back(gen());
    }
    return pts;
}

}  // namespace mme::test
