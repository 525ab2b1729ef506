#pragma once

// Degree / variable-count trade-off maps. A c-variate polynomial of
// individual degree below d^m is re-indexed into a cm-variate polynomial of
// individual degree below d by splitting every exponent into its base-d
// digits, least significant digit first: variable block i gets variables
// x_{i,1}, ..., x_{i,m}, and x_{i,j} carries the digit weighted d^{j-1}.
// The companion point map sends a coordinate a to its tower of powers
// (a, a^d, a^{d^2}, ..., a^{d^{m-1}}), so evaluation commutes with the
// re-indexing.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "mme/polynomial.hpp"

namespace mme {

namespace detail {

inline std::size_t pow_size(std::size_t d, std::size_t m) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (r > static_cast<std::size_t>(-1) / d)
            throw std::invalid_argument("d^m overflow");
        r *= d;
    }
    return r;
}

}  // namespace detail

/// Splits every exponent of the c-variate f (individual degree < d^m) into
/// base-d digits, producing the cm-variate polynomial of individual degree
/// < d. `zero` pads coefficients absent from the image.
template <class T>
DensePolynomial<T> inverse_kronecker(const DensePolynomial<T>& f,
                                     std::size_t d, std::size_t m,
                                     const T& zero) {
    if (d < 2) throw std::invalid_argument("digit base d must be >= 2");
    if (m == 0) throw std::invalid_argument("block length m must be >= 1");
    const std::size_t c = f.num_vars();
    if (f.degree_bound() > detail::pow_size(d, m))
        throw std::invalid_argument(
            "individual degree bound exceeds d^m; cannot re-index");

    DensePolynomial<T> g(c * m, d);
    for (auto& coeff : g.coeffs()) coeff = zero;

    std::vector<std::size_t> out(c * m);
    for (std::size_t idx = 0; idx < f.coeff_count(); ++idx) {
        auto e = f.exponents_of(idx);
        for (std::size_t i = 0; i < c; ++i) {
            std::size_t v = e[i];
            for (std::size_t j = 0; j < m; ++j) {
                out[i * m + j] = v % d;
                v /= d;
            }
        }
        g.at(out) = f[idx];
    }
    return g;
}

template <class T>
DensePolynomial<T> inverse_kronecker(const DensePolynomial<T>& f,
                                     std::size_t d, std::size_t m) {
    return inverse_kronecker(f, d, m, T{});
}

/// Substitutes x_{i,j} -> y_i^{d^{j-1}} in the cm-variate g, recombining the
/// digit blocks into a c-variate polynomial. Colliding images (possible when
/// g's individual degree reaches d) accumulate by addition. Inverse of
/// inverse_kronecker on its image.
template <class T>
DensePolynomial<T> forward_kronecker(const DensePolynomial<T>& g,
                                     std::size_t d, std::size_t m) {
    if (d < 2) throw std::invalid_argument("digit base d must be >= 2");
    if (m == 0 || g.num_vars() % m != 0)
        throw std::invalid_argument(
            "variable count is not a multiple of the block length");
    const std::size_t c = g.num_vars() / m;
    const std::size_t dg = g.degree_bound();

    // Largest recombined exponent: (dg-1) * (1 + d + ... + d^{m-1}).
    std::size_t weight_sum = 0;
    std::size_t w = 1;
    for (std::size_t j = 0; j < m; ++j) {
        weight_sum += w;
        w *= d;
    }
    const std::size_t out_bound = (dg - 1) * weight_sum + 1;

    DensePolynomial<T> f(c, out_bound);
    std::vector<std::size_t> out(c);
    for (std::size_t idx = 0; idx < g.coeff_count(); ++idx) {
        auto e = g.exponents_of(idx);
        for (std::size_t i = 0; i < c; ++i) {
            std::size_t total = 0;
            std::size_t weight = 1;
            for (std::size_t j = 0; j < m; ++j) {
                total += e[i * m + j] * weight;
                weight *= d;
            }
            out[i] = total;
        }
        f.at(out) = f.at(out) + g[idx];
    }
    return f;
}

/// Point map companion to inverse_kronecker: each coordinate a_i expands to
/// (a_i, a_i^d, ..., a_i^{d^{m-1}}), computed by repeated d-th powering.
/// `mul` supplies the ring multiplication; `one` its unit.
template <class T, class Mul>
std::vector<T> kronecker_point_map(std::span<const T> point, std::size_t d,
                                   std::size_t m, Mul mul, const T& one) {
    if (d < 2) throw std::invalid_argument("digit base d must be >= 2");
    auto pow_d = [&](const T& x) {
        // x^d by square-and-multiply
        T acc = one;
        T base = x;
        std::size_t e = d;
        while (e > 0) {
            if (e & 1u) acc = mul(acc, base);
            e >>= 1;
            if (e > 0) base = mul(base, base);
        }
        return acc;
    };
    std::vector<T> out;
    out.reserve(point.size() * m);
    for (const T& a : point) {
        T cur = a;
        out.push_back(cur);
        for (std::size_t j = 1; j < m; ++j) {
            cur = pow_d(cur);
            out.push_back(cur);
        }
    }
    return out;
}

}  // namespace mme
