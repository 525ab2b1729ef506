#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mme/backend.hpp"
#include "mme/bigint.hpp"
#include "mme/dyadic.hpp"
#include "mme/oracle.hpp"
#include "mme/polynomial.hpp"

namespace mme {

/// Approximate MME instance: every coefficient and coordinate is an oracle
/// for a real in (-1, 1); t is the requested accuracy in bits.
struct ApproxInstance {
    DensePolynomial<OraclePtr> f;
    std::vector<std::vector<OraclePtr>> points;
    unsigned long t;

    ApproxInstance(DensePolynomial<OraclePtr> f,
                   std::vector<std::vector<OraclePtr>> points,
                   unsigned long t);
};

/// Every coefficient replaced by its k-bit approximation query(k)/2^k. The
/// evaluation error at any point of (-1,1)^m is at most d^m / 2^k.
DensePolynomial<Dyadic> round_poly(const DensePolynomial<OraclePtr>& f,
                                   unsigned long k);

/// Coordinatewise k-bit rounding of a point. Requires 2^k > 4 d^2 m^2 (with
/// m the point arity), which keeps every monomial perturbation below
/// 4dm / 2^k; throws std::invalid_argument below that precision.
std::vector<Dyadic> round_point(std::span<const OraclePtr> point,
                                unsigned long k, std::size_t d);

/// Scaling exponents for accuracy t on a d, m instance:
/// k1 = ceil(t + m log2 d + 2), k2 = ceil(t + m log2 d + log2(4md) + 2).
struct ApproxExponents {
    unsigned long k1;
    unsigned long k2;
};
ApproxExponents approx_scaling_exponents(std::size_t d, std::size_t m,
                                         unsigned long t);

/// The rounded instance cleared of denominators: coefficient e of G is
/// g_e * 2^{k2 d m - k2 |e|} for mantissas g_e of the k1-rounded
/// coefficients, and hat points are the k2-rounded coordinate mantissas,
/// so that G(hat a) = 2^{k1 + k2 d m} * round(f)(round(a)) exactly, with
/// |G(hat a)| <= 2^s for s = 3 k2 d m.
struct ScaledIntegerInstance {
    DensePolynomial<BigInt> G;
    std::vector<std::vector<BigInt>> hat_points;
    unsigned long k1;
    unsigned long k2;
    unsigned long s;
};

ScaledIntegerInstance build_scaled_instance(
    const DensePolynomial<Dyadic>& rounded_f,
    const std::vector<std::vector<Dyadic>>& rounded_points, unsigned long s);

/// Integers b_i with |f(a_i) - b_i / 2^t| < 2^-t: optional degree/variable
/// rewrite (point oracles powered), k-bit rounding, denominator clearing,
/// exact integer MME at s = 3 k d m, then rescaling to t bits.
std::vector<BigInt> approx_mme_real(
    const ApproxInstance& inst,
    const MmeBackend& backend = default_backend());

}  // namespace mme
