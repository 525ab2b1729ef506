#pragma once

#include <cstdint>
#include <vector>

#include "mme/backend.hpp"
#include "mme/polynomial.hpp"

namespace mme {

/// Controls the degree/variable trade-off step of mme_prime_field.
/// Auto applies it when m < log log d (and d >= 16, below which the digit
/// base floor(log2 d) degenerates); Force applies it unconditionally with
/// the base clamped to >= 2, which exists so tests can exercise the rewrite
/// on small instances; Never skips it.
enum class KroneckerRewrite { Auto, Force, Never };

/// Multipoint evaluation over F_p: optional Kronecker rewrite, integer lift,
/// CRT split into word-size prime fields, backend evaluation per small
/// prime, CRT recombination, final reduction mod p.
///
/// f must have coefficients in [0, p) and every coordinate must lie in
/// [0, p). Throws std::invalid_argument when p is not prime or inputs are
/// out of range. Results equal per-point evaluation mod p for any correct
/// backend.
std::vector<std::uint64_t> mme_prime_field(
    const DensePolynomial<std::uint64_t>& f,
    const std::vector<std::vector<std::uint64_t>>& points, std::uint64_t p,
    const MmeBackend& backend = default_backend(),
    KroneckerRewrite rewrite = KroneckerRewrite::Auto);

}  // namespace mme
