#pragma once

#include <cstdint>
#include <vector>

#include "mme/backend.hpp"
#include "mme/bigint.hpp"
#include "mme/polynomial.hpp"

namespace mme {

/// Exact integer MME instance: all coefficient and coordinate magnitudes
/// must be below 2^s (checked here); the evaluations staying below 2^s is a
/// caller promise.
struct IntMmeInstance {
    DensePolynomial<BigInt> f;
    std::vector<std::vector<BigInt>> points;
    unsigned long s;

    IntMmeInstance(DensePolynomial<BigInt> f,
                   std::vector<std::vector<BigInt>> points, unsigned long s);
};

/// Exact evaluations b_i = f(a_i): minimal prime basis with product beyond
/// 2^{s+1}, per-prime reduction (negative values wrap into [0, p)),
/// prime-field MME per basis prime, then signed reconstruction into
/// (-M/2, M/2]. Throws BoundViolationError when a reconstructed value
/// reaches 2^s in magnitude -- detection of a violated promise is
/// best-effort, since a wrapped value can land back inside the bound.
std::vector<BigInt> mme_integers(const IntMmeInstance& inst,
                                 const MmeBackend& backend = default_backend());

/// ceil(s*d*m + s + m*log2 d): evaluation-size bound when only input
/// magnitudes are known; s itself for the constant case d = 1.
unsigned long naive_output_bound(std::size_t d, std::size_t m,
                                 unsigned long s);

}  // namespace mme
