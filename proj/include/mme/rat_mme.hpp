#pragma once

#include <vector>

#include "mme/backend.hpp"
#include "mme/polynomial.hpp"
#include "mme/rational.hpp"

namespace mme {

/// Exact rational MME instance: inputs have |value| <= 1 with numerators and
/// denominators below 2^s in magnitude (checked); the evaluations'
/// numerators and denominators staying below 2^s is a caller promise.
struct RatMmeInstance {
    DensePolynomial<Rational> f;
    std::vector<std::vector<Rational>> points;
    unsigned long s;

    RatMmeInstance(DensePolynomial<Rational> f,
                   std::vector<std::vector<Rational>> points,
                   unsigned long s);
};

/// Exact reduced evaluations f(a_i): every input is wrapped in an exact
/// rational oracle, the approximate pipeline runs at t = 2s+1, and each
/// output is recovered by rational reconstruction with denominator bound
/// 2^s. ReconstructionFailedError signals a violated s promise.
std::vector<Rational> mme_rationals(
    const RatMmeInstance& inst, const MmeBackend& backend = default_backend());

}  // namespace mme
