#pragma once

#include <string>
#include <string_view>

#include "mme/bigint.hpp"
#include "mme/rational.hpp"

namespace mme {

/// mantissa / 2^exponent, exponent >= 0. The pair is kept as produced (no
/// normalization): batch pipelines rely on every value sharing one common
/// power-of-two denominator.
struct Dyadic {
    BigInt mantissa;
    unsigned long exponent = 0;

    Dyadic() = default;
    Dyadic(BigInt m, unsigned long k) : mantissa(std::move(m)), exponent(k) {}

    Rational value() const {
        return Rational(mantissa, BigInt::pow2(exponent));
    }

    /// Parses "a/2^k". Throws std::invalid_argument.
    static Dyadic from_string(std::string_view text);
    /// "a/2^k".
    std::string to_string() const;

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exponent == b.exponent && a.mantissa == b.mantissa;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) {
        return !(a == b);
    }
};

/// The Dyadic with exponent k whose mantissa is the rounded value of
/// x * 2^k (half-down); exact whenever k >= x.exponent.
Dyadic dyadic_rescale(const Dyadic& x, unsigned long k);

}  // namespace mme
