#pragma once

// Instance file format, line oriented:
//
//   mme <mode>              mode: int | approx | approx-complex | rat
//   m <vars>
//   d <degree bound>
//   N <points>
//   s <bits>                required for int and rat
//   t <bits>                required for approx and approx-complex
//   coefficients
//   <d^m values, whitespace separated, row-major, last variable fastest>
//   points
//   <N lines of m values each>
//
// '#' starts a comment running to the end of the line. Value syntax by
// mode: plain integers (int); "p/q" or integers (rat); additionally
// "a/2^k" dyadics (approx); "re,im" pairs of those, no spaces around the
// comma (approx-complex).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mme/bigint.hpp"
#include "mme/gaussian_mme.hpp"
#include "mme/polynomial.hpp"
#include "mme/rational.hpp"

namespace mme {

enum class InstanceMode { Int, Approx, ApproxComplex, Rat };

std::string_view to_string(InstanceMode mode);

/// Typed instance as read from a file; only the sections matching `mode`
/// are populated.
struct InstanceFile {
    InstanceMode mode = InstanceMode::Int;
    std::size_t m = 0;
    std::size_t d = 0;
    std::size_t n = 0;
    std::optional<unsigned long> s;
    std::optional<unsigned long> t;

    std::vector<BigInt> int_coeffs;
    std::vector<std::vector<BigInt>> int_points;

    std::vector<Rational> rat_coeffs;  // rat and approx modes
    std::vector<std::vector<Rational>> rat_points;

    std::vector<GaussianRational> complex_coeffs;
    std::vector<std::vector<GaussianRational>> complex_points;
};

/// Throws ParseError (with 1-based line/column) on syntax, count, or
/// header errors.
InstanceFile parse_instance(std::string_view text);

/// Canonical text form; parse(serialize(parse(x))) == parse(x) and
/// serialize is a fixed point on its own output.
std::string serialize_instance(const InstanceFile& inst);

}  // namespace mme
