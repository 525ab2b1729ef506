#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mme/bigint.hpp"

namespace mme {

/// Euclidean quotient sequence [q_1, ..., q_t] of a positive pair (a, b);
/// folding it as a continued fraction reproduces a/b. Canonical form: the
/// final quotient is >= 2 whenever t >= 2.
struct QuotientSequence {
    std::vector<BigInt> q;

    std::size_t length() const { return q.size(); }
};

/// Throws std::invalid_argument unless a, b > 0.
QuotientSequence quotient_sequence(const BigInt& a, const BigInt& b);

/// i-th convergent a_i / b_i, reduced, b_i > 0.
struct Convergent {
    BigInt num;
    BigInt den;
    std::size_t index;
};

/// Computes the quotient sequence of a positive pair once and serves
/// convergents of any prefix via balanced 2x2 matrix products.
class ConvergentEngine {
public:
    ConvergentEngine(const BigInt& a, const BigInt& b)
        : quotients_(quotient_sequence(a, b)) {}

    const QuotientSequence& quotients() const { return quotients_; }
    std::size_t length() const { return quotients_.length(); }

    /// 1-based; throws std::invalid_argument out of range.
    Convergent convergent(std::size_t i) const;

private:
    QuotientSequence quotients_;
};

/// i-th convergent of M/N for M, N > 0.
Convergent convergent(const BigInt& m, const BigInt& n, std::size_t i);

/// Recovers the unique reduced a/b with |b| < 2^s and
/// |A/B - a/b| < 2^-(2s+1), assuming it exists: largest-index convergent of
/// |A|/B with denominator below 2^s, sign restored from A. Throws
/// ReconstructionFailedError when no convergent meets the error bound (the
/// caller's promise was violated), std::invalid_argument for B <= 0 or
/// s < 1.
std::pair<BigInt, BigInt> rational_reconstruct(const BigInt& a_approx,
                                               const BigInt& b_approx,
                                               unsigned long s);

}  // namespace mme
