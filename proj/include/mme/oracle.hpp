#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include "mme/bigint.hpp"
#include "mme/rational.hpp"

namespace mme {

/// Queryable source of k-bit dyadic approximations of a real alpha in
/// (-1, 1): query(k) returns b_k in [-2^k, 2^k] with |alpha - b_k/2^k| <
/// 2^-k, deterministically per (oracle, k). The most recent (k, b_k) pair is
/// memoized under a lock, so queries are safe from multiple threads.
class ApproximationOracle {
public:
    virtual ~ApproximationOracle() = default;

    BigInt query(unsigned long k) const {
        std::lock_guard<std::mutex> lock(mu_);
        if (!cache_ || cache_->first != k)
            cache_.emplace(k, query_impl(k));
        return cache_->second;
    }

    /// Sign of the represented value: -1, 0 or +1.
    virtual int sign() const = 0;

protected:
    virtual BigInt query_impl(unsigned long k) const = 0;

private:
    mutable std::mutex mu_;
    mutable std::optional<std::pair<unsigned long, BigInt>> cache_;
};

using OraclePtr = std::shared_ptr<const ApproximationOracle>;

/// Exact backing by a rational with |value| <= 1: query(k) is the half-down
/// rounding of value * 2^k, so the error is at most 2^-(k+1).
class RationalOracle final : public ApproximationOracle {
public:
    /// Throws std::invalid_argument when |value| > 1.
    explicit RationalOracle(Rational value);

    int sign() const override { return value_.sign(); }
    const Rational& value() const { return value_; }

protected:
    BigInt query_impl(unsigned long k) const override {
        return round_nearest(value_.mul_2exp(k));
    }

private:
    Rational value_;
};

/// Oracle for x, |x| <= 1. Throws std::invalid_argument otherwise.
OraclePtr make_rational_oracle(const Rational& x);

/// Oracle for alpha^power built from an oracle for alpha by repeated
/// squaring: an even power recurses at 3 extra bits of precision, an odd one
/// at 4. power = 1 returns the input oracle itself. Throws
/// std::invalid_argument for power = 0.
OraclePtr power_oracle(OraclePtr base, unsigned long power);

}  // namespace mme
