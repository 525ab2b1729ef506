#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mme/polynomial.hpp"

namespace mme {

/// Batch evaluator for a dense polynomial over the prime field F_q.
/// Implementations must return exactly the per-point evaluations mod q;
/// the surrounding pipelines treat them as replaceable black boxes.
class MmeBackend {
public:
    virtual ~MmeBackend() = default;

    /// f over F_q (coefficients in [0, q)), points with coordinates in
    /// [0, q); returns f(point_i) mod q for every i.
    virtual std::vector<std::uint64_t> evaluate_batch(
        const DensePolynomial<std::uint64_t>& f,
        const std::vector<std::vector<std::uint64_t>>& points,
        std::uint64_t q) const = 0;

    virtual std::string_view name() const = 0;
};

/// Nested multivariate Horner evaluation, O(d^m) field ops per point.
class HornerBackend final : public MmeBackend {
public:
    std::vector<std::uint64_t> evaluate_batch(
        const DensePolynomial<std::uint64_t>& f,
        const std::vector<std::vector<std::uint64_t>>& points,
        std::uint64_t q) const override;
    std::string_view name() const override { return "horner"; }
};

/// Plain monomial-sum evaluation; deliberately different from Horner so the
/// pipelines can be cross-checked for backend independence.
class MonomialBackend final : public MmeBackend {
public:
    std::vector<std::uint64_t> evaluate_batch(
        const DensePolynomial<std::uint64_t>& f,
        const std::vector<std::vector<std::uint64_t>>& points,
        std::uint64_t q) const override;
    std::string_view name() const override { return "monomial"; }
};

/// "horner" (the default) or "monomial". Throws std::invalid_argument on an
/// unknown name.
std::unique_ptr<MmeBackend> make_backend(std::string_view name);

const MmeBackend& default_backend();

}  // namespace mme
