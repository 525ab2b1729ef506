#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "mme/bigint.hpp"

namespace mme {

/// Ordered coprime prime moduli p_1..p_L with a cached balanced product
/// tree, so repeated reductions and reconstructions over the same basis
/// amortize to quasi-linear cost. Immutable after construction; reduce and
/// reconstruct are reentrant.
class CrtBasis {
public:
    /// Primes must be ascending, distinct, and actually prime.
    explicit CrtBasis(std::vector<std::uint64_t> primes);

    CrtBasis(CrtBasis&&) noexcept = default;
    CrtBasis& operator=(CrtBasis&&) noexcept = default;

    const std::vector<std::uint64_t>& primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }
    /// M = p_1 * ... * p_L.
    const BigInt& modulus() const;

    /// Residues n mod p_i in [0, p_i), via remainder-tree descent. Negative
    /// n wraps.
    std::vector<std::uint64_t> reduce(const BigInt& n) const;
    /// Word fast path, same results as reduce(BigInt(n)).
    std::vector<std::uint64_t> reduce(std::uint64_t n) const;

    /// The unique value in [0, M) with the given residues, combined up the
    /// tree with precomputed inverses. Throws std::invalid_argument on a
    /// residue count mismatch or an out-of-range residue.
    BigInt reconstruct(std::span<const std::uint64_t> residues) const;
    /// The unique representative in (-M/2, M/2].
    BigInt reconstruct_signed(std::span<const std::uint64_t> residues) const;

private:
    struct Node {
        BigInt product;
        BigInt inv_left;  // (left subtree product)^-1 mod right product
        std::size_t lo, hi;
        std::unique_ptr<Node> left, right;
    };

    std::unique_ptr<Node> build(std::size_t lo, std::size_t hi);
    void reduce_rec(const Node& node, const BigInt& value,
                    std::vector<std::uint64_t>& out) const;
    BigInt reconstruct_rec(const Node& node,
                           std::span<const std::uint64_t> residues) const;

    std::vector<std::uint64_t> primes_;
    std::unique_ptr<Node> root_;
};

/// Basis over the minimal prefix of `pool` whose product exceeds `bound`.
/// Throws PoolExhaustedError when the whole pool is not enough.
CrtBasis crt_basis_for_bound(const BigInt& bound,
                             std::span<const std::uint64_t> pool);

/// crt_basis_for_bound over first_k_primes(k_hint), doubling k on
/// PoolExhaustedError until the bound is covered.
CrtBasis crt_basis_covering(const BigInt& bound, std::size_t k_hint);

inline std::vector<std::uint64_t> crt_reduce(const BigInt& n,
                                             const CrtBasis& basis) {
    return basis.reduce(n);
}
inline BigInt crt_reconstruct(std::span<const std::uint64_t> residues,
                              const CrtBasis& basis) {
    return basis.reconstruct(residues);
}
inline BigInt crt_reconstruct_signed(std::span<const std::uint64_t> residues,
                                     const CrtBasis& basis) {
    return basis.reconstruct_signed(residues);
}

}  // namespace mme
