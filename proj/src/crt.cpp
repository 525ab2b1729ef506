#include "mme/crt.hpp"

#include <stdexcept>

#include "mme/errors.hpp"
#include "mme/primes.hpp"

namespace mme {

CrtBasis::CrtBasis(std::vector<std::uint64_t> primes)
    : primes_(std::move(primes)) {
    if (primes_.empty())
        throw std::invalid_argument("CrtBasis needs at least one prime");
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (!is_prime_u64(primes_[i]))
            throw std::invalid_argument("CrtBasis modulus is not prime");
        if (i > 0 && primes_[i - 1] >= primes_[i])
            throw std::invalid_argument("CrtBasis primes must be ascending");
    }
    root_ = build(0, primes_.size());
}

std::unique_ptr<CrtBasis::Node> CrtBasis::build(std::size_t lo,
                                                std::size_t hi) {
    auto node = std::make_unique<Node>();
    node->lo = lo;
    node->hi = hi;
    if (hi - lo == 1) {
        node->product = BigInt(static_cast<unsigned long>(primes_[lo]));
        return node;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    node->left = build(lo, mid);
    node->right = build(mid, hi);
    node->product = node->left->product * node->right->product;
    if (mpz_invert(node->inv_left.raw(), node->left->product.raw(),
                   node->right->product.raw()) == 0)
        throw std::invalid_argument("CrtBasis moduli are not coprime");
    return node;
}

const BigInt& CrtBasis::modulus() const { return root_->product; }

void CrtBasis::reduce_rec(const Node& node, const BigInt& value,
                          std::vector<std::uint64_t>& out) const {
    if (node.hi - node.lo == 1) {
        out[node.lo] = fdiv_r_word(value, primes_[node.lo]);
        return;
    }
    reduce_rec(*node.left, fdiv_r(value, node.left->product), out);
    reduce_rec(*node.right, fdiv_r(value, node.right->product), out);
}

std::vector<std::uint64_t> CrtBasis::reduce(const BigInt& n) const {
    std::vector<std::uint64_t> out(primes_.size());
    reduce_rec(*root_, fdiv_r(n, root_->product), out);
    return out;
}

std::vector<std::uint64_t> CrtBasis::reduce(std::uint64_t n) const {
    std::vector<std::uint64_t> out(primes_.size());
    for (std::size_t i = 0; i < primes_.size(); ++i) out[i] = n % primes_[i];
    return out;
}

BigInt CrtBasis::reconstruct_rec(
    const Node& node, std::span<const std::uint64_t> residues) const {
    if (node.hi - node.lo == 1)
        return BigInt(static_cast<unsigned long>(residues[node.lo]));
    BigInt left = reconstruct_rec(*node.left, residues);
    BigInt right = reconstruct_rec(*node.right, residues);
    // Garner step: left + L * ((right - left) * L^-1 mod R), in [0, L*R).
    BigInt t = fdiv_r((right - left) * node.inv_left, node.right->product);
    return left + node.left->product * t;
}

BigInt CrtBasis::reconstruct(std::span<const std::uint64_t> residues) const {
    if (residues.size() != primes_.size())
        throw std::invalid_argument("residue count does not match basis");
    for (std::size_t i = 0; i < primes_.size(); ++i)
        if (residues[i] >= primes_[i])
            throw std::invalid_argument("residue out of range");
    return reconstruct_rec(*root_, residues);
}

BigInt CrtBasis::reconstruct_signed(
    std::span<const std::uint64_t> residues) const {
    BigInt r = reconstruct(residues);
    if ((r << 1) > modulus()) r -= modulus();
    return r;
}

CrtBasis crt_basis_for_bound(const BigInt& bound,
                             std::span<const std::uint64_t> pool) {
    BigInt product(1);
    std::vector<std::uint64_t> prefix;
    for (std::uint64_t p : pool) {
        prefix.push_back(p);
        product *= BigInt(static_cast<unsigned long>(p));
        if (product > bound) return CrtBasis(std::move(prefix));
    }
    throw PoolExhaustedError("prime pool product does not exceed the bound");
}

CrtBasis crt_basis_covering(const BigInt& bound, std::size_t k_hint) {
    std::size_t k = k_hint < 8 ? 8 : k_hint;
    for (;;) {
        auto pool = first_k_primes(k);
        try {
            return crt_basis_for_bound(bound, pool);
        } catch (const PoolExhaustedError&) {
            k *= 2;
        }
    }
}

}  // namespace mme
