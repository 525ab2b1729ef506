#include "mme/prime_field_mme.hpp"

#include <bit>
#include <stdexcept>

#include "mme/crt.hpp"
#include "mme/kronecker.hpp"
#include "mme/modular.hpp"
#include "mme/primes.hpp"

namespace mme {

namespace {

std::size_t clog2_u64(std::uint64_t x) {
    return x <= 1 ? 0 : std::bit_width(x - 1);
}

// m < log2(log2(d)), evaluated exactly as 2^(2^m) < d.
bool below_rewrite_threshold(std::size_t m, std::size_t d) {
    if (m >= 6) return false;  // log2 log2 d < 6 for any 64-bit d
    return (1ull << (1ull << m)) < d;
}

std::size_t smallest_power_exceeding(std::size_t base, std::size_t value) {
    std::size_t m = 1, p = base;
    while (p <= value) {
        p *= base;
        ++m;
    }
    return m;
}

}  // namespace

std::vector<std::uint64_t> mme_prime_field(
    const DensePolynomial<std::uint64_t>& f,
    const std::vector<std::vector<std::uint64_t>>& points, std::uint64_t p,
    const MmeBackend& backend, KroneckerRewrite rewrite) {
    if (!is_prime_u64(p)) throw std::invalid_argument("modulus is not prime");
    for (const auto& c : f.coeffs())
        if (c >= p) throw std::invalid_argument("coefficient out of range");
    for (const auto& point : points) {
        if (point.size() != f.num_vars())
            throw std::invalid_argument("point arity mismatch");
        for (auto x : point)
            if (x >= p) throw std::invalid_argument("coordinate out of range");
    }

    DensePolynomial<std::uint64_t> g = f;
    std::vector<std::vector<std::uint64_t>> pts = points;

    const bool apply =
        rewrite == KroneckerRewrite::Force ||
        (rewrite == KroneckerRewrite::Auto && f.degree_bound() >= 16 &&
         below_rewrite_threshold(f.num_vars(), f.degree_bound()));
    if (apply) {
        std::size_t base = std::bit_width(f.degree_bound()) - 1;
        if (base < 2) base = 2;
        std::size_t block = smallest_power_exceeding(base, f.degree_bound());
        g = inverse_kronecker(f, base, block, std::uint64_t{0});
        auto mul = [p](std::uint64_t a, std::uint64_t b) {
            return mulmod(a, b, p);
        };
        for (auto& point : pts)
            point = kronecker_point_map<std::uint64_t>(point, base, block,
                                                       mul, 1 % p);
    }

    const std::size_t d = g.degree_bound();
    const std::size_t m = g.num_vars();

    // Every lifted integer evaluation is below d^m * p * p^{dm}; a prime
    // product beyond that makes the recombination exact.
    const std::size_t pool_hint =
        (d * m + 1) * clog2_u64(p) + m * clog2_u64(d);
    BigInt bound = BigInt(static_cast<unsigned long>(g.coeff_count())) *
                   BigInt::pow(BigInt(static_cast<unsigned long>(p)),
                               static_cast<unsigned long>(d * m + 1));
    CrtBasis basis = crt_basis_covering(bound, pool_hint);
    const std::size_t L = basis.size();

    // residues laid out prime-major for the backend runs
    std::vector<DensePolynomial<std::uint64_t>> split_polys(
        L, DensePolynomial<std::uint64_t>(m, d));
    for (std::size_t idx = 0; idx < g.coeff_count(); ++idx) {
        auto residues = basis.reduce(g[idx]);
        for (std::size_t l = 0; l < L; ++l) split_polys[l][idx] = residues[l];
    }
    std::vector<std::vector<std::vector<std::uint64_t>>> split_points(
        L, std::vector<std::vector<std::uint64_t>>(
               pts.size(), std::vector<std::uint64_t>(m)));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t k = 0; k < m; ++k) {
            auto residues = basis.reduce(pts[i][k]);
            for (std::size_t l = 0; l < L; ++l)
                split_points[l][i][k] = residues[l];
        }

    std::vector<std::vector<std::uint64_t>> split_values(L);
    for (std::size_t l = 0; l < L; ++l)
        split_values[l] = backend.evaluate_batch(
            split_polys[l], split_points[l], basis.primes()[l]);

    std::vector<std::uint64_t> out;
    out.reserve(pts.size());
    std::vector<std::uint64_t> residues(L);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t l = 0; l < L; ++l) residues[l] = split_values[l][i];
        out.push_back(fdiv_r_word(basis.reconstruct(residues), p));
    }
    return out;
}

}  // namespace mme
