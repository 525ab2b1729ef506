#include "mme/int_mme.hpp"

#include <stdexcept>

#include "mme/crt.hpp"
#include "mme/errors.hpp"
#include "mme/prime_field_mme.hpp"

namespace mme {

IntMmeInstance::IntMmeInstance(DensePolynomial<BigInt> f_,
                               std::vector<std::vector<BigInt>> points_,
                               unsigned long s_)
    : f(std::move(f_)), points(std::move(points_)), s(s_) {
    if (s < 1) throw std::invalid_argument("bit bound s must be >= 1");
    const BigInt limit = BigInt::pow2(s);
    for (const auto& c : f.coeffs())
        if (!(abs(c) < limit))
            throw std::invalid_argument("coefficient magnitude reaches 2^s");
    for (const auto& point : points) {
        if (point.size() != f.num_vars())
            throw std::invalid_argument("point arity mismatch");
        for (const auto& x : point)
            if (!(abs(x) < limit))
                throw std::invalid_argument(
                    "coordinate magnitude reaches 2^s");
    }
}

std::vector<BigInt> mme_integers(const IntMmeInstance& inst,
                                 const MmeBackend& backend) {
    const std::size_t n = inst.points.size();
    if (inst.f.degree_bound() == 1)
        return std::vector<BigInt>(n, inst.f[0]);

    CrtBasis basis = crt_basis_covering(BigInt::pow2(inst.s + 1),
                                        static_cast<std::size_t>(inst.s));
    const std::size_t L = basis.size();
    const std::size_t m = inst.f.num_vars();
    const std::size_t d = inst.f.degree_bound();

    std::vector<DensePolynomial<std::uint64_t>> split_polys(
        L, DensePolynomial<std::uint64_t>(m, d));
    for (std::size_t idx = 0; idx < inst.f.coeff_count(); ++idx) {
        auto residues = basis.reduce(inst.f[idx]);
        for (std::size_t l = 0; l < L; ++l) split_polys[l][idx] = residues[l];
    }
    std::vector<std::vector<std::vector<std::uint64_t>>> split_points(
        L, std::vector<std::vector<std::uint64_t>>(
               n, std::vector<std::uint64_t>(m)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            auto residues = basis.reduce(inst.points[i][k]);
            for (std::size_t l = 0; l < L; ++l)
                split_points[l][i][k] = residues[l];
        }

    std::vector<std::vector<std::uint64_t>> split_values(L);
    for (std::size_t l = 0; l < L; ++l)
        split_values[l] = mme_prime_field(split_polys[l], split_points[l],
                                          basis.primes()[l], backend);

    const BigInt limit = BigInt::pow2(inst.s);
    std::vector<BigInt> out;
    out.reserve(n);
    std::vector<std::uint64_t> residues(L);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < L; ++l) residues[l] = split_values[l][i];
        BigInt value = basis.reconstruct_signed(residues);
        if (!(abs(value) < limit))
            throw BoundViolationError(
                "evaluation magnitude reaches 2^s; declared bound violated");
        out.push_back(std::move(value));
    }
    return out;
}

unsigned long naive_output_bound(std::size_t d, std::size_t m,
                                 unsigned long s) {
    if (d == 0) throw std::invalid_argument("degree bound must be >= 1");
    if (m == 0) throw std::invalid_argument("need at least one variable");
    if (d == 1) return s;
    BigInt dm = BigInt::pow(BigInt(static_cast<unsigned long>(d)),
                            static_cast<unsigned long>(m));
    return s * static_cast<unsigned long>(d) * static_cast<unsigned long>(m) +
           s + static_cast<unsigned long>(ceil_log2(dm));
}

}  // namespace mme
