#include "mme/gaussian_mme.hpp"

#include <stdexcept>

#include "mme/approx_mme.hpp"
#include "mme/crt.hpp"
#include "mme/errors.hpp"
#include "mme/modular.hpp"

namespace mme {

namespace {

struct GPair {
    std::uint64_t re = 0, im = 0;
};

GPair gmul(const GPair& a, const GPair& b, std::uint64_t q) {
    return {submod(mulmod(a.re, b.re, q), mulmod(a.im, b.im, q), q),
            addmod(mulmod(a.re, b.im, q), mulmod(a.im, b.re, q), q)};
}

GPair gadd(const GPair& a, const GPair& b, std::uint64_t q) {
    return {addmod(a.re, b.re, q), addmod(a.im, b.im, q)};
}

// Nested Horner over F_q[z]/(z^2+1), innermost variable fastest.
GPair horner_block(const GPair* coeffs, std::size_t vars, std::size_t d,
                   const GPair* point, std::uint64_t q) {
    if (vars == 0) return *coeffs;
    std::size_t stride = 1;
    for (std::size_t i = 1; i < vars; ++i) stride *= d;
    GPair acc{0, 0};
    for (std::size_t e = d; e-- > 0;) {
        GPair block = horner_block(coeffs + e * stride, vars - 1, d,
                                   point + 1, q);
        acc = gadd(gmul(acc, point[0], q), block, q);
    }
    return acc;
}

}  // namespace

std::vector<GaussianInt> mme_gaussian_integers(
    const DensePolynomial<GaussianInt>& f,
    const std::vector<std::vector<GaussianInt>>& points, unsigned long s) {
    if (s < 1) throw std::invalid_argument("bit bound s must be >= 1");
    const BigInt limit = BigInt::pow2(s);
    for (const auto& c : f.coeffs())
        if (!(abs(c.re) < limit) || !(abs(c.im) < limit))
            throw std::invalid_argument("coefficient magnitude reaches 2^s");
    for (const auto& point : points) {
        if (point.size() != f.num_vars())
            throw std::invalid_argument("point arity mismatch");
        for (const auto& x : point)
            if (!(abs(x.re) < limit) || !(abs(x.im) < limit))
                throw std::invalid_argument(
                    "coordinate magnitude reaches 2^s");
    }

    const std::size_t n = points.size();
    if (f.degree_bound() == 1) return std::vector<GaussianInt>(n, f[0]);

    CrtBasis basis =
        crt_basis_covering(BigInt::pow2(s + 1), static_cast<std::size_t>(s));
    const std::size_t L = basis.size();
    const std::size_t m = f.num_vars();
    const std::size_t d = f.degree_bound();

    std::vector<std::vector<GPair>> split_coeffs(
        L, std::vector<GPair>(f.coeff_count()));
    for (std::size_t idx = 0; idx < f.coeff_count(); ++idx) {
        auto re = basis.reduce(f[idx].re);
        auto im = basis.reduce(f[idx].im);
        for (std::size_t l = 0; l < L; ++l)
            split_coeffs[l][idx] = {re[l], im[l]};
    }
    std::vector<std::vector<std::vector<GPair>>> split_points(
        L, std::vector<std::vector<GPair>>(n, std::vector<GPair>(m)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            auto re = basis.reduce(points[i][k].re);
            auto im = basis.reduce(points[i][k].im);
            for (std::size_t l = 0; l < L; ++l)
                split_points[l][i][k] = {re[l], im[l]};
        }

    std::vector<std::vector<GPair>> split_values(L, std::vector<GPair>(n));
    for (std::size_t l = 0; l < L; ++l) {
        const std::uint64_t q = basis.primes()[l];
        for (std::size_t i = 0; i < n; ++i)
            split_values[l][i] = horner_block(split_coeffs[l].data(), m, d,
                                              split_points[l][i].data(), q);
    }

    std::vector<GaussianInt> out;
    out.reserve(n);
    std::vector<std::uint64_t> res_re(L), res_im(L);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < L; ++l) {
            res_re[l] = split_values[l][i].re;
            res_im[l] = split_values[l][i].im;
        }
        GaussianInt value{basis.reconstruct_signed(res_re),
                          basis.reconstruct_signed(res_im)};
        if (!(abs(value.re) < limit) || !(abs(value.im) < limit))
            throw BoundViolationError(
                "evaluation component reaches 2^s; declared bound violated");
        out.push_back(std::move(value));
    }
    return out;
}

GaussianApproxInstance::GaussianApproxInstance(
    DensePolynomial<GaussianOracle> f_,
    std::vector<std::vector<GaussianOracle>> points_, unsigned long t_)
    : f(std::move(f_)), points(std::move(points_)), t(t_) {
    if (t < 1) throw std::invalid_argument("accuracy t must be >= 1");
    for (const auto& c : f.coeffs())
        if (!c.re || !c.im)
            throw std::invalid_argument("null coefficient oracle");
    for (const auto& point : points) {
        if (point.size() != f.num_vars())
            throw std::invalid_argument("point arity mismatch");
        for (const auto& x : point)
            if (!x.re || !x.im)
                throw std::invalid_argument("null coordinate oracle");
    }
}

std::vector<GaussianDyadic> approx_mme_complex(
    const GaussianApproxInstance& inst) {
    const unsigned long t = inst.t;
    const std::size_t n = inst.points.size();
    if (inst.f.degree_bound() == 1) {
        GaussianDyadic b{Dyadic(inst.f[0].re->query(t), t),
                         Dyadic(inst.f[0].im->query(t), t)};
        return std::vector<GaussianDyadic>(n, b);
    }

    // No degree/variable rewrite here: powers of a complex coordinate can
    // leave the oracle range (component bounds only cap the modulus by
    // sqrt(2)), and the rewrite never triggers for the supported sizes.
    const std::size_t d = inst.f.degree_bound();
    const std::size_t m = inst.f.num_vars();
    const unsigned long dm =
        static_cast<unsigned long>(d) * static_cast<unsigned long>(m);
    auto base = approx_scaling_exponents(d, m, t);
    const unsigned long k1 = base.k1 + dm + 2;
    const unsigned long k2 = base.k2 + dm + 2;
    const unsigned long s = 3 * k2 * dm;
    const unsigned long top = k2 * dm;

    DensePolynomial<GaussianInt> g(m, d);
    for (std::size_t idx = 0; idx < inst.f.coeff_count(); ++idx) {
        auto e = inst.f.exponents_of(idx);
        std::size_t degree = 0;
        for (auto v : e) degree += v;
        const unsigned long shift = top - k2 * degree;
        g[idx] = GaussianInt{inst.f[idx].re->query(k1) << shift,
                             inst.f[idx].im->query(k1) << shift};
    }
    std::vector<std::vector<GaussianInt>> hats(n);
    for (std::size_t i = 0; i < n; ++i) {
        hats[i].reserve(m);
        for (const auto& coord : inst.points[i])
            hats[i].push_back(
                GaussianInt{coord.re->query(k2), coord.im->query(k2)});
    }

    auto values = mme_gaussian_integers(g, hats, s);

    const unsigned long shift = k1 + top - t;
    std::vector<GaussianDyadic> out;
    out.reserve(n);
    for (const auto& v : values)
        out.push_back({Dyadic(round_div_2exp(v.re, shift), t),
                       Dyadic(round_div_2exp(v.im, shift), t)});
    return out;
}

}  // namespace mme
