#include "mme/approx_mme.hpp"

#include <bit>
#include <stdexcept>

#include "mme/int_mme.hpp"
#include "mme/kronecker.hpp"

namespace mme {

namespace {

bool below_rewrite_threshold(std::size_t m, std::size_t d) {
    if (m >= 6) return false;
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

OraclePtr zero_oracle() {
    static const OraclePtr zero = make_rational_oracle(Rational(0));
    return zero;
}

}  // namespace

ApproxInstance::ApproxInstance(DensePolynomial<OraclePtr> f_,
                               std::vector<std::vector<OraclePtr>> points_,
                               unsigned long t_)
    : f(std::move(f_)), points(std::move(points_)), t(t_) {
    if (t < 1) throw std::invalid_argument("accuracy t must be >= 1");
    for (const auto& c : f.coeffs())
        if (!c) throw std::invalid_argument("null coefficient oracle");
    for (const auto& point : points) {
        if (point.size() != f.num_vars())
            throw std::invalid_argument("point arity mismatch");
        for (const auto& x : point)
            if (!x) throw std::invalid_argument("null coordinate oracle");
    }
}

DensePolynomial<Dyadic> round_poly(const DensePolynomial<OraclePtr>& f,
                                   unsigned long k) {
    if (k < 1) throw std::invalid_argument("rounding precision must be >= 1");
    DensePolynomial<Dyadic> out(f.num_vars(), f.degree_bound());
    for (std::size_t i = 0; i < f.coeff_count(); ++i)
        out[i] = Dyadic(f[i]->query(k), k);
    return out;
}

std::vector<Dyadic> round_point(std::span<const OraclePtr> point,
                                unsigned long k, std::size_t d) {
    const std::size_t m = point.size();
    BigInt threshold =
        BigInt(4) * BigInt(static_cast<unsigned long>(d * d)) *
        BigInt(static_cast<unsigned long>(m)) *
        BigInt(static_cast<unsigned long>(m));
    if (!(BigInt::pow2(k) > threshold))
        throw std::invalid_argument(
            "rounding precision too small: need 2^k > 4 d^2 m^2");
    std::vector<Dyadic> out;
    out.reserve(m);
    for (const auto& x : point) out.emplace_back(x->query(k), k);
    return out;
}

ApproxExponents approx_scaling_exponents(std::size_t d, std::size_t m,
                                         unsigned long t) {
    if (d < 2) throw std::invalid_argument("needs degree bound d >= 2");
    BigInt dm = BigInt::pow(BigInt(static_cast<unsigned long>(d)),
                            static_cast<unsigned long>(m));
    unsigned long k1 = t + 2 + static_cast<unsigned long>(ceil_log2(dm));
    BigInt inner = BigInt(4) * BigInt(static_cast<unsigned long>(m)) * dm *
                   BigInt(static_cast<unsigned long>(d));
    unsigned long k2 = t + 2 + static_cast<unsigned long>(ceil_log2(inner));
    return {k1, k2};
}

ScaledIntegerInstance build_scaled_instance(
    const DensePolynomial<Dyadic>& rounded_f,
    const std::vector<std::vector<Dyadic>>& rounded_points, unsigned long s) {
    const std::size_t d = rounded_f.degree_bound();
    const std::size_t m = rounded_f.num_vars();
    const unsigned long k1 = rounded_f.coeff_count() > 0
                                 ? rounded_f[0].exponent
                                 : 0;
    const unsigned long k2 =
        !rounded_points.empty() && !rounded_points[0].empty()
            ? rounded_points[0][0].exponent
            : 0;
    const unsigned long top = k2 * static_cast<unsigned long>(d) *
                              static_cast<unsigned long>(m);

    DensePolynomial<BigInt> g(m, d);
    for (std::size_t idx = 0; idx < rounded_f.coeff_count(); ++idx) {
        auto e = rounded_f.exponents_of(idx);
        std::size_t degree = 0;
        for (auto v : e) degree += v;
        g[idx] = rounded_f[idx].mantissa << (top - k2 * degree);
    }
    std::vector<std::vector<BigInt>> hats;
    hats.reserve(rounded_points.size());
    for (const auto& point : rounded_points) {
        std::vector<BigInt> hat;
        hat.reserve(point.size());
        for (const auto& coord : point) hat.push_back(coord.mantissa);
        hats.push_back(std::move(hat));
    }
    return {std::move(g), std::move(hats), k1, k2, s};
}

std::vector<BigInt> approx_mme_real(const ApproxInstance& inst,
                                    const MmeBackend& backend) {
    const unsigned long t = inst.t;
    if (inst.f.degree_bound() == 1) {
        // constant polynomial: its t-bit approximation is the answer
        BigInt b = inst.f[0]->query(t);
        return std::vector<BigInt>(inst.points.size(), b);
    }

    DensePolynomial<OraclePtr> f = inst.f;
    std::vector<std::vector<OraclePtr>> pts = inst.points;
    if (f.degree_bound() >= 16 &&
        below_rewrite_threshold(f.num_vars(), f.degree_bound())) {
        std::size_t base = std::bit_width(f.degree_bound()) - 1;
        std::size_t block = smallest_power_exceeding(base, f.degree_bound());
        f = inverse_kronecker(inst.f, base, block, zero_oracle());
        for (auto& point : pts) {
            std::vector<OraclePtr> expanded;
            expanded.reserve(point.size() * block);
            for (const auto& coord : point) {
                unsigned long power = 1;
                for (std::size_t j = 0; j < block; ++j) {
                    expanded.push_back(power_oracle(coord, power));
                    power *= base;
                }
            }
            point = std::move(expanded);
        }
    }

    const std::size_t d = f.degree_bound();
    const std::size_t m = f.num_vars();
    auto [k1, k2] = approx_scaling_exponents(d, m, t);
    const unsigned long s = 3 * k2 * static_cast<unsigned long>(d) *
                            static_cast<unsigned long>(m);

    auto rounded_f = round_poly(f, k1);
    std::vector<std::vector<Dyadic>> rounded_points;
    rounded_points.reserve(pts.size());
    for (const auto& point : pts)
        rounded_points.push_back(round_point(point, k2, d));

    auto scaled = build_scaled_instance(rounded_f, rounded_points, s);
    auto values = mme_integers(
        IntMmeInstance(std::move(scaled.G), std::move(scaled.hat_points), s),
        backend);

    const unsigned long shift =
        k1 + k2 * static_cast<unsigned long>(d) *
                 static_cast<unsigned long>(m) - t;
    std::vector<BigInt> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(round_div_2exp(v, shift));
    return out;
}

}  // namespace mme
