#include "mme/rat_mme.hpp"

#include <stdexcept>

#include "mme/approx_mme.hpp"
#include "mme/oracle.hpp"
#include "mme/ratrecon.hpp"

namespace mme {

namespace {

void check_value(const Rational& x, const BigInt& limit) {
    if (abs(x) > Rational(1))
        throw std::invalid_argument("input magnitude exceeds 1");
    if (!(abs(x.num()) < limit) || !(x.den() < limit))
        throw std::invalid_argument(
            "input numerator or denominator reaches 2^s");
}

}  // namespace

RatMmeInstance::RatMmeInstance(DensePolynomial<Rational> f_,
                               std::vector<std::vector<Rational>> points_,
                               unsigned long s_)
    : f(std::move(f_)), points(std::move(points_)), s(s_) {
    if (s < 1) throw std::invalid_argument("bit bound s must be >= 1");
    const BigInt limit = BigInt::pow2(s);
    for (const auto& c : f.coeffs()) check_value(c, limit);
    for (const auto& point : points) {
        if (point.size() != f.num_vars())
            throw std::invalid_argument("point arity mismatch");
        for (const auto& x : point) check_value(x, limit);
    }
}

std::vector<Rational> mme_rationals(const RatMmeInstance& inst,
                                    const MmeBackend& backend) {
    const unsigned long t = 2 * inst.s + 1;

    DensePolynomial<OraclePtr> oracle_f(inst.f.num_vars(),
                                        inst.f.degree_bound());
    for (std::size_t i = 0; i < inst.f.coeff_count(); ++i)
        oracle_f[i] = make_rational_oracle(inst.f[i]);
    std::vector<std::vector<OraclePtr>> oracle_points(inst.points.size());
    for (std::size_t i = 0; i < inst.points.size(); ++i)
        for (const auto& x : inst.points[i])
            oracle_points[i].push_back(make_rational_oracle(x));

    auto approx = approx_mme_real(
        ApproxInstance(std::move(oracle_f), std::move(oracle_points), t),
        backend);

    const BigInt denominator = BigInt::pow2(t);
    std::vector<Rational> out;
    out.reserve(approx.size());
    for (const auto& b : approx) {
        auto [num, den] = rational_reconstruct(b, denominator, inst.s);
        out.emplace_back(num, den);
    }
    return out;
}

}  // namespace mme
