#include "mme/oracle.hpp"

#include <stdexcept>

namespace mme {

RationalOracle::RationalOracle(Rational value) : value_(std::move(value)) {
    // |x| = 1 is admitted so monomials with unit coefficients work; the
    // query bound b_k in [-2^k, 2^k] still holds there.
    if (abs(value_) > Rational(1))
        throw std::invalid_argument("oracle value must satisfy |x| <= 1");
}

OraclePtr make_rational_oracle(const Rational& x) {
    return std::make_shared<RationalOracle>(x);
}

namespace {

class PowerOracle final : public ApproximationOracle {
public:
    PowerOracle(OraclePtr base, unsigned long power)
        : base_(std::move(base)), power_(power) {}

    int sign() const override {
        int s = base_->sign();
        if (s == 0) return 0;
        return (power_ % 2 == 0) ? 1 : s;
    }

protected:
    BigInt query_impl(unsigned long k) const override {
        return power_query(power_, k);
    }

private:
    BigInt power_query(unsigned long power, unsigned long k) const {
        if (power == 1) return base_->query(k);
        if (power % 2 == 0) {
            unsigned long t = k + 3;
            BigInt a = power_query(power / 2, t);
            return round_div_2exp(a * a, 2 * t - k);
        }
        unsigned long t = k + 4;
        BigInt b = base_->query(t);
        BigInt a = power_query((power - 1) / 2, t);
        return round_div_2exp(a * a * b, 3 * t - k);
    }

    OraclePtr base_;
    unsigned long power_;
};

}  // namespace

OraclePtr power_oracle(OraclePtr base, unsigned long power) {
    if (power == 0)
        throw std::invalid_argument("power_oracle needs power >= 1");
    if (!base) throw std::invalid_argument("null base oracle");
    if (power == 1) return base;
    return std::make_shared<PowerOracle>(std::move(base), power);
}

}  // namespace mme
