#include "mme/dyadic.hpp"

#include <stdexcept>

namespace mme {

Dyadic Dyadic::from_string(std::string_view text) {
    auto sep = text.find("/2^");
    if (sep == std::string_view::npos)
        throw std::invalid_argument("bad dyadic literal (want a/2^k): " +
                                    std::string(text));
    BigInt m = BigInt::from_string(text.substr(0, sep));
    BigInt k = BigInt::from_string(text.substr(sep + 3));
    if (k.sign() < 0 || !k.fits_ulong())
        throw std::invalid_argument("bad dyadic exponent: " +
                                    std::string(text));
    return Dyadic(std::move(m), k.to_ulong());
}

std::string Dyadic::to_string() const {
    return mantissa.to_string() + "/2^" + std::to_string(exponent);
}

Dyadic dyadic_rescale(const Dyadic& x, unsigned long k) {
    if (k >= x.exponent) return Dyadic(x.mantissa << (k - x.exponent), k);
    return Dyadic(round_div_2exp(x.mantissa, x.exponent - k), k);
}

}  // namespace mme
