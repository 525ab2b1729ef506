#include "mme/bigint.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace mme {

BigInt BigInt::from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size())
        throw std::invalid_argument("integer literal has no digits");
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw std::invalid_argument("bad integer literal: " +
                                        std::string(text));
    std::string_view digits = (text[0] == '+') ? text.substr(1) : text;
    BigInt r;
    if (mpz_set_str(r.z_, std::string(digits).c_str(), 10) != 0)
        throw std::invalid_argument("bad integer literal: " +
                                    std::string(text));
    return r;
}

std::string BigInt::to_string() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    void (*freefn)(void*, std::size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

unsigned long BigInt::to_ulong() const {
    if (!fits_ulong()) throw std::overflow_error("BigInt does not fit ulong");
    return mpz_get_ui(z_);
}

long BigInt::to_slong() const {
    if (!fits_slong()) throw std::overflow_error("BigInt does not fit slong");
    return mpz_get_si(z_);
}

std::ostream& operator<<(std::ostream& os, const BigInt& a) {
    return os << a.to_string();
}

BigInt round_div_2exp(const BigInt& n, unsigned long k) {
    if (k == 0) return n;
    // ceil((2n - 2^k) / 2^(k+1))
    BigInt t = (n << 1) - BigInt::pow2(k);
    return cdiv_q(t, BigInt::pow2(k + 1));
}

std::size_t ceil_log2(const BigInt& n) {
    if (n.sign() <= 0) throw std::invalid_argument("ceil_log2 needs n >= 1");
    BigInt m = n - BigInt(1);
    return m.bit_length();
}

}  // namespace mme
