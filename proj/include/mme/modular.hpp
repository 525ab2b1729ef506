#pragma once

#include <cstdint>

namespace mme {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b,
                            std::uint64_t m) {
    if (m <= 0xFFFFFFFFull) return a * b % m;  // operands already < m
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b %
                                      m);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b,
                            std::uint64_t m) {
    std::uint64_t s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b,
                            std::uint64_t m) {
    return a >= b ? a - b : m - (b - a);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e,
                            std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1u) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace mme
