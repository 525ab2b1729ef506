#include "mme/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace mme {

namespace {

// Sieve of Eratosthenes over [2, limit): entry i marks whether i is prime.
std::vector<std::uint64_t> sieve_below(std::uint64_t limit) {
    std::vector<bool> composite(limit < 2 ? 0 : limit, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        if (i <= (limit - 1) / i)
            for (std::uint64_t j = i * i; j < limit; j += i)
                composite[j] = true;
    }
    return primes;
}

// Monotone cache: re-sieving the same range over and over inside the
// per-prime pipelines would dominate otherwise. Outputs are identical to a
// fresh sieve.
struct SieveCache {
    std::mutex mu;
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;

    // Primes below n, growing the cache as needed.
    std::vector<std::uint64_t> below(std::uint64_t n) {
        std::lock_guard<std::mutex> lock(mu);
        if (n > limit) {
            limit = std::max<std::uint64_t>(n, 64);
            primes = sieve_below(limit);
        }
        auto end = std::lower_bound(primes.begin(), primes.end(), n);
        return std::vector<std::uint64_t>(primes.begin(), end);
    }
};

SieveCache& cache() {
    static SieveCache c;
    return c;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b %
                                      m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1u) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

std::vector<std::uint64_t> prime_sieve(std::uint64_t n) {
    if (n <= 1) throw std::invalid_argument("prime_sieve needs n > 1");
    return cache().below(n);
}

std::vector<std::uint64_t> first_k_primes(std::size_t k) {
    if (k == 0) throw std::invalid_argument("first_k_primes needs k >= 1");
    std::uint64_t bound = 13;
    if (k >= 6) {
        double kk = static_cast<double>(k);
        bound = static_cast<std::uint64_t>(
                    std::ceil(kk * (std::log(kk) + std::log(std::log(kk))))) +
                1;
    }
    for (;;) {
        auto primes = cache().below(bound);
        if (primes.size() >= k) {
            primes.resize(k);
            return primes;
        }
        bound *= 2;
    }
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace mme
