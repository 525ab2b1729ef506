#pragma once

#include <cstdint>
#include <vector>

namespace mme {

/// All primes strictly below n, ascending, by sieve of Eratosthenes.
/// Throws std::invalid_argument for n <= 1. Thread-safe.
std::vector<std::uint64_t> prime_sieve(std::uint64_t n);

/// The first k primes 2, 3, 5, ... The sieve bound starts at
/// k(ln k + ln ln k) for k >= 6 (13 below that) and doubles on shortfall.
/// Throws std::invalid_argument for k == 0. Thread-safe.
std::vector<std::uint64_t> first_k_primes(std::size_t k);

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

}  // namespace mme
