#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mme/crt.hpp"
#include "mme/errors.hpp"
#include "mme/primes.hpp"
#include "support.hpp"

using namespace mme;

namespace {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t i = 2; i * i <= n; ++i)
        if (n % i == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("prime_sieve small cases") {
    CHECK(prime_sieve(3) == std::vector<std::uint64_t>{2});
    CHECK(prime_sieve(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    auto p100 = prime_sieve(100);
    CHECK(p100.size() == 25);
    CHECK(p100.back() == 97);
    CHECK_THROWS_AS(prime_sieve(1), std::invalid_argument);
    CHECK_THROWS_AS(prime_sieve(0), std::invalid_argument);
}

TEST_CASE("prime_sieve matches trial division up to 10^4") {
    auto primes = prime_sieve(10000);
    std::size_t idx = 0;
    for (std::uint64_t n = 2; n < 10000; ++n) {
        if (trial_division_prime(n)) {
            REQUIRE(idx < primes.size());
            CHECK(primes[idx] == n);
            ++idx;
        }
    }
    CHECK(idx == primes.size());
}

TEST_CASE("first_k_primes") {
    CHECK(first_k_primes(1) == std::vector<std::uint64_t>{2});
    CHECK(first_k_primes(5) == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
    auto p = first_k_primes(1000);
    CHECK(p.size() == 1000);
    CHECK(p.back() == 7919);
    CHECK_THROWS_AS(first_k_primes(0), std::invalid_argument);
}

TEST_CASE("is_prime_u64") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64((1ull << 31) - 1));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to 2,3,5,7
    for (std::uint64_t n = 2; n < 2000; ++n)
        CHECK(is_prime_u64(n) == trial_division_prime(n));
}

TEST_CASE("crt_basis_for_bound picks the minimal prefix") {
    std::vector<std::uint64_t> pool{2, 3, 5, 7};
    auto b1 = crt_basis_for_bound(BigInt(5), pool);
    CHECK(b1.primes() == std::vector<std::uint64_t>{2, 3});
    CHECK(b1.modulus() == BigInt(6));

    // 2*3*5 = 30 is not strictly above 30, so the prefix extends to 7
    auto b2 = crt_basis_for_bound(BigInt(30), pool);
    CHECK(b2.primes() == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(b2.modulus() == BigInt(210));

    CHECK_THROWS_AS(crt_basis_for_bound(BigInt(1000), pool),
                    PoolExhaustedError);
}

TEST_CASE("crt_basis_for_bound against the cumulative-product oracle") {
    BigInt bound = BigInt::pow2(128);
    auto pool = first_k_primes(100);
    auto basis = crt_basis_for_bound(bound, pool);

    BigInt product(1);
    std::size_t expect = 0;
    while (product <= bound) {
        product *= BigInt(static_cast<unsigned long>(pool[expect]));
        ++expect;
    }
    CHECK(basis.size() == expect);
    CHECK(basis.modulus() == product);

    // minimality: dropping the last prime lands at or below the bound
    BigInt without_last = fdiv_q(
        basis.modulus(),
        BigInt(static_cast<unsigned long>(basis.primes().back())));
    CHECK(without_last <= bound);
}

TEST_CASE("crt_reduce examples") {
    CrtBasis b357({3, 5, 7});
    CHECK(b357.reduce(BigInt(23)) == std::vector<std::uint64_t>{2, 3, 2});
    CHECK(b357.reduce(BigInt(0)) == std::vector<std::uint64_t>{0, 0, 0});

    CrtBasis b35({3, 5});
    CHECK(b35.reduce(BigInt(-1)) == std::vector<std::uint64_t>{2, 4});
}

TEST_CASE("crt_reduce agrees with schoolbook reduction") {
    test::Rng rng(0xB001);
    auto basis = CrtBasis(first_k_primes(37));
    for (int i = 0; i < 100; ++i) {
        BigInt n = test::rand_bigint_signed(rng, 300);
        auto got = basis.reduce(n);
        for (std::size_t j = 0; j < basis.size(); ++j)
            CHECK(got[j] ==
                  fdiv_r_word(n, basis.primes()[j]));
    }
    // word fast path agrees with the tree
    for (int i = 0; i < 50; ++i) {
        std::uint64_t n = test::rand_u64(rng, 0, ~0ull >> 1);
        CHECK(basis.reduce(n) ==
              basis.reduce(BigInt(static_cast<unsigned long>(n))));
    }
}

TEST_CASE("crt_reconstruct examples") {
    CrtBasis b357({3, 5, 7});
    std::vector<std::uint64_t> r{2, 3, 2};
    CHECK(b357.reconstruct(r) == BigInt(23));

    std::vector<std::uint64_t> zeros{0, 0, 0};
    CHECK(b357.reconstruct(zeros) == BigInt(0));

    CrtBasis b23({2, 3});
    std::vector<std::uint64_t> ones{1, 1};
    CHECK(b23.reconstruct(ones) == BigInt(1));

    std::vector<std::uint64_t> bad{3, 0, 0};
    CHECK_THROWS_AS(b357.reconstruct(bad), std::invalid_argument);
    std::vector<std::uint64_t> short_list{1, 1};
    CHECK_THROWS_AS(b357.reconstruct(short_list), std::invalid_argument);
}

TEST_CASE("crt_reconstruct_signed examples") {
    CrtBasis b35({3, 5});
    std::vector<std::uint64_t> minus_one{2, 4};
    CHECK(b35.reconstruct_signed(minus_one) == BigInt(-1));
    std::vector<std::uint64_t> seven{1, 2};
    CHECK(b35.reconstruct_signed(seven) == BigInt(7));

    BigInt v = -BigInt::pow2(40);
    auto basis = crt_basis_covering(BigInt::pow2(41), 8);
    CHECK(basis.reconstruct_signed(basis.reduce(v)) == v);
}

TEST_CASE("signed roundtrip for |N| < M/2") {
    test::Rng rng(0xB002);
    for (std::size_t nprimes : {1u, 2u, 7u, 40u}) {
        CrtBasis basis(first_k_primes(nprimes));
        std::size_t bits = basis.modulus().bit_length() - 1;
        for (int i = 0; i < 60; ++i) {
            BigInt n = test::rand_bigint_signed(rng, bits > 1 ? bits - 1 : 1);
            if (!((abs(n) << 1) < basis.modulus())) continue;
            CHECK(basis.reconstruct_signed(basis.reduce(n)) == n);
        }
        // unsigned roundtrip over [0, M)
        for (int i = 0; i < 30; ++i) {
            BigInt n = fdiv_r(test::rand_bigint_bits(rng, bits + 17),
                              basis.modulus());
            CHECK(basis.reconstruct(basis.reduce(n)) == n);
        }
    }
}

TEST_CASE("CrtBasis rejects bad moduli") {
    CHECK_THROWS_AS(CrtBasis({4}), std::invalid_argument);
    CHECK_THROWS_AS(CrtBasis({3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(CrtBasis({5, 3}), std::invalid_argument);
    CHECK_THROWS_AS(CrtBasis({}), std::invalid_argument);
}

TEST_CASE("crt free functions mirror the methods") {
    CrtBasis basis({3, 5, 7});
    BigInt n(53);
    auto r = crt_reduce(n, basis);
    CHECK(crt_reconstruct(r, basis) == BigInt(53));
    CHECK(crt_reconstruct_signed(crt_reduce(BigInt(-2), basis), basis) ==
          BigInt(-2));
}
