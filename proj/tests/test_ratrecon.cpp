#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mme/errors.hpp"
#include "mme/rational.hpp"
#include "mme/ratrecon.hpp"
#include "support.hpp"

using namespace mme;

namespace {

std::vector<BigInt> quotients_of(long a, long b) {
    return quotient_sequence(BigInt(a), BigInt(b)).q;
}

// Folds [q_1, ..., q_t] as q_1 + 1/(q_2 + 1/(...)).
Rational fold_continued_fraction(const std::vector<BigInt>& q) {
    Rational value(q.back());
    for (std::size_t i = q.size() - 1; i-- > 0;)
        value = Rational(q[i]) + Rational(1) / value;
    return value;
}

// Convergent list by the three-term recurrence, the reference for the
// matrix-product route.
std::vector<std::pair<BigInt, BigInt>> convergents_by_recurrence(
    const std::vector<BigInt>& q) {
    std::vector<std::pair<BigInt, BigInt>> out;
    BigInt a_prev(1), b_prev(0);  // virtual index 0
    BigInt a_cur = q[0], b_cur = BigInt(1);
    out.emplace_back(a_cur, b_cur);
    for (std::size_t i = 1; i < q.size(); ++i) {
        BigInt a_next = q[i] * a_cur + a_prev;
        BigInt b_next = q[i] * b_cur + b_prev;
        a_prev = std::move(a_cur);
        b_prev = std::move(b_cur);
        a_cur = std::move(a_next);
        b_cur = std::move(b_next);
        out.emplace_back(a_cur, b_cur);
    }
    return out;
}

}  // namespace

TEST_CASE("quotient_sequence examples") {
    CHECK(quotients_of(7, 3) == std::vector<BigInt>{BigInt(2), BigInt(3)});
    CHECK(quotients_of(5, 5) == std::vector<BigInt>{BigInt(1)});
    CHECK(quotients_of(355, 113) ==
          std::vector<BigInt>{BigInt(3), BigInt(7), BigInt(16)});
    CHECK(quotients_of(2, 3) ==
          std::vector<BigInt>{BigInt(0), BigInt(1), BigInt(2)});
    CHECK_THROWS_AS(quotient_sequence(BigInt(0), BigInt(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(quotient_sequence(BigInt(3), BigInt(-1)),
                    std::invalid_argument);
}

TEST_CASE("quotient sequence folds back to a/b") {
    test::Rng rng(0x3001);
    for (int trial = 0; trial < 100; ++trial) {
        BigInt a = test::rand_bigint_bits(rng, 64) + BigInt(1);
        BigInt b = test::rand_bigint_bits(rng, 64) + BigInt(1);
        auto seq = quotient_sequence(a, b);
        CHECK(fold_continued_fraction(seq.q) == Rational(a, b));
        if (seq.length() >= 2) CHECK(seq.q.back() >= BigInt(2));
        for (std::size_t i = 1; i < seq.length(); ++i)
            CHECK(seq.q[i] >= BigInt(1));
    }
}

TEST_CASE("convergent examples for 355/113") {
    BigInt m(355), n(113);
    auto c1 = convergent(m, n, 1);
    CHECK(c1.num == BigInt(3));
    CHECK(c1.den == BigInt(1));
    auto c2 = convergent(m, n, 2);
    CHECK(c2.num == BigInt(22));
    CHECK(c2.den == BigInt(7));
    auto c3 = convergent(m, n, 3);
    CHECK(c3.num == BigInt(355));
    CHECK(c3.den == BigInt(113));
    CHECK_THROWS_AS(convergent(m, n, 0), std::invalid_argument);
    CHECK_THROWS_AS(convergent(m, n, 4), std::invalid_argument);
}

TEST_CASE("final convergent reproduces the reduced fraction") {
    test::Rng rng(0x3002);
    for (int trial = 0; trial < 50; ++trial) {
        BigInt m = test::rand_bigint_bits(rng, 48) + BigInt(1);
        BigInt n = test::rand_bigint_bits(rng, 48) + BigInt(1);
        ConvergentEngine engine(m, n);
        auto last = engine.convergent(engine.length());
        CHECK(Rational(last.num, last.den) == Rational(m, n));
        CHECK(gcd(last.num, last.den) == BigInt(1));
        auto first = engine.convergent(1);
        CHECK(first.num == engine.quotients().q[0]);
        CHECK(first.den == BigInt(1));
    }
}

TEST_CASE("convergent properties hold on random fractions") {
    test::Rng rng(0x3003);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t bits = test::rand_u64(rng, 8, 512);
        BigInt m = test::rand_bigint_bits(rng, bits) + BigInt(1);
        BigInt n = test::rand_bigint_bits(rng, bits) + BigInt(1);
        Rational alpha(m, n);
        ConvergentEngine engine(m, n);
        const auto& q = engine.quotients().q;
        auto ref = convergents_by_recurrence(q);

        // matrix route equals the recurrence, denominators increase from 2
        for (std::size_t i = 1; i <= engine.length(); ++i) {
            auto c = engine.convergent(i);
            CHECK(c.num == ref[i - 1].first);
            CHECK(c.den == ref[i - 1].second);
            CHECK(gcd(c.num, c.den) == BigInt(1));
            if (i >= 3) CHECK(ref[i - 2].second < ref[i - 1].second);
        }

        // successive difference: a_{n+1}/b_{n+1} - a_n/b_n =
        // (-1)^{n-1} / (b_n b_{n+1})
        for (std::size_t i = 0; i + 1 < ref.size(); ++i) {
            Rational diff = Rational(ref[i + 1].first, ref[i + 1].second) -
                            Rational(ref[i].first, ref[i].second);
            Rational expect(BigInt(1), ref[i].second * ref[i + 1].second);
            if (i % 2 == 1) expect = -expect;  // n = i+1
            CHECK(diff == expect);
        }

        // error sandwich for non-final convergents
        for (std::size_t i = 0; i + 1 < ref.size(); ++i) {
            Rational err =
                abs(alpha - Rational(ref[i].first, ref[i].second));
            Rational upper(BigInt(1), ref[i].second * ref[i + 1].second);
            Rational lower(BigInt(1), ref[i].second * (ref[i].second +
                                                       ref[i + 1].second));
            CHECK(err <= upper);
            CHECK(lower <= err);
        }
    }
}

TEST_CASE("rational_reconstruct examples") {
    // |11/32 - 1/3| = 1/96 < 1/32
    auto r1 = rational_reconstruct(BigInt(11), BigInt(32), 2);
    CHECK(r1.first == BigInt(1));
    CHECK(r1.second == BigInt(3));

    // exact representation with a small denominator
    auto r2 = rational_reconstruct(BigInt(6), BigInt(16), 4);
    CHECK(r2.first == BigInt(3));
    CHECK(r2.second == BigInt(8));

    // |-91/128 + 5/7| = 3/896 < 1/128
    auto r3 = rational_reconstruct(BigInt(-91), BigInt(128), 3);
    CHECK(r3.first == BigInt(-5));
    CHECK(r3.second == BigInt(7));

    auto r4 = rational_reconstruct(BigInt(0), BigInt(128), 4);
    CHECK(r4.first == BigInt(0));
    CHECK(r4.second == BigInt(1));

    CHECK_THROWS_AS(rational_reconstruct(BigInt(3), BigInt(0), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(rational_reconstruct(BigInt(3), BigInt(8), 0),
                    std::invalid_argument);
    // 7/32 is at least 1/32 away from every fraction with denominator < 4
    CHECK_THROWS_AS(rational_reconstruct(BigInt(7), BigInt(32), 2),
                    ReconstructionFailedError);
}

TEST_CASE("reconstruction recovers random hidden fractions") {
    test::Rng rng(0x3004);
    for (int trial = 0; trial < 200; ++trial) {
        auto s = static_cast<unsigned long>(test::rand_u64(rng, 1, 128));
        BigInt b = fdiv_r(test::rand_bigint_bits(rng, s + 4),
                          BigInt::pow2(s) - BigInt(1)) +
                   BigInt(1);  // 1 <= b < 2^s
        BigInt a = fdiv_r(test::rand_bigint_bits(rng, s + 4),
                          BigInt::pow2(s));
        BigInt g = gcd(a, b);
        a = fdiv_q(a, g);
        b = fdiv_q(b, g);
        if (test::rand_u64(rng, 0, 1) != 0u) a = -a;

        // A/B = round-to-floor-or-ceil of a/b at denominator B = 2^{2s+1}
        BigInt big_b = BigInt::pow2(2 * s + 1);
        BigInt floor_a = fdiv_q(a * big_b, b);
        BigInt cand_a = floor_a;
        if (test::rand_u64(rng, 0, 1) != 0u &&
            !(Rational(floor_a, big_b) == Rational(a, b)))
            cand_a += BigInt(1);

        auto [ra, rb] = rational_reconstruct(cand_a, big_b, s);
        CHECK(ra == a);
        CHECK(rb == b);
    }
}
