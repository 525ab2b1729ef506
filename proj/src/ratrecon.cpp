#include "mme/ratrecon.hpp"

#include <array>
#include <stdexcept>

#include "mme/errors.hpp"

namespace mme {

namespace {

// Column-major [[a, c], [b, d]] acting on convergents:
// prefix product P_i = Q_1 ... Q_i with Q_j = [[q_j, 1], [1, 0]] has
// P_i = [[a_i, a_{i-1}], [b_i, b_{i-1}]].
struct Mat2 {
    BigInt a, b, c, d;
};

Mat2 mul(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.c * y.b, x.b * y.a + x.d * y.b,
            x.a * y.c + x.c * y.d, x.b * y.c + x.d * y.d};
}

// Balanced product of Q_{lo+1} .. Q_{hi} (0-based half-open over quotients).
Mat2 quotient_product(const std::vector<BigInt>& q, std::size_t lo,
                      std::size_t hi) {
    if (hi - lo == 1) return {q[lo], BigInt(1), BigInt(1), BigInt(0)};
    std::size_t mid = lo + (hi - lo) / 2;
    return mul(quotient_product(q, lo, mid), quotient_product(q, mid, hi));
}

}  // namespace

QuotientSequence quotient_sequence(const BigInt& a, const BigInt& b) {
    if (a.sign() <= 0 || b.sign() <= 0)
        throw std::invalid_argument("quotient_sequence needs a, b > 0");
    QuotientSequence seq;
    BigInt prev = a;
    BigInt cur = b;
    while (!cur.is_zero()) {
        BigInt quot, rem;
        fdiv_qr(quot, rem, prev, cur);
        seq.q.push_back(std::move(quot));
        prev = std::move(cur);
        cur = std::move(rem);
    }
    // fold a trailing [.., q, 1] into [.., q+1] (canonical form)
    if (seq.q.size() >= 2 && seq.q.back() == BigInt(1)) {
        seq.q.pop_back();
        seq.q.back() += BigInt(1);
    }
    return seq;
}

Convergent ConvergentEngine::convergent(std::size_t i) const {
    if (i < 1 || i > quotients_.length())
        throw std::invalid_argument("convergent index out of range");
    Mat2 p = quotient_product(quotients_.q, 0, i);
    return Convergent{std::move(p.a), std::move(p.b), i};
}

Convergent convergent(const BigInt& m, const BigInt& n, std::size_t i) {
    return ConvergentEngine(m, n).convergent(i);
}

std::pair<BigInt, BigInt> rational_reconstruct(const BigInt& a_approx,
                                               const BigInt& b_approx,
                                               unsigned long s) {
    if (b_approx.sign() <= 0)
        throw std::invalid_argument("rational_reconstruct needs B > 0");
    if (s < 1) throw std::invalid_argument("bit bound s must be >= 1");
    if (a_approx.is_zero()) return {BigInt(0), BigInt(1)};

    const BigInt den_cap = BigInt::pow2(s);
    ConvergentEngine engine(abs(a_approx), b_approx);
    const std::size_t t = engine.length();

    // b_1 = 1 always qualifies; denominators increase strictly from index 2,
    // so binary-search the largest index with denominator below 2^s there.
    std::size_t best = 1;
    if (t >= 2 && engine.convergent(2).den < den_cap) {
        std::size_t lo = 2, hi = t;  // invariant: den(lo) < 2^s
        while (lo < hi) {
            std::size_t mid = lo + (hi - lo + 1) / 2;
            if (engine.convergent(mid).den < den_cap)
                lo = mid;
            else
                hi = mid - 1;
        }
        best = lo;
    }

    Convergent conv = engine.convergent(best);
    // verify |A/B - a/b| < 2^-(2s+1) exactly
    BigInt lhs = abs(abs(a_approx) * conv.den - conv.num * b_approx)
                 << (2 * s + 1);
    if (!(lhs < b_approx * conv.den))
        throw ReconstructionFailedError(
            "no convergent with denominator below 2^s is within 2^-(2s+1)");
    BigInt num = a_approx.sign() < 0 ? -conv.num : std::move(conv.num);
    return {std::move(num), std::move(conv.den)};
}

}  // namespace mme
