#include "mme/backend.hpp"

#include <stdexcept>

#include "mme/modular.hpp"

namespace mme {

namespace {

// Evaluates the coefficient block coeffs[0 .. d^vars) as a polynomial in
// point[0..vars), innermost variable fastest.
std::uint64_t horner_block(const std::uint64_t* coeffs, std::size_t vars,
                           std::size_t d, const std::uint64_t* point,
                           std::uint64_t q) {
    if (vars == 0) return *coeffs % q;
    std::size_t stride = 1;
    for (std::size_t i = 1; i < vars; ++i) stride *= d;
    const std::uint64_t x = point[0] % q;
    std::uint64_t acc = 0;
    for (std::size_t e = d; e-- > 0;) {
        std::uint64_t block =
            horner_block(coeffs + e * stride, vars - 1, d, point + 1, q);
        acc = addmod(mulmod(acc, x, q), block, q);
    }
    return acc;
}

}  // namespace

std::vector<std::uint64_t> HornerBackend::evaluate_batch(
    const DensePolynomial<std::uint64_t>& f,
    const std::vector<std::vector<std::uint64_t>>& points,
    std::uint64_t q) const {
    std::vector<std::uint64_t> out;
    out.reserve(points.size());
    for (const auto& point : points) {
        if (point.size() != f.num_vars())
            throw std::invalid_argument("point arity mismatch");
        out.push_back(horner_block(f.coeffs().data(), f.num_vars(),
                                   f.degree_bound(), point.data(), q));
    }
    return out;
}

std::vector<std::uint64_t> MonomialBackend::evaluate_batch(
    const DensePolynomial<std::uint64_t>& f,
    const std::vector<std::vector<std::uint64_t>>& points,
    std::uint64_t q) const {
    const std::size_t m = f.num_vars();
    const std::size_t d = f.degree_bound();
    std::vector<std::uint64_t> out;
    out.reserve(points.size());
    for (const auto& point : points) {
        if (point.size() != m)
            throw std::invalid_argument("point arity mismatch");
        // power tables x_i^e for e < d
        std::vector<std::uint64_t> powers(m * d);
        for (std::size_t i = 0; i < m; ++i) {
            powers[i * d] = 1 % q;
            for (std::size_t e = 1; e < d; ++e)
                powers[i * d + e] = mulmod(powers[i * d + e - 1],
                                           point[i] % q, q);
        }
        std::uint64_t total = 0;
        for (std::size_t idx = 0; idx < f.coeff_count(); ++idx) {
            std::uint64_t term = f[idx] % q;
            std::size_t rest = idx;
            for (std::size_t i = m; i-- > 0;) {
                term = mulmod(term, powers[i * d + rest % d], q);
                rest /= d;
            }
            total = addmod(total, term, q);
        }
        out.push_back(total);
    }
    return out;
}

std::unique_ptr<MmeBackend> make_backend(std::string_view name) {
    if (name == "horner") return std::make_unique<HornerBackend>();
    if (name == "monomial") return std::make_unique<MonomialBackend>();
    throw std::invalid_argument("unknown backend: " + std::string(name));
}

const MmeBackend& default_backend() {
    static const HornerBackend backend;
    return backend;
}

}  // namespace mme
