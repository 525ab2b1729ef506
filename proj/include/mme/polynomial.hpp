#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace mme {

/// Dense m-variate polynomial with individual degree < d over coefficient
/// domain T. Coefficients are stored row-major with the last variable
/// fastest: index(e) = e_1 d^{m-1} + e_2 d^{m-2} + ... + e_m.
template <class T>
class DensePolynomial {
public:
    DensePolynomial(std::size_t num_vars, std::size_t degree_bound)
        : m_(num_vars), d_(degree_bound), coeffs_(checked_size(num_vars, degree_bound)) {}

    DensePolynomial(std::size_t num_vars, std::size_t degree_bound,
                    std::vector<T> coeffs)
        : m_(num_vars), d_(degree_bound), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != checked_size(m_, d_))
            throw std::invalid_argument("coefficient count must be d^m");
    }

    std::size_t num_vars() const { return m_; }
    std::size_t degree_bound() const { return d_; }
    std::size_t coeff_count() const { return coeffs_.size(); }

    const T& operator[](std::size_t idx) const { return coeffs_[idx]; }
    T& operator[](std::size_t idx) { return coeffs_[idx]; }

    const std::vector<T>& coeffs() const { return coeffs_; }
    std::vector<T>& coeffs() { return coeffs_; }

    std::size_t index_of(std::span<const std::size_t> exponents) const {
        if (exponents.size() != m_)
            throw std::invalid_argument("exponent vector length mismatch");
        std::size_t idx = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (exponents[i] >= d_)
                throw std::invalid_argument("exponent exceeds degree bound");
            idx = idx * d_ + exponents[i];
        }
        return idx;
    }

    std::vector<std::size_t> exponents_of(std::size_t idx) const {
        std::vector<std::size_t> e(m_);
        for (std::size_t i = m_; i-- > 0;) {
            e[i] = idx % d_;
            idx /= d_;
        }
        return e;
    }

    const T& at(std::span<const std::size_t> exponents) const {
        return coeffs_[index_of(exponents)];
    }
    T& at(std::span<const std::size_t> exponents) {
        return coeffs_[index_of(exponents)];
    }

    /// d^m as size_t, guarding overflow.
    static std::size_t checked_size(std::size_t m, std::size_t d) {
        if (m == 0) throw std::invalid_argument("need at least one variable");
        if (d == 0) throw std::invalid_argument("degree bound must be >= 1");
        std::size_t size = 1;
        for (std::size_t i = 0; i < m; ++i) {
            if (d != 0 && size > static_cast<std::size_t>(-1) / d)
                throw std::invalid_argument("d^m does not fit in memory");
            size *= d;
        }
        return size;
    }

private:
    std::size_t m_;
    std::size_t d_;
    std::vector<T> coeffs_;
};

}  // namespace mme
