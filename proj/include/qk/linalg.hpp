#pragma once

#include <vector>

#include "qk/ratfunc.hpp"

namespace qk {

namespace fld {
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline Rational inverse(const Rational& x) { return Rational(1) / x; }
inline RatFunc inverse(const RatFunc& x) { return x.inverse(); }
} // namespace fld

// Dense exact matrix over a field (Rational or RatFunc).
template <typename F>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    F& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F> data_;
};

// PA = LU factorization with row pivoting (first nonzero pivot), reusable
// across many right-hand sides.
template <typename F>
class LUFactor {
  public:
    explicit LUFactor(Matrix<F> a) : lu_(std::move(a)) {
        std::size_t n = lu_.rows();
        if (n != lu_.cols()) throw error("LU of non-square matrix");
        perm_.resize(n);
        for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
        det_ = F(1);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t piv = k;
            while (piv < n && fld::is_zero(lu_.at(piv, k))) ++piv;
            if (piv == n) throw error("singular matrix");
            if (piv != k) {
                for (std::size_t j = 0; j < n; ++j) std::swap(lu_.at(piv, j), lu_.at(k, j));
                std::swap(perm_[piv], perm_[k]);
                det_ = -det_;
            }
            det_ = det_ * lu_.at(k, k);
            F inv_piv = fld::inverse(lu_.at(k, k));
            for (std::size_t i = k + 1; i < n; ++i) {
                if (fld::is_zero(lu_.at(i, k))) continue;
                F factor = lu_.at(i, k) * inv_piv;
                lu_.at(i, k) = factor;
                for (std::size_t j = k + 1; j < n; ++j)
                    lu_.at(i, j) = lu_.at(i, j) - factor * lu_.at(k, j);
            }
        }
    }

    const F& determinant() const { return det_; }

    std::vector<F> solve(const std::vector<F>& b) const {
        std::size_t n = lu_.rows();
        if (b.size() != n) throw error("rhs size mismatch");
        std::vector<F> y(n, F(0));
        for (std::size_t i = 0; i < n; ++i) {
            F acc = b[perm_[i]];
            for (std::size_t j = 0; j < i; ++j) acc = acc - lu_.at(i, j) * y[j];
            y[i] = acc;
        }
        std::vector<F> x(n, F(0));
        for (std::size_t i = n; i-- > 0;) {
            F acc = y[i];
            for (std::size_t j = i + 1; j < n; ++j) acc = acc - lu_.at(i, j) * x[j];
            x[i] = acc * fld::inverse(lu_.at(i, i));
        }
        return x;
    }

  private:
    Matrix<F> lu_;
    std::vector<std::size_t> perm_;
    F det_;
};

template <typename F>
Matrix<F> matrix_inverse(const Matrix<F>& a) {
    std::size_t n = a.rows();
    LUFactor<F> lu(a);
    Matrix<F> inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<F> e(n, F(0));
        e[j] = F(1);
        auto col = lu.solve(e);
        for (std::size_t i = 0; i < n; ++i) inv.at(i, j) = col[i];
    }
    return inv;
}

template <typename F>
F determinant(const Matrix<F>& a) {
    try {
        return LUFactor<F>(a).determinant();
    } catch (const error&) {
        return F(0); // singular
    }
}

} // namespace qk
