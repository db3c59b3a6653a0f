#pragma once

#include <vector>

#include "qde/error.hpp"
#include "qde/ratfunc.hpp"

namespace qde {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, const T& init = T()) : r_(rows), c_(cols), a_(size_t(rows) * cols, init) {}
    static Matrix identity(int n) {
        Matrix m(n, n, T(0));
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    T& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const T& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    Matrix operator*(const Matrix& o) const {
        Matrix m(r_, o.c_, T(0));
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const T& x = (*this)(i, k);
                if (x == T(0)) continue;
                for (int j = 0; j < o.c_; ++j)
                    if (!(o(k, j) == T(0))) m(i, j) += x * o(k, j);
            }
        return m;
    }
    Matrix operator+(const Matrix& o) const {
        Matrix m = *this;
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
        return m;
    }
    Matrix operator-(const Matrix& o) const {
        Matrix m = *this;
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
        return m;
    }
    Matrix transpose() const {
        Matrix m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    std::vector<T> apply(const std::vector<T>& v) const {
        std::vector<T> out(r_, T(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if (!((*this)(i, j) == T(0)) && !(v[j] == T(0))) out[i] += (*this)(i, j) * v[j];
        return out;
    }
    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<T>()))> {
        Matrix<decltype(f(std::declval<T>()))> m(r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<T> a_;
};

// Fraction-free elimination; entries must be polynomials.
Poly det_bareiss(Matrix<Poly> m);
Rational det(Matrix<Rational> m);
// Gaussian elimination over the field; throws SingularMatrix.
Matrix<Rational> inverse(const Matrix<Rational>& m);
Matrix<RatFunc> inverse(const Matrix<RatFunc>& m);
// Basis of the right kernel.
std::vector<std::vector<RatFunc>> kernel(Matrix<RatFunc> m);

} // namespace qde
