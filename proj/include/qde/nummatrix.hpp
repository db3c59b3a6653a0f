#pragma once

#include <vector>

#include "qde/mp.hpp"

namespace qde {

// Dense complex matrix; rows and columns follow partitions(n) where applicable.
class NumMatrix {
public:
    NumMatrix() = default;
    NumMatrix(int rows, int cols, mpfr_prec_t prec);
    static NumMatrix identity(int n, mpfr_prec_t prec);
    static NumMatrix diagonal(const std::vector<Complex>& d);

    int rows() const { return r_; }
    int cols() const { return c_; }
    mpfr_prec_t prec() const { return prec_; }
    Complex& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const Complex& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    NumMatrix& operator+=(const NumMatrix& o);
    NumMatrix& operator-=(const NumMatrix& o);
    NumMatrix& operator*=(const Complex& s);
    friend NumMatrix operator+(NumMatrix a, const NumMatrix& b) { return a += b; }
    friend NumMatrix operator-(NumMatrix a, const NumMatrix& b) { return a -= b; }
    friend NumMatrix operator*(const NumMatrix& a, const NumMatrix& b);
    friend NumMatrix operator*(NumMatrix a, const Complex& s) { return a *= s; }

    NumMatrix adjoint() const;   // conjugate transpose
    NumMatrix transpose() const;
    Real max_abs() const;        // max over entries of |a_ij|
    Complex trace() const;

private:
    int r_ = 0, c_ = 0;
    mpfr_prec_t prec_ = 64;
    std::vector<Complex> a_;
};

NumMatrix inverse(const NumMatrix& m); // throws SingularMatrix
Complex det(NumMatrix m);
// Coefficients c_0..c_n of det(x - m) = sum c_k x^k (Faddeev-LeVerrier).
std::vector<Complex> characteristic_polynomial(const NumMatrix& m);
// Roots by Weierstrass iteration followed by Newton polishing.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& c);
std::vector<Complex> eigenvalues(const NumMatrix& m);
// max_i min over unused j of |a_i - b_j| (greedy matching); sizes must agree.
Real match_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);
// max |a - b| / max(|b|, floor)
Real relative_error(const NumMatrix& a, const NumMatrix& b);

} // namespace qde
