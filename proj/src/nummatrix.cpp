#include "qde/nummatrix.hpp"

#include <cmath>

#include "qde/error.hpp"

namespace qde {

NumMatrix::NumMatrix(int rows, int cols, mpfr_prec_t prec)
    : r_(rows), c_(cols), prec_(prec), a_(size_t(rows) * cols, Complex(prec)) {}

NumMatrix NumMatrix::identity(int n, mpfr_prec_t prec) {
    NumMatrix m(n, n, prec);
    for (int i = 0; i < n; ++i) m(i, i) = Complex(1, prec);
    return m;
}

NumMatrix NumMatrix::diagonal(const std::vector<Complex>& d) {
    mpfr_prec_t p = 64;
    for (const auto& x : d) p = std::max(p, x.prec());
    NumMatrix m(int(d.size()), int(d.size()), p);
    for (size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
    return m;
}

NumMatrix& NumMatrix::operator+=(const NumMatrix& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

NumMatrix& NumMatrix::operator-=(const NumMatrix& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

NumMatrix& NumMatrix::operator*=(const Complex& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

NumMatrix operator*(const NumMatrix& a, const NumMatrix& b) {
    if (a.c_ != b.r_) throw Error("matrix shape mismatch");
    mpfr_prec_t p = std::max(a.prec_, b.prec_);
    NumMatrix m(a.r_, b.c_, p);
    Real t(p), u(p);
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k)
            for (int j = 0; j < b.c_; ++j) fma(m(i, j), a(i, k), b(k, j), t, u);
    return m;
}

NumMatrix NumMatrix::adjoint() const {
    NumMatrix m(c_, r_, prec_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(j, i) = conj((*this)(i, j));
    return m;
}

NumMatrix NumMatrix::transpose() const {
    NumMatrix m(c_, r_, prec_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Real NumMatrix::max_abs() const {
    Real m(prec_);
    for (const auto& x : a_) m = max(m, abs(x));
    return m;
}

Complex NumMatrix::trace() const {
    Complex s(prec_);
    for (int i = 0; i < std::min(r_, c_); ++i) s += (*this)(i, i);
    return s;
}

namespace {

// In-place LU with partial pivoting; returns the permutation sign, 0 if singular.
int lu(NumMatrix& m, std::vector<int>& perm) {
    const int n = m.rows();
    perm.resize(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        Real best = abs(m(k, k));
        for (int i = k + 1; i < n; ++i) {
            Real v = abs(m(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best.is_zero()) return 0;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            std::swap(perm[k], perm[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            m(i, k) /= m(k, k);
            for (int j = k + 1; j < n; ++j) m(i, j) -= m(i, k) * m(k, j);
        }
    }
    return sign;
}

} // namespace

NumMatrix inverse(const NumMatrix& a) {
    const int n = a.rows();
    NumMatrix m = a;
    std::vector<int> perm;
    if (lu(m, perm) == 0) throw SingularMatrix("numeric matrix is singular");
    NumMatrix r(n, n, a.prec());
    for (int col = 0; col < n; ++col) {
        std::vector<Complex> x(n, Complex(a.prec()));
        for (int i = 0; i < n; ++i) {
            x[i] = Complex(perm[i] == col ? 1 : 0, a.prec());
            for (int j = 0; j < i; ++j) x[i] -= m(i, j) * x[j];
        }
        for (int i = n - 1; i >= 0; --i) {
            for (int j = i + 1; j < n; ++j) x[i] -= m(i, j) * x[j];
            x[i] /= m(i, i);
        }
        for (int i = 0; i < n; ++i) r(i, col) = x[i];
    }
    return r;
}

Complex det(NumMatrix m) {
    std::vector<int> perm;
    int s = lu(m, perm);
    Complex d(s, m.prec());
    if (s == 0) return d;
    for (int i = 0; i < m.rows(); ++i) d *= m(i, i);
    return d;
}

std::vector<Complex> characteristic_polynomial(const NumMatrix& a) {
    const int n = a.rows();
    const mpfr_prec_t p = a.prec();
    std::vector<Complex> c(n + 1, Complex(p));
    c[n] = Complex(1, p);
    NumMatrix m(n, n, p); // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        NumMatrix t = m;
        for (int i = 0; i < n; ++i) t(i, i) += c[n - k + 1];
        m = a * t;
        c[n - k] = m.trace() * Complex(Rational(-1, k), p);
    }
    return c;
}

namespace {

Complex horner(const std::vector<Complex>& c, const Complex& x) {
    Complex s = c.back();
    for (int k = int(c.size()) - 2; k >= 0; --k) s = s * x + c[k];
    return s;
}

} // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
    const int n = int(coeffs.size()) - 1;
    if (n < 1) return {};
    const mpfr_prec_t p = coeffs.back().prec();
    std::vector<Complex> c = coeffs;
    for (auto& x : c) x /= coeffs.back();
    std::vector<Complex> z;
    Complex seed(Real(Rational(4, 10), p), Real(Rational(9, 10), p));
    Complex w(1, p);
    for (int i = 0; i < n; ++i) {
        z.push_back(w);
        w *= seed;
    }
    const double target = -double(p) + 16;
    for (int it = 0; it < 2000; ++it) {
        double worst = -INFINITY;
        for (int i = 0; i < n; ++i) {
            Complex den(1, p);
            for (int j = 0; j < n; ++j)
                if (j != i) den *= z[i] - z[j];
            Complex step = horner(c, z[i]) / den;
            z[i] -= step;
            worst = std::max(worst, step.log2_abs());
        }
        if (worst < target) break;
    }
    std::vector<Complex> d(n, Complex(p));
    for (int k = 1; k <= n; ++k) d[k - 1] = c[k] * Complex(k, p);
    for (auto& x : z)
        for (int it = 0; it < 3; ++it) {
            Complex dv = horner(d, x);
            if (dv.is_zero()) break;
            x -= horner(c, x) / dv;
        }
    return z;
}

std::vector<Complex> eigenvalues(const NumMatrix& m) { return polynomial_roots(characteristic_polynomial(m)); }

Real match_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) throw Error("eigenvalue count mismatch");
    mpfr_prec_t p = a.empty() ? 64 : a[0].prec();
    std::vector<bool> used(b.size(), false);
    Real worst(p);
    for (const auto& x : a) {
        int best = -1;
        Real bd(p);
        for (size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            Real d = abs(x - b[j]);
            if (best < 0 || d < bd) {
                best = int(j);
                bd = d;
            }
        }
        used[best] = true;
        worst = max(worst, bd);
    }
    return worst;
}

Real relative_error(const NumMatrix& a, const NumMatrix& b) {
    Real scale = b.max_abs();
    Real err = (a - b).max_abs();
    if (scale.is_zero()) return err;
    return err / scale;
}

} // namespace qde
