#include "qde/matrix.hpp"

namespace qde {

Poly det_bareiss(Matrix<Poly> m) {
    const int n = m.rows();
    if (n == 0) return Poly(1);
    Poly prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k).is_zero()) {
            int p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return Poly();
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Poly v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = prev.is_constant() ? v * (Rational(1) / prev.constant_value()) : v.exact_div(prev);
            }
        prev = m(k, k);
    }
    Poly d = m(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

Rational det(Matrix<Rational> m) {
    const int n = m.rows();
    Rational d = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            d = -d;
        }
        d *= m(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rational f = m(i, k) / m(k, k);
            for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return d;
}

namespace {

template <class T>
Matrix<T> invert(const Matrix<T>& in, bool (*is_zero)(const T&)) {
    const int n = in.rows();
    Matrix<T> a = in, b = Matrix<T>::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && is_zero(a(p, k))) ++p;
        if (p == n) throw SingularMatrix("matrix is singular");
        if (p != k)
            for (int j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(b(k, j), b(p, j));
            }
        T inv = T(1) / a(k, k);
        for (int j = 0; j < n; ++j) {
            if (!is_zero(a(k, j))) a(k, j) = a(k, j) * inv;
            if (!is_zero(b(k, j))) b(k, j) = b(k, j) * inv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || is_zero(a(i, k))) continue;
            T f = a(i, k);
            for (int j = 0; j < n; ++j) {
                if (!is_zero(a(k, j))) a(i, j) -= f * a(k, j);
                if (!is_zero(b(k, j))) b(i, j) -= f * b(k, j);
            }
        }
    }
    return b;
}

bool q_zero(const Rational& x) { return x == 0; }
bool r_zero(const RatFunc& x) { return x.is_zero(); }

} // namespace

Matrix<Rational> inverse(const Matrix<Rational>& m) { return invert<Rational>(m, q_zero); }
Matrix<RatFunc> inverse(const Matrix<RatFunc>& m) { return invert<RatFunc>(m, r_zero); }

std::vector<std::vector<RatFunc>> kernel(Matrix<RatFunc> m) {
    const int r = m.rows(), c = m.cols();
    std::vector<int> pivcol;
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int p = row;
        while (p < r && m(p, col).is_zero()) ++p;
        if (p == r) continue;
        for (int j = 0; j < c; ++j) std::swap(m(row, j), m(p, j));
        RatFunc inv = m(row, col).inverse();
        for (int j = col; j < c; ++j)
            if (!m(row, j).is_zero()) m(row, j) *= inv;
        for (int i = 0; i < r; ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            RatFunc f = m(i, col);
            for (int j = col; j < c; ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivcol.push_back(col);
        ++row;
    }
    std::vector<std::vector<RatFunc>> basis;
    std::vector<bool> is_piv(c, false);
    for (int pc : pivcol) is_piv[pc] = true;
    for (int f = 0; f < c; ++f) {
        if (is_piv[f]) continue;
        std::vector<RatFunc> v(c);
        v[f] = RatFunc(1);
        for (size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = -m(int(i), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace qde
