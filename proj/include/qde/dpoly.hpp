#pragma once

#include <vector>

#include "qde/poly.hpp"

namespace qde {

// a + b1 t1 + b2 t2
struct Linear {
    Integer a, b1, b2;
    Poly to_poly() const;
    bool is_constant() const { return b1 == 0 && b2 == 0; }
    // Splits off content and sign: *this = scale * primitive(), with the first
    // nonzero of (b1, b2) positive.  Constants give primitive() == 1.
    Linear primitive(Integer& scale) const;
    bool operator<(const Linear& o) const;
    bool operator==(const Linear& o) const { return a == o.a && b1 == o.b1 && b2 == o.b2; }
};

// Dense polynomial in (t1, t2) with integer coefficients.
class DPoly {
public:
    DPoly() = default;
    DPoly(long c);
    explicit DPoly(const Integer& c);
    explicit DPoly(const Linear& l);
    // Throws unless p involves only t1, t2 and has integer coefficients.
    static DPoly from_poly(const Poly& p);
    Poly to_poly() const;

    int deg1() const { return d1_; }
    int deg2() const { return d2_; }
    bool is_zero() const { return d1_ < 0; }
    Integer at(int i, int j) const;
    size_t terms() const;

    DPoly& operator+=(const DPoly& o);
    DPoly& operator-=(const DPoly& o);
    DPoly& operator*=(const Integer& s);
    DPoly& operator*=(const DPoly& o) { return *this = *this * o; }
    DPoly& mul_linear(const Linear& l);
    friend DPoly operator+(DPoly a, const DPoly& b) { return a += b; }
    friend DPoly operator-(DPoly a, const DPoly& b) { return a -= b; }
    friend DPoly operator*(const DPoly& a, const DPoly& b);
    DPoly operator-() const;
    // Adds s * a * b to this.
    void add_product(const DPoly& a, const DPoly& b);

    // Exact division by a primitive linear form; false if it does not divide.
    bool divide_linear(const Linear& l, DPoly& quotient) const;
    void divide_exact(const Integer& s); // every coefficient divisible by s

    DPoly bar() const;          // t_i -> -t_i
    DPoly swap_vars() const;    // t1 <-> t2
    Integer evaluate(const Integer& t1, const Integer& t2) const;
    Rational evaluate(const Rational& t1, const Rational& t2) const;

    bool operator==(const DPoly& o) const;
    bool operator!=(const DPoly& o) const { return !(*this == o); }

private:
    int d1_ = -1, d2_ = -1;
    std::vector<Integer> c_; // c_[i * (d2_ + 1) + j] is the coefficient of t1^i t2^j

    Integer& ref(int i, int j) { return c_[size_t(i) * (d2_ + 1) + j]; }
    const Integer& ref(int i, int j) const { return c_[size_t(i) * (d2_ + 1) + j]; }
    void reshape(int d1, int d2);
    void trim();
};

} // namespace qde
