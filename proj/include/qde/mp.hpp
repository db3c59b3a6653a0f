#pragma once

#include <mpfr.h>

#include <string>

#include "qde/rational.hpp"

namespace qde {

// MPFR real with its own precision.  Results of binary operations carry the
// larger precision of the operands.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 64);
    Real(long v, mpfr_prec_t prec);
    Real(const Rational& v, mpfr_prec_t prec);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static Real pi(mpfr_prec_t prec);
    static Real parse(const std::string& s, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    mpfr_ptr get() { return x_; }
    mpfr_srcptr get() const { return x_; }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    // log2 |x|, -inf for zero
    double log2_abs() const;
    bool is_zero() const { return mpfr_zero_p(x_); }
    int sign() const { return mpfr_sgn(x_); }
    std::string str(int digits = 0) const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }
    Real operator-() const;
    bool operator<(const Real& o) const { return mpfr_less_p(x_, o.x_); }
    bool operator>(const Real& o) const { return mpfr_greater_p(x_, o.x_); }

private:
    mpfr_t x_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real max(const Real& a, const Real& b);

class Complex {
public:
    explicit Complex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    Complex(const Real& r) : re(r), im(r.prec()) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(long v, mpfr_prec_t prec) : re(v, prec), im(prec) {}
    Complex(const Rational& v, mpfr_prec_t prec) : re(v, prec), im(prec) {}
    static Complex i(mpfr_prec_t prec) { return Complex(Real(prec), Real(1, prec)); }
    static Complex two_pi_i(mpfr_prec_t prec);

    Real re, im;

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    double log2_abs() const; // log2 of max(|re|, |im|)
    std::string str(int digits = 0) const;

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex& operator*=(const Real& o);
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator*(Complex a, const Real& b) { return a *= b; }
    Complex operator-() const { return Complex(-re, -im); }
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z); // |z|^2
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z); // principal branch, arg in (-pi, pi]
Complex pow(const Complex& z, const Complex& w); // exp(w log z)
Complex pow(const Complex& z, long k);
Complex sqrt(const Complex& z);
Complex sin(const Complex& z);
Complex expi_pi(const Complex& z); // exp(i pi z)

// acc += a * b, using the scratch values t and u.
void fma(Complex& acc, const Complex& a, const Complex& b, Real& t, Real& u);

// Gamma function with relative error below 2^(8 - prec); reflection for Re z < 1/2.
// Throws PoleOfGamma within 2^(-prec/2) of a non-positive integer.
Complex gamma(const Complex& z);
inline Real gamma(const Real& x) { return gamma(Complex(x)).re; }

} // namespace qde
