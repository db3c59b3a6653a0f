#include "qde/mp.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "qde/error.hpp"

namespace qde {

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_zero(x_, 1);
}

Real::Real(long v, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_si(x_, v, MPFR_RNDN);
}

Real::Real(const Rational& v, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_q(x_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
    mpfr_init2(x_, o.prec());
    mpfr_set(x_, o.x_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(x_, MPFR_PREC_MIN);
    mpfr_swap(x_, o.x_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(x_, o.prec());
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(x_, o.x_);
    return *this;
}

Real::~Real() { mpfr_clear(x_); }

Real Real::pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
}

Real Real::parse(const std::string& s, mpfr_prec_t prec) {
    Real r(prec);
    if (mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0) throw ParseError("not a number: " + s);
    return r;
}

double Real::log2_abs() const {
    if (mpfr_zero_p(x_)) return -INFINITY;
    long e;
    double m = mpfr_get_d_2exp(&e, x_, MPFR_RNDN);
    return std::log2(std::fabs(m)) + double(e);
}

std::string Real::str(int digits) const {
    char* buf = nullptr;
    if (digits <= 0) digits = int(double(prec()) * 0.30103);
    mpfr_asprintf(&buf, "%.*Rg", digits, x_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

namespace {

mpfr_prec_t pmax(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }

void widen(Real& a, mpfr_prec_t p) {
    if (a.prec() < p) mpfr_prec_round(a.get(), p, MPFR_RNDN);
}

} // namespace

Real& Real::operator+=(const Real& o) {
    widen(*this, o.prec());
    mpfr_add(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o) {
    widen(*this, o.prec());
    mpfr_sub(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o) {
    widen(*this, o.prec());
    mpfr_mul(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o) {
    widen(*this, o.prec());
    mpfr_div(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real r(*this);
    mpfr_neg(r.x_, r.x_, MPFR_RNDN);
    return r;
}

#define QDE_UNARY(name, fn)                       \
    Real name(const Real& x) {                    \
        Real r(x.prec());                         \
        fn(r.get(), x.get(), MPFR_RNDN);          \
        return r;                                 \
    }
QDE_UNARY(abs, mpfr_abs)
QDE_UNARY(sqrt, mpfr_sqrt)
QDE_UNARY(exp, mpfr_exp)
QDE_UNARY(log, mpfr_log)
QDE_UNARY(sin, mpfr_sin)
QDE_UNARY(cos, mpfr_cos)
QDE_UNARY(sinh, mpfr_sinh)
QDE_UNARY(cosh, mpfr_cosh)
#undef QDE_UNARY

Real atan2(const Real& y, const Real& x) {
    Real r(pmax(x, y));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Complex Complex::two_pi_i(mpfr_prec_t prec) {
    Real p = Real::pi(prec);
    return Complex(Real(prec), p + p);
}

double Complex::log2_abs() const { return std::max(re.log2_abs(), im.log2_abs()); }

std::string Complex::str(int digits) const {
    std::string i = im.str(digits);
    if (i[0] != '-') i = "+" + i;
    return re.str(digits) + i + "i";
}

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    Real a = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(a);
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    if (d.is_zero()) throw ZeroDenominator("complex division by zero");
    Real a = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(a);
    return *this;
}

Complex& Complex::operator*=(const Real& o) {
    re *= o;
    im *= o;
    return *this;
}

void fma(Complex& acc, const Complex& a, const Complex& b, Real& t, Real& u) {
    mpfr_mul(t.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(u.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(t.get(), t.get(), u.get(), MPFR_RNDN);
    mpfr_add(acc.re.get(), acc.re.get(), t.get(), MPFR_RNDN);
    mpfr_mul(t.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(u.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(t.get(), t.get(), u.get(), MPFR_RNDN);
    mpfr_add(acc.im.get(), acc.im.get(), t.get(), MPFR_RNDN);
}

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real abs(const Complex& z) {
    Real r(z.prec());
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    return r;
}

Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex exp(const Complex& z) {
    Real m = exp(z.re);
    return Complex(m * cos(z.im), m * sin(z.im));
}

Complex log(const Complex& z) {
    if (z.is_zero()) throw Error("log of zero");
    return Complex(log(abs(z)), arg(z));
}

Complex pow(const Complex& z, const Complex& w) { return exp(w * log(z)); }

Complex pow(const Complex& z, long k) {
    if (k < 0) return Complex(1, z.prec()) / pow(z, -k);
    Complex r(1, z.prec()), b = z;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

Complex sqrt(const Complex& z) {
    if (z.is_zero()) return z;
    Real m = sqrt(abs(z));
    Real h = arg(z);
    mpfr_div_2ui(h.get(), h.get(), 1, MPFR_RNDN);
    return Complex(m * cos(h), m * sin(h));
}

Complex sin(const Complex& z) { return Complex(sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)); }

Complex expi_pi(const Complex& z) {
    Real p = Real::pi(z.prec());
    return exp(Complex(-(z.im * p), z.re * p));
}

namespace {

struct SpougeKey {
    long a;
    mpfr_prec_t wp;
    bool operator<(const SpougeKey& o) const { return a != o.a ? a < o.a : wp < o.wp; }
};

std::mutex spouge_mutex;
std::map<SpougeKey, std::vector<Real>> spouge_cache;

// c_0 = sqrt(2 pi), c_k = (-1)^(k-1) (a-k)^(k-1/2) e^(a-k) / (k-1)!
const std::vector<Real>& spouge_coefficients(long a, mpfr_prec_t wp) {
    std::lock_guard<std::mutex> lock(spouge_mutex);
    auto it = spouge_cache.find({a, wp});
    if (it != spouge_cache.end()) return it->second;
    std::vector<Real> c;
    Real two_pi = Real::pi(wp) * Real(2, wp);
    c.push_back(sqrt(two_pi));
    Real fact(1, wp);
    for (long k = 1; k < a; ++k) {
        if (k > 1) fact *= Real(k - 1, wp);
        Real base(a - k, wp);
        Real e(wp);
        mpfr_set_si(e.get(), 2 * k - 1, MPFR_RNDN);
        mpfr_div_2ui(e.get(), e.get(), 1, MPFR_RNDN);
        Real term(wp);
        mpfr_pow(term.get(), base.get(), e.get(), MPFR_RNDN);
        term *= exp(Real(a - k, wp));
        term /= fact;
        if (k % 2 == 0) term = -term;
        c.push_back(std::move(term));
    }
    return spouge_cache.emplace(SpougeKey{a, wp}, std::move(c)).first->second;
}

Complex gamma_right(const Complex& z, mpfr_prec_t p) {
    const long a = long(std::ceil(double(p + 12) * std::log(2.0) / std::log(2 * M_PI))) + 1;
    const mpfr_prec_t wp = p + 2 * a + 32;
    const auto& c = spouge_coefficients(a, wp);
    Complex w(Real(z.re), Real(z.im));
    mpfr_prec_round(w.re.get(), wp, MPFR_RNDN);
    mpfr_prec_round(w.im.get(), wp, MPFR_RNDN);
    w -= Complex(1, wp);
    Complex s(c[0]);
    for (long k = 1; k < a; ++k) s += Complex(c[k]) / (w + Complex(k, wp));
    Complex wa = w + Complex(a, wp);
    Complex half(Rational(1, 2), wp);
    Complex r = exp((w + half) * log(wa) - wa) * s;
    mpfr_prec_round(r.re.get(), p, MPFR_RNDN);
    mpfr_prec_round(r.im.get(), p, MPFR_RNDN);
    return r;
}

} // namespace

Complex gamma(const Complex& z) {
    const mpfr_prec_t p = z.prec();
    Real nearest(p);
    mpfr_rint(nearest.get(), z.re.get(), MPFR_RNDN);
    if (nearest.sign() <= 0) {
        Complex d(z.re - nearest, z.im);
        if (d.log2_abs() < -double(p) / 2) throw PoleOfGamma("Gamma has a pole at " + z.str(10));
    }
    if (z.re.to_double() >= 0.5) return gamma_right(z, p);
    const mpfr_prec_t wp = p + 32;
    Complex zw(Real(z.re), Real(z.im));
    mpfr_prec_round(zw.re.get(), wp, MPFR_RNDN);
    mpfr_prec_round(zw.im.get(), wp, MPFR_RNDN);
    Real pi = Real::pi(wp);
    Complex r = Complex(pi) / (sin(zw * pi) * gamma_right(Complex(1, wp) - zw, wp));
    mpfr_prec_round(r.re.get(), p, MPFR_RNDN);
    mpfr_prec_round(r.im.get(), p, MPFR_RNDN);
    return r;
}

} // namespace qde
