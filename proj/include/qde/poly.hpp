#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qde/rational.hpp"

namespace qde {

enum class Var : int { q = 0, t1 = 1, t2 = 2, Q = 3, T1 = 4, T2 = 5 };
inline constexpr int kNumVars = 6;

const char* var_name(Var v);
bool var_from_name(const std::string& s, Var& out);

// Exponent vector packed into 64 bits: total degree in the top 10 bits,
// then 9 bits per variable in the order q, t1, t2, Q, T1, T2.  Comparing
// the packed words gives graded lex order.
class Monomial {
public:
    static constexpr int kBits = 9;
    static constexpr int kMaxDegree = (1 << kBits) - 1;

    Monomial() = default;
    explicit Monomial(const std::array<int, kNumVars>& e);
    static Monomial var(Var v, int e = 1);
    static Monomial from_packed(uint64_t p) { Monomial m; m.w_ = p; return m; }

    int exponent(Var v) const {
        return int((w_ >> shift(v)) & kMaxDegree);
    }
    int exponent(int i) const { return exponent(Var(i)); }
    int degree() const { return int(w_ >> 54); }
    uint64_t packed() const { return w_; }
    bool is_one() const { return w_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const; // requires divides
    Monomial without(Var v) const;

    bool operator==(const Monomial& o) const { return w_ == o.w_; }
    bool operator!=(const Monomial& o) const { return w_ != o.w_; }
    bool operator<(const Monomial& o) const { return w_ < o.w_; }
    bool operator>(const Monomial& o) const { return w_ > o.w_; }

private:
    static int shift(Var v) { return (kNumVars - 1 - int(v)) * kBits; }
    uint64_t w_ = 0;
};

// Sparse multivariate polynomial over Q, terms kept in descending grlex order.
class Poly {
public:
    using Term = std::pair<Monomial, Rational>;

    Poly() = default;
    Poly(long c);
    Poly(const Rational& c);
    static Poly variable(Var v, int e = 1);
    static Poly monomial(const Monomial& m, const Rational& c);
    static Poly from_terms(std::vector<Term> terms); // any order, merges duplicates

    const std::vector<Term>& terms() const { return t_; }
    size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
    Rational constant_value() const; // requires is_constant
    Rational constant_term() const;
    const Term& leading() const { return t_.front(); }
    const Rational& lc() const { return t_.front().second; }

    int degree(Var v) const;
    int min_degree(Var v) const;
    int total_degree() const;
    unsigned variables() const; // bitmask
    bool depends_on(Var v) const { return (variables() >> int(v)) & 1u; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    Poly mul_monomial(const Monomial& m, const Rational& c) const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Returns false if o does not divide *this exactly.
    bool divide_exact(const Poly& o, Poly& quotient) const;
    Poly exact_div(const Poly& o) const; // throws InexactDivision

    Poly derivative(Var v) const;
    // Coefficients with respect to v: result[k] is the coefficient of v^k.
    std::vector<Poly> coefficients(Var v) const;
    static Poly from_coefficients(Var v, const std::vector<Poly>& c);

    Poly substitute(Var v, const Rational& value) const;
    Poly substitute(Var v, const Poly& value) const;
    Poly rename(const std::array<Var, kNumVars>& map) const;

    // Clears denominators and integer content; leading coefficient positive.
    Poly primitive() const;
    Rational content() const; // this == content() * primitive()
    Poly monic() const;

    std::string str() const;

private:
    std::vector<Term> t_;
    friend class PolyBuilder;
};

Poly gcd(const Poly& a, const Poly& b);

} // namespace qde
