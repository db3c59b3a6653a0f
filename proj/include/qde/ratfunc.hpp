#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qde/poly.hpp"

namespace qde {

// num/den with gcd(num, den) = 1 and den monic in grlex order.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(const Poly& p) : num_(p), den_(1) {}
    RatFunc(const Poly& num, const Poly& den); // normalizes; throws ZeroDenominator
    static RatFunc variable(Var v) { return RatFunc(Poly::variable(v)); }
    static RatFunc parse(const std::string& s);
    // Caller guarantees gcd(num, den) = 1; only the scaling is normalized.
    static RatFunc from_coprime(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value(); }
    unsigned variables() const { return num_.variables() | den_.variables(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc pow(int e) const;
    RatFunc inverse() const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // Throws PoleAtPoint if the denominator vanishes.
    RatFunc substitute(Var v, const Rational& value) const;
    RatFunc substitute(Var v, const RatFunc& value) const;
    RatFunc rename(const std::array<Var, kNumVars>& map) const;
    Rational evaluate(const std::map<Var, Rational>& point) const; // all variables bound
    RatFunc derivative(Var v) const;

    // Taylor coefficients in v around v = center, through v^order.  Throws PoleAtCenter.
    std::vector<RatFunc> taylor(Var v, const Rational& center, int order) const;

    // "(num)/(den)" or "num"; grlex term order; parse(str()) == *this.
    std::string str() const;

private:
    Poly num_, den_;
    void normalize();
};

// Laurent polynomial in one variable with coefficients in the remaining ones.
struct LaurentPoly {
    Var var = Var::q;
    std::map<int, RatFunc> terms;

    // Succeeds iff f = (poly in var)/(var^k * stuff free of var).
    static std::optional<LaurentPoly> from_ratfunc(const RatFunc& f, Var v);
    RatFunc to_ratfunc() const;
    int min_exponent() const { return terms.empty() ? 0 : terms.begin()->first; }
    int max_exponent() const { return terms.empty() ? 0 : terms.rbegin()->first; }
};

} // namespace qde
