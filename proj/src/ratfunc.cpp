#include "qde/ratfunc.hpp"

#include <cctype>

#include "qde/error.hpp"

namespace qde {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    normalize();
}

RatFunc RatFunc::from_coprime(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw ZeroDenominator("zero denominator");
    RatFunc r;
    if (num.is_zero()) return r;
    Rational s = Rational(1) / den.lc();
    r.num_ = num * s;
    r.den_ = den * s;
    return r;
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den_.is_constant()) {
        num_ *= Rational(1) / den_.constant_value();
        den_ = Poly(1);
        return;
    }
    if (!num_.is_constant()) {
        Poly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    Rational s = Rational(1) / den_.lc();
    num_ *= s;
    den_ *= s;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_constant()) normalize();
        else if (num_.is_zero()) den_ = Poly(1);
        return *this;
    }
    if (den_.is_constant()) {
        num_ = num_ * o.den_ + o.num_;
        den_ = o.den_;
        return *this; // o.den coprime to o.num, and num*o.den + o.num shares nothing new
    }
    if (o.den_.is_constant()) {
        num_ += o.num_ * den_;
        return *this;
    }
    Poly g = gcd(den_, o.den_);
    if (g.is_constant()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    } else {
        Poly a = den_.exact_div(g), b = o.den_.exact_div(g);
        num_ = num_ * b + o.num_ * a;
        den_ = den_ * b;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) return *this = RatFunc();
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ = num_ * o.num_;
        return *this;
    }
    // cross-cancel before multiplying
    Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    Poly n1 = g1.is_constant() ? num_ : num_.exact_div(g1);
    Poly d2 = g1.is_constant() ? o.den_ : o.den_.exact_div(g1);
    Poly n2 = g2.is_constant() ? o.num_ : o.num_.exact_div(g2);
    Poly d1 = g2.is_constant() ? den_ : den_.exact_div(g2);
    num_ = n1 * n2;
    den_ = d1 * d2;
    Rational s = Rational(1) / den_.lc();
    num_ *= s;
    den_ *= s;
    return *this;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw ZeroDenominator("inverse of zero");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    Rational s = Rational(1) / r.den_.lc();
    r.num_ *= s;
    r.den_ *= s;
    return r;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r;
    r.num_ = num_.pow(unsigned(e));
    r.den_ = den_.pow(unsigned(e));
    return r;
}

RatFunc RatFunc::substitute(Var v, const Rational& value) const {
    Poly d = den_.substitute(v, value);
    if (d.is_zero())
        throw PoleAtPoint(std::string("denominator vanishes at ") + var_name(v) + "=" +
                          value.get_str());
    return RatFunc(num_.substitute(v, value), d);
}

RatFunc RatFunc::substitute(Var v, const RatFunc& value) const {
    int dn = num_.degree(v), dd = den_.degree(v);
    if (dn <= 0 && dd <= 0) return *this;
    // homogenize: p(a/b) * b^deg
    int D = std::max(dn, dd);
    auto hom = [&](const Poly& p) {
        auto c = p.coefficients(v);
        Poly r;
        Poly apow(1);
        std::vector<Poly> apows{Poly(1)}, bpows{Poly(1)};
        for (int k = 1; k <= D; ++k) {
            apows.push_back(apows.back() * value.num());
            bpows.push_back(bpows.back() * value.den());
        }
        for (size_t k = 0; k < c.size(); ++k)
            if (!c[k].is_zero()) r += c[k] * apows[k] * bpows[D - k];
        return r;
    };
    Poly n = hom(num_), d = hom(den_);
    if (d.is_zero()) throw PoleAtPoint("denominator vanishes under substitution");
    return RatFunc(n, d);
}

RatFunc RatFunc::rename(const std::array<Var, kNumVars>& map) const {
    return RatFunc(num_.rename(map), den_.rename(map));
}

Rational RatFunc::evaluate(const std::map<Var, Rational>& point) const {
    Poly n = num_, d = den_;
    for (const auto& [v, x] : point) {
        n = n.substitute(v, x);
        d = d.substitute(v, x);
    }
    if (!n.is_constant() || !d.is_constant()) throw Error("unbound variable in evaluate");
    if (d.is_zero()) throw PoleAtPoint("denominator vanishes at evaluation point");
    return n.constant_value() / d.constant_value();
}

RatFunc RatFunc::derivative(Var v) const {
    return RatFunc(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

std::vector<RatFunc> RatFunc::taylor(Var v, const Rational& center, int order) const {
    Poly shift = Poly::variable(v) + Poly(center);
    auto nc = (center == 0 ? num_ : num_.substitute(v, shift)).coefficients(v);
    auto dc = (center == 0 ? den_ : den_.substitute(v, shift)).coefficients(v);
    if (dc.empty() || dc[0].is_zero())
        throw PoleAtCenter(std::string("pole at ") + var_name(v) + "=" + center.get_str());
    std::vector<RatFunc> a;
    RatFunc d0inv = RatFunc(dc[0]).inverse();
    for (int k = 0; k <= order; ++k) {
        RatFunc s = k < int(nc.size()) ? RatFunc(nc[k]) : RatFunc();
        for (int j = 1; j <= k && j < int(dc.size()); ++j)
            if (!dc[j].is_zero()) s -= RatFunc(dc[j]) * a[k - j];
        a.push_back(s * d0inv);
    }
    return a;
}

std::string RatFunc::str() const {
    if (den_.is_constant()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---- parser ----

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip();
        if (p_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    const std::string& s_;
    size_t p_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(p_) + " in '" + s_ + "'");
    }
    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool accept(char c) {
        skip();
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }

    RatFunc expr() {
        RatFunc r = term();
        while (true) {
            if (accept('+'))
                r += term();
            else if (accept('-'))
                r -= term();
            else
                return r;
        }
    }
    RatFunc term() {
        RatFunc r = factor();
        while (true) {
            if (accept('*'))
                r *= factor();
            else if (accept('/')) {
                RatFunc d = factor();
                if (d.is_zero()) throw ZeroDenominator("division by zero in '" + s_ + "'");
                r /= d;
            } else
                return r;
        }
    }
    RatFunc factor() {
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        RatFunc b = atom();
        if (accept('^')) {
            skip();
            bool neg = accept('-');
            skip();
            size_t st = p_;
            while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
            if (st == p_) fail("expected exponent");
            int e = std::stoi(s_.substr(st, p_ - st));
            if (neg && b.is_zero()) throw ZeroDenominator("zero to a negative power");
            return b.pow(neg ? -e : e);
        }
        return b;
    }
    RatFunc atom() {
        skip();
        if (p_ >= s_.size()) fail("unexpected end");
        char c = s_[p_];
        if (c == '(') {
            ++p_;
            RatFunc r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            size_t st = p_;
            while (p_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[p_])) || s_[p_] == '.'))
                ++p_;
            return RatFunc(parse_rational(s_.substr(st, p_ - st)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t st = p_;
            while (p_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[p_]))) ++p_;
            Var v;
            std::string name = s_.substr(st, p_ - st);
            if (!var_from_name(name, v)) fail("unknown variable '" + name + "'");
            return RatFunc::variable(v);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

RatFunc RatFunc::parse(const std::string& s) { return Parser(s).parse(); }

std::optional<LaurentPoly> LaurentPoly::from_ratfunc(const RatFunc& f, Var v) {
    const Poly& d = f.den();
    int k = d.min_degree(v);
    if (d.degree(v) != k) return std::nullopt;
    Poly rest = d.coefficients(v)[k];
    LaurentPoly lp;
    lp.var = v;
    auto nc = f.num().coefficients(v);
    for (size_t i = 0; i < nc.size(); ++i)
        if (!nc[i].is_zero()) lp.terms.emplace(int(i) - k, RatFunc(nc[i], rest));
    return lp;
}

RatFunc LaurentPoly::to_ratfunc() const {
    RatFunc r;
    RatFunc x = RatFunc::variable(var);
    for (const auto& [e, c] : terms) r += c * x.pow(e);
    return r;
}

} // namespace qde
