#include "qde/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "qde/error.hpp"

namespace qde {

namespace {

const char* const kVarNames[kNumVars] = {"q", "t1", "t2", "Q", "T1", "T2"};

void merge_sorted(std::vector<Poly::Term>& out, const std::vector<Poly::Term>& a,
                  const std::vector<Poly::Term>& b, bool subtract) {
    out.clear();
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first > a[i].first) {
            out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].second - b[j].second)
                                  : Rational(a[i].second + b[j].second);
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
}

} // namespace

const char* var_name(Var v) { return kVarNames[int(v)]; }

bool var_from_name(const std::string& s, Var& out) {
    for (int i = 0; i < kNumVars; ++i)
        if (s == kVarNames[i]) {
            out = Var(i);
            return true;
        }
    return false;
}

Monomial::Monomial(const std::array<int, kNumVars>& e) {
    int deg = 0;
    for (int i = 0; i < kNumVars; ++i) {
        if (e[i] < 0 || e[i] > kMaxDegree) throw Error("monomial exponent out of range");
        deg += e[i];
        w_ |= uint64_t(e[i]) << shift(Var(i));
    }
    if (deg > kMaxDegree) throw Error("monomial degree out of range");
    w_ |= uint64_t(deg) << 54;
}

Monomial Monomial::var(Var v, int e) {
    std::array<int, kNumVars> a{};
    a[int(v)] = e;
    return Monomial(a);
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (degree() + o.degree() > kMaxDegree) throw Error("monomial degree out of range");
    return from_packed(w_ + o.w_);
}

bool Monomial::divides(const Monomial& o) const {
    for (int i = 0; i < kNumVars; ++i)
        if (exponent(i) > o.exponent(i)) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const { return from_packed(w_ - o.w_); }

Monomial Monomial::without(Var v) const {
    int e = exponent(v);
    return from_packed(w_ - (uint64_t(e) << shift(v)) - (uint64_t(e) << 54));
}

Poly::Poly(long c) {
    if (c != 0) t_.emplace_back(Monomial(), Rational(c));
}

Poly::Poly(const Rational& c) {
    if (c != 0) t_.emplace_back(Monomial(), c);
}

Poly Poly::variable(Var v, int e) { return monomial(Monomial::var(v, e), 1); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
    Poly p;
    if (c != 0) p.t_.emplace_back(m, c);
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first > b.first; });
    Poly p;
    p.t_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.t_.empty() && p.t_.back().first == t.first)
            p.t_.back().second += t.second;
        else {
            if (!p.t_.empty() && p.t_.back().second == 0) p.t_.pop_back();
            p.t_.push_back(std::move(t));
        }
    }
    if (!p.t_.empty() && p.t_.back().second == 0) p.t_.pop_back();
    return p;
}

Rational Poly::constant_value() const {
    if (!is_constant()) throw Error("polynomial is not constant");
    return t_.empty() ? Rational(0) : t_[0].second;
}

Rational Poly::constant_term() const {
    if (!t_.empty() && t_.back().first.is_one()) return t_.back().second;
    return 0;
}

int Poly::degree(Var v) const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, t.first.exponent(v));
    return d;
}

int Poly::min_degree(Var v) const {
    if (t_.empty()) return -1;
    int d = Monomial::kMaxDegree;
    for (const auto& t : t_) d = std::min(d, t.first.exponent(v));
    return d;
}

int Poly::total_degree() const { return t_.empty() ? -1 : t_.front().first.degree(); }

unsigned Poly::variables() const {
    unsigned m = 0;
    for (const auto& t : t_)
        for (int i = 0; i < kNumVars; ++i)
            if (t.first.exponent(i)) m |= 1u << i;
    return m;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.t_) t.second = -t.second;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.t_.empty()) return *this;
    std::vector<Term> out;
    merge_sorted(out, t_, o.t_, false);
    t_.swap(out);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.t_.empty()) return *this;
    std::vector<Term> out;
    merge_sorted(out, t_, o.t_, true);
    t_.swap(out);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& t : t_) t.second *= c;
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly Poly::mul_monomial(const Monomial& m, const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.emplace_back(t.first * m, t.second * c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.t_.empty() || b.t_.empty()) return Poly();
    const Poly& s = a.t_.size() <= b.t_.size() ? a : b;
    const Poly& l = a.t_.size() <= b.t_.size() ? b : a;
    if (s.t_.size() <= 16) {
        Poly r = l.mul_monomial(s.t_[0].first, s.t_[0].second);
        std::vector<Poly::Term> out;
        for (size_t i = 1; i < s.t_.size(); ++i) {
            Poly sh = l.mul_monomial(s.t_[i].first, s.t_[i].second);
            merge_sorted(out, r.t_, sh.t_, false);
            r.t_.swap(out);
        }
        return r;
    }
    std::unordered_map<uint64_t, Rational> acc;
    acc.reserve(s.t_.size() * l.t_.size() / 2 + 16);
    Rational tmp;
    for (const auto& x : s.t_)
        for (const auto& y : l.t_) {
            mpq_mul(tmp.get_mpq_t(), x.second.get_mpq_t(), y.second.get_mpq_t());
            auto& slot = acc[(x.first * y.first).packed()];
            slot += tmp;
        }
    std::vector<Poly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [k, v] : acc)
        if (v != 0) terms.emplace_back(Monomial::from_packed(k), std::move(v));
    std::sort(terms.begin(), terms.end(),
              [](const Poly::Term& x, const Poly::Term& y) { return x.first > y.first; });
    Poly r;
    r.t_ = std::move(terms);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool Poly::divide_exact(const Poly& d, Poly& quotient) const {
    if (d.is_zero()) throw ZeroDenominator("division by zero polynomial");
    quotient = Poly();
    if (is_zero()) return true;
    if (d.is_constant()) {
        quotient = *this;
        quotient *= Rational(1) / d.constant_value();
        return true;
    }
    const Monomial dm = d.t_[0].first;
    const Rational dc = d.t_[0].second;
    std::map<uint64_t, Rational, std::greater<uint64_t>> rem;
    for (const auto& t : t_) rem.emplace(t.first.packed(), t.second);
    std::vector<Term> q;
    Rational c, tmp;
    while (!rem.empty()) {
        auto it = rem.begin();
        Monomial rm = Monomial::from_packed(it->first);
        if (!dm.divides(rm)) return false;
        Monomial qm = rm / dm;
        c = it->second / dc;
        for (const auto& t : d.t_) {
            mpq_mul(tmp.get_mpq_t(), c.get_mpq_t(), t.second.get_mpq_t());
            auto [slot, inserted] = rem.try_emplace((t.first * qm).packed());
            slot->second -= tmp;
            if (slot->second == 0) rem.erase(slot);
        }
        q.emplace_back(qm, c);
    }
    quotient.t_ = std::move(q);
    return true;
}

Poly Poly::exact_div(const Poly& o) const {
    Poly q;
    if (!divide_exact(o, q)) throw InexactDivision("inexact polynomial division");
    return q;
}

Poly Poly::derivative(Var v) const {
    std::vector<Term> out;
    for (const auto& t : t_) {
        int e = t.first.exponent(v);
        if (e == 0) continue;
        out.emplace_back(Monomial::from_packed(t.first.packed()) / Monomial::var(v, 1),
                         t.second * e);
    }
    return from_terms(std::move(out));
}

std::vector<Poly> Poly::coefficients(Var v) const {
    std::vector<std::vector<Term>> buckets(std::max(degree(v) + 1, 0));
    for (const auto& t : t_) buckets[t.first.exponent(v)].emplace_back(t.first.without(v), t.second);
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) {
        // removing one variable keeps relative grlex order only within equal exponents
        Poly p;
        p.t_ = std::move(b);
        std::sort(p.t_.begin(), p.t_.end(),
                  [](const Term& x, const Term& y) { return x.first > y.first; });
        out.push_back(std::move(p));
    }
    return out;
}

Poly Poly::from_coefficients(Var v, const std::vector<Poly>& c) {
    std::vector<Term> terms;
    for (size_t k = 0; k < c.size(); ++k) {
        Monomial m = Monomial::var(v, int(k));
        for (const auto& t : c[k].t_) terms.emplace_back(t.first * m, t.second);
    }
    return from_terms(std::move(terms));
}

Poly Poly::substitute(Var v, const Rational& value) const {
    std::vector<Term> terms;
    terms.reserve(t_.size());
    Rational p;
    for (const auto& t : t_) {
        int e = t.first.exponent(v);
        mpz_pow_ui(mpq_numref(p.get_mpq_t()), value.get_num_mpz_t(), e);
        mpz_pow_ui(mpq_denref(p.get_mpq_t()), value.get_den_mpz_t(), e);
        terms.emplace_back(t.first.without(v), t.second * p);
    }
    return from_terms(std::move(terms));
}

Poly Poly::substitute(Var v, const Poly& value) const {
    auto c = coefficients(v);
    Poly r;
    for (size_t k = c.size(); k-- > 0;) r = r * value + c[k];
    return r;
}

Poly Poly::rename(const std::array<Var, kNumVars>& map) const {
    std::vector<Term> terms;
    terms.reserve(t_.size());
    for (const auto& t : t_) {
        std::array<int, kNumVars> e{};
        for (int i = 0; i < kNumVars; ++i) e[int(map[i])] += t.first.exponent(i);
        terms.emplace_back(Monomial(e), t.second);
    }
    return from_terms(std::move(terms));
}

Rational Poly::content() const {
    if (t_.empty()) return 0;
    Integer g = 0, l = 1;
    for (const auto& t : t_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
    }
    Rational c(g, l);
    c.canonicalize();
    if (t_[0].second < 0) c = -c;
    return c;
}

Poly Poly::primitive() const {
    if (t_.empty()) return Poly();
    Poly r = *this;
    r *= Rational(1) / content();
    return r;
}

Poly Poly::monic() const {
    if (t_.empty()) return Poly();
    Poly r = *this;
    r *= Rational(1) / lc();
    return r;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
        Rational c = t.second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? "-" : "+");
        first = false;
        std::string mono;
        for (int i = 0; i < kNumVars; ++i) {
            int e = t.first.exponent(i);
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += kVarNames[i];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            os << c.get_str();
        else if (c == 1)
            os << mono;
        else
            os << c.get_str() << "*" << mono;
    }
    return os.str();
}

// ---- gcd ----

namespace {

using UPoly = std::vector<Poly>; // coefficients in the main variable

void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly content_of(const UPoly& p) {
    Poly g;
    for (const auto& c : p) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) return Poly(1);
    }
    return g;
}

void divide_all(UPoly& p, const Poly& c) {
    if (c.is_constant()) {
        Rational inv = Rational(1) / c.constant_value();
        for (auto& x : p) x *= inv;
        return;
    }
    for (auto& x : p) x = x.exact_div(c);
}

UPoly prem(UPoly r, const UPoly& g) {
    const size_t dg = g.size() - 1;
    const Poly& lcg = g.back();
    while (!r.empty() && r.size() - 1 >= dg) {
        Poly lcr = r.back();
        size_t sh = r.size() - 1 - dg;
        for (auto& x : r) x = x * lcg;
        for (size_t i = 0; i <= dg; ++i) r[i + sh] -= lcr * g[i];
        r.back() = Poly();
        trim(r);
    }
    return r;
}

Poly normalize_gcd(const Poly& p) { return p.primitive(); }

void remove_numeric_content(UPoly& p) {
    Integer g = 0, l = 1;
    for (const auto& c : p)
        for (const auto& t : c.terms()) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
        }
    if (g == 0 || (g == 1 && l == 1)) return;
    Rational s(l, g);
    s.canonicalize();
    for (auto& c : p) c *= s;
}

} // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize_gcd(b);
    if (b.is_zero()) return normalize_gcd(a);
    if (a.is_constant() || b.is_constant()) return Poly(1);
    Poly pa = a.primitive(), pb = b.primitive();
    if (pa == pb) return pa;
    unsigned va = pa.variables(), vb = pb.variables();
    if (unsigned only = va & ~vb) {
        int v = __builtin_ctz(only);
        Poly g = pb;
        for (const auto& c : pa.coefficients(Var(v))) {
            if (c.is_zero()) continue;
            g = gcd(g, c);
            if (g.is_constant()) return Poly(1);
        }
        return g;
    }
    if (unsigned only = vb & ~va) {
        int v = __builtin_ctz(only);
        Poly g = pa;
        for (const auto& c : pb.coefficients(Var(v))) {
            if (c.is_zero()) continue;
            g = gcd(g, c);
            if (g.is_constant()) return Poly(1);
        }
        return g;
    }
    int x = -1, best = 1 << 30;
    for (int i = 0; i < kNumVars; ++i)
        if ((va >> i) & 1u) {
            int d = std::max(pa.degree(Var(i)), pb.degree(Var(i)));
            if (d < best) {
                best = d;
                x = i;
            }
        }
    UPoly fa = pa.coefficients(Var(x)), fb = pb.coefficients(Var(x));
    Poly ca = content_of(fa), cb = content_of(fb);
    divide_all(fa, ca);
    divide_all(fb, cb);
    Poly gc = gcd(ca, cb);
    if (fa.size() < fb.size()) std::swap(fa, fb);
    remove_numeric_content(fa);
    remove_numeric_content(fb);
    UPoly f = fa, g = fb;
    while (true) {
        if (g.size() == 1) {
            g = UPoly{Poly(1)};
            break;
        }
        UPoly r = prem(f, g);
        if (r.empty()) break;
        if (r.size() == 1) {
            g = UPoly{Poly(1)};
            break;
        }
        Poly cr = content_of(r);
        divide_all(r, cr);
        remove_numeric_content(r);
        f = std::move(g);
        g = std::move(r);
    }
    Poly res = Poly::from_coefficients(Var(x), g);
    return (gc * res).primitive();
}

} // namespace qde
