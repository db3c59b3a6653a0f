#include "qde/fock.hpp"

#include "qde/error.hpp"

namespace qde {

FockVector FockVector::basis(const Partition& mu) {
    FockVector v(mu.size());
    v.c_.emplace(mu, RatFunc(1));
    return v;
}

FockVector FockVector::from_column(int n, const std::vector<RatFunc>& col) {
    auto b = partitions(n);
    if (b.size() != col.size()) throw MixedEnergy("column length does not match p(n)");
    FockVector v(n);
    for (size_t i = 0; i < b.size(); ++i)
        if (!col[i].is_zero()) v.c_.emplace(b[i], col[i]);
    return v;
}

void FockVector::check(const Partition& mu) const {
    if (mu.size() != n_)
        throw MixedEnergy("partition " + mu.str() + " in vector of energy " + std::to_string(n_));
}

RatFunc FockVector::coefficient(const Partition& mu) const {
    auto it = c_.find(mu);
    return it == c_.end() ? RatFunc() : it->second;
}

void FockVector::set(const Partition& mu, const RatFunc& c) {
    check(mu);
    if (c.is_zero())
        c_.erase(mu);
    else
        c_[mu] = c;
}

void FockVector::add(const Partition& mu, const RatFunc& c) {
    check(mu);
    if (c.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

std::vector<RatFunc> FockVector::column() const {
    auto b = partitions(n_);
    std::vector<RatFunc> col(b.size());
    for (size_t i = 0; i < b.size(); ++i) col[i] = coefficient(b[i]);
    return col;
}

FockVector& FockVector::operator+=(const FockVector& o) {
    if (o.c_.empty()) return *this;
    if (c_.empty()) n_ = o.n_;
    if (n_ != o.n_) throw MixedEnergy("adding vectors of different energy");
    for (const auto& [mu, c] : o.c_) add(mu, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    if (o.c_.empty()) return *this;
    if (c_.empty()) n_ = o.n_;
    if (n_ != o.n_) throw MixedEnergy("subtracting vectors of different energy");
    for (const auto& [mu, c] : o.c_) add(mu, -c);
    return *this;
}

FockVector& FockVector::operator*=(const RatFunc& a) {
    if (a.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& [mu, c] : c_) c *= a;
    return *this;
}

FockVector FockVector::map_coefficients(RatFunc (*f)(const RatFunc&)) const {
    FockVector r(n_);
    for (const auto& [mu, c] : c_) r.set(mu, f(c));
    return r;
}

std::string FockVector::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [mu, c] : c_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")|" + mu.str() + ">";
    }
    return s;
}

FockVector apply_alpha(int k, const FockVector& v) {
    if (k == 0) throw Error("alpha_0 is not used");
    FockVector r(v.energy() - k);
    if (v.energy() - k < 0) return FockVector(0);
    for (const auto& [mu, c] : v.coeffs()) {
        if (k < 0) {
            int m = -k;
            r.add(mu.add_part(m), c * RatFunc(long(m) * (mu.multiplicity(m) + 1)));
        } else if (mu.contains_part(k)) {
            r.add(mu.remove_part(k), c);
        }
    }
    return r;
}

FockVector power_sum(const Partition& mu) {
    FockVector v = FockVector::basis(mu);
    v *= RatFunc(Rational(zee(mu)));
    return v;
}

int energy(const FockVector& v) {
    for (const auto& [mu, c] : v.coeffs())
        if (mu.size() != v.energy()) throw MixedEnergy("inhomogeneous vector");
    return v.energy();
}

namespace {

Poly flip_t(const Poly& p) {
    std::vector<Poly::Term> t;
    t.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
        int s = m.exponent(Var::t1) + m.exponent(Var::t2);
        t.emplace_back(m, s % 2 ? Rational(-c) : c);
    }
    return Poly::from_terms(std::move(t));
}

Poly double_T(const Poly& p) {
    std::vector<Poly::Term> t;
    t.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
        std::array<int, kNumVars> e{};
        for (int i = 0; i < kNumVars; ++i) e[i] = m.exponent(i);
        e[int(Var::T1)] *= 2;
        e[int(Var::T2)] *= 2;
        t.emplace_back(Monomial(e), c);
    }
    return Poly::from_terms(std::move(t));
}

bool halve_T(const Poly& p, Poly& out) {
    std::vector<Poly::Term> t;
    for (const auto& [m, c] : p.terms()) {
        std::array<int, kNumVars> e{};
        for (int i = 0; i < kNumVars; ++i) e[i] = m.exponent(i);
        if (e[int(Var::T1)] % 2 || e[int(Var::T2)] % 2) return false;
        e[int(Var::T1)] /= 2;
        e[int(Var::T2)] /= 2;
        t.emplace_back(Monomial(e), c);
    }
    out = Poly::from_terms(std::move(t));
    return true;
}

RatFunc herm_weight(const Partition& mu) {
    Poly t12 = Poly::variable(Var::t1) * Poly::variable(Var::t2);
    return RatFunc(Poly(1), Poly(Rational(zee(mu))) * t12.pow(mu.length()));
}

} // namespace

RatFunc bar(const RatFunc& f) { return RatFunc(flip_t(f.num()), flip_t(f.den())); }

RatFunc bar_T(const RatFunc& f) {
    RatFunc r = f.substitute(Var::T1, RatFunc::variable(Var::T1).inverse());
    return r.substitute(Var::T2, RatFunc::variable(Var::T2).inverse());
}

RatFunc double_lattice(const RatFunc& f) { return RatFunc(double_T(f.num()), double_T(f.den())); }

bool undouble_lattice(const RatFunc& f, RatFunc& out) {
    Poly n, d;
    if (!halve_T(f.num(), n) || !halve_T(f.den(), d)) return false;
    out = RatFunc(n, d);
    return true;
}

RatFunc inner_herm(const FockVector& v, const FockVector& w) {
    if (v.energy() != w.energy() && !v.is_zero() && !w.is_zero())
        throw MixedEnergy("inner product of different energies");
    RatFunc s;
    for (const auto& [mu, c] : v.coeffs()) {
        RatFunc d = w.coefficient(mu);
        if (d.is_zero()) continue;
        s += bar(c) * d * herm_weight(mu);
    }
    return s;
}

RatFunc inner_KT(const FockVector& v, const FockVector& w, bool inputs_doubled) {
    if (v.energy() != w.energy() && !v.is_zero() && !w.is_zero())
        throw MixedEnergy("inner product of different energies");
    RatFunc s;
    RatFunc T1 = RatFunc::variable(Var::T1), T2 = RatFunc::variable(Var::T2);
    for (const auto& [mu, c] : v.coeffs()) {
        RatFunc d = w.coefficient(mu);
        if (d.is_zero()) continue;
        RatFunc a = inputs_doubled ? c : double_lattice(c);
        RatFunc b = inputs_doubled ? d : double_lattice(d);
        RatFunc weight = RatFunc(Rational(1, 1) / Rational(zee(mu)));
        for (int p : mu.parts())
            weight *= (T1.pow(p) - T1.pow(-p)) * (T2.pow(p) - T2.pow(-p));
        s += bar_T(a) * b * weight;
    }
    return s;
}

CheckReport adjoint_check(int k, int n) {
    CheckReport rep;
    if (k == 0) return rep;
    RatFunc t12 = RatFunc::variable(Var::t1) * RatFunc::variable(Var::t2);
    RatFunc factor = k > 0 ? t12 : t12.inverse();
    for (int m = 0; m <= n; ++m) {
        if (m - k < 0 || m - k > n) continue;
        for (const auto& mu : partitions(m))
            for (const auto& nu : partitions(m - k)) {
                FockVector a = FockVector::basis(mu), b = FockVector::basis(nu);
                RatFunc lhs = inner_herm(apply_alpha(k, a), b);
                FockVector rb = apply_alpha(-k, b);
                rb *= factor;
                RatFunc rhs = inner_herm(a, rb);
                if (lhs != rhs) {
                    rep.ok = false;
                    rep.failure = "k=" + std::to_string(k) + " mu=" + mu.str() + " nu=" + nu.str();
                    return rep;
                }
            }
    }
    return rep;
}

} // namespace qde
