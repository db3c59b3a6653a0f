#include "qde/symfunc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "qde/error.hpp"
#include "qde/operator.hpp"

namespace qde {

namespace {

Poly t1_poly() { return Poly::variable(Var::t1); }
Poly t2_poly() { return Poly::variable(Var::t2); }

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// p(t1) -> homogeneous form of degree d in (t1, t2).
Poly homogenize(const Poly& p, int d) {
    std::vector<Poly::Term> terms;
    for (const auto& [m, c] : p.terms()) {
        int k = m.exponent(Var::t1);
        if (k > d) throw Error("homogenization degree too small");
        std::array<int, kNumVars> e{};
        e[int(Var::t1)] = k;
        e[int(Var::t2)] = d - k;
        terms.emplace_back(Monomial(e), c);
    }
    return Poly::from_terms(std::move(terms));
}

const std::array<Var, kNumVars> kSwapT{Var::q, Var::t2, Var::t1, Var::Q, Var::T1, Var::T2};

} // namespace

JackVector jack(const Partition& lambda) {
    const int n = lambda.size();
    if (n == 0) return {lambda, FockVector::vacuum()};
    // Rescaling t -> s t conjugates M_D(0) by s^{l(mu)}, so the t2 = 1 slice determines J.
    OperatorMatrix m0 = build_M0(n).substitute(Var::t2, Rational(1));
    RatFunc shift = RatFunc(Poly(Rational(nstat(lambda.transpose()))) * t1_poly()) + RatFunc(Rational(nstat(lambda)));
    Matrix<RatFunc> a = m0.m;
    for (int i = 0; i < a.rows(); ++i) a(i, i) += shift;
    auto ker = kernel(a);
    if (ker.empty()) throw DegenerateEigenvalue("no eigenvector for " + lambda.str());
    if (ker.size() > 1) {
        // c(lambda) = c(mu) for incomparable lambda, mu (first at n = 6); pick the
        // combination whose classical Jack is triangular in the monomial basis.
        const auto& basis = m0.basis;
        std::vector<std::vector<RatFunc>> mono;
        for (const auto& k : ker) {
            std::vector<RatFunc> col = k;
            for (size_t i = 0; i < col.size(); ++i) col[i] /= RatFunc(t1_poly().pow(basis[i].length()));
            mono.push_back(monomial_coefficients(FockVector::from_column(n, col)));
        }
        std::vector<int> rows;
        for (size_t j = 0; j < basis.size(); ++j)
            if (basis[j] != lambda && dominance(basis[j], lambda) != Dominance::leq) rows.push_back(int(j));
        Matrix<RatFunc> cond(int(rows.size()), int(ker.size()));
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t k = 0; k < ker.size(); ++k) cond(int(r), int(k)) = mono[k][rows[r]];
        auto comb = kernel(cond);
        if (comb.size() != 1) throw DegenerateEigenvalue("eigenvalue of " + lambda.str() + " is not simple");
        std::vector<RatFunc> v(basis.size());
        for (size_t k = 0; k < ker.size(); ++k)
            for (size_t i = 0; i < v.size(); ++i)
                if (!comb[0][k].is_zero() && !ker[k][i].is_zero()) v[i] += comb[0][k] * ker[k][i];
        ker = {v};
    }
    std::vector<RatFunc>& v = ker[0];
    const int last = int(v.size()) - 1; // |1^n>
    if (v[last].is_zero()) throw DegenerateEigenvalue("eigenvector has no |1^n> component");
    RatFunc scale = RatFunc(Poly(Rational(factorial(n))) * t1_poly().pow(n)) / v[last];
    FockVector out(n);
    const auto& basis = m0.basis;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        RatFunc x = v[i] * scale;
        if (!x.is_polynomial()) throw Error("Jack coefficient is not polynomial");
        Poly p = x.num() * (Rational(1) / x.den().constant_value());
        out.set(basis[i], RatFunc(homogenize(p, n + basis[i].length())));
    }
    return {lambda, out};
}

RatFunc jack_norm(const Partition& lambda) {
    RatFunc r(1);
    for (const auto& w : tangent_weights(lambda)) r *= w;
    return r;
}

CheckReport check_jack_eigen(const Partition& lambda) {
    CheckReport rep;
    const int n = lambda.size();
    FockVector j = jack(lambda).vector;
    FockVector lhs = build_M0(n).apply(j);
    FockVector rhs = -content_sum(lambda) * j;
    if (lhs != rhs) {
        rep.ok = false;
        rep.failure = "M_D(0) J != -c J for " + lambda.str();
    }
    Partition ones(std::vector<int>(n, 1));
    RatFunc lead = RatFunc(Poly(Rational(factorial(n))) * (t1_poly() * t2_poly()).pow(n));
    if (rep.ok && j.coefficient(ones) != lead) {
        rep.ok = false;
        rep.failure = "normalization of " + lambda.str();
    }
    return rep;
}

CheckReport check_jack_norm(const Partition& lambda) {
    FockVector j = jack(lambda).vector;
    RatFunc lhs = inner_herm(j, j), rhs = jack_norm(lambda);
    if (lhs == rhs) return {};
    return {false, "norm of " + lambda.str() + ": " + lhs.str() + " vs " + rhs.str()};
}

CheckReport check_jack_symmetry(const Partition& lambda) {
    FockVector a = jack(lambda).vector, b = jack(lambda.transpose()).vector;
    FockVector swapped(lambda.size());
    for (const auto& [mu, c] : a.coeffs()) swapped.set(mu, c.rename(kSwapT));
    if (swapped == b) return {};
    return {false, "J(" + lambda.str() + ") with t1<->t2 differs from J(" + lambda.transpose().str() + ")"};
}

CheckReport check_jack_orthogonality(int n) {
    auto b = partitions(n);
    std::vector<FockVector> js;
    for (const auto& l : b) js.push_back(jack(l).vector);
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t k = i + 1; k < b.size(); ++k)
            if (!inner_herm(js[i], js[k]).is_zero())
                return {false, "<J(" + b[i].str() + "), J(" + b[k].str() + ")> != 0"};
    return {};
}

CheckReport degree_structure_check(const Partition& lambda) {
    const int n = lambda.size();
    FockVector j = jack(lambda).vector;
    for (const auto& [mu, c] : j.coeffs()) {
        const int l = mu.length();
        Poly quotient;
        bool ok = c.is_polynomial() && c.den().constant_value() == 1 &&
                  c.num().divide_exact((t1_poly() * t2_poly()).pow(l), quotient);
        if (ok)
            for (const auto& [m, x] : quotient.terms())
                if (m.degree() != n - l) ok = false;
        if (!ok) return {false, "coefficient of |" + mu.str() + "> in J(" + lambda.str() + ")"};
    }
    return {};
}

Integer character(const Partition& lambda, const Partition& nu) {
    if (lambda.size() != nu.size()) throw MixedEnergy("character of partitions of different size");
    if (nu.length() == 0) return 1;
    const int r = nu[0];
    std::vector<int> rest(nu.parts().begin() + 1, nu.parts().end());
    Partition nu_rest(rest);
    const int len = lambda.length();
    std::set<int> beta;
    for (int i = 0; i < len; ++i) beta.insert(lambda[i] + len - 1 - i);
    Integer total = 0;
    for (int b : beta) {
        int target = b - r;
        if (target < 0 || beta.count(target)) continue;
        int between = 0;
        for (int x : beta)
            if (x > target && x < b) ++between;
        std::set<int> nb = beta;
        nb.erase(b);
        nb.insert(target);
        std::vector<int> parts;
        int i = 0;
        for (auto it = nb.rbegin(); it != nb.rend(); ++it, ++i) {
            int p = *it - (len - 1 - i);
            if (p > 0) parts.push_back(p);
        }
        Integer x = character(Partition(parts), nu_rest);
        if (between % 2) total -= x;
        else total += x;
    }
    return total;
}

FockVector schur(const Partition& lambda) {
    FockVector v(lambda.size());
    for (const auto& nu : partitions(lambda.size())) {
        Integer x = character(lambda, nu);
        if (x != 0) v.set(nu, RatFunc(Rational(x)));
    }
    return v;
}

namespace {

long count_fillings(const std::vector<int>& parts, size_t k, std::vector<int>& room) {
    if (k == parts.size()) {
        for (int r : room)
            if (r) return 0;
        return 1;
    }
    long total = 0;
    for (auto& r : room)
        if (r >= parts[k]) {
            r -= parts[k];
            total += count_fillings(parts, k + 1, room);
            r += parts[k];
        }
    return total;
}

std::mutex g_transition_mutex;
std::map<int, std::pair<Matrix<Rational>, Matrix<Rational>>> g_transitions;

const std::pair<Matrix<Rational>, Matrix<Rational>>& transitions(int n) {
    std::lock_guard<std::mutex> lock(g_transition_mutex);
    auto it = g_transitions.find(n);
    if (it != g_transitions.end()) return it->second;
    auto b = partitions(n);
    const int d = int(b.size());
    Matrix<Rational> L(d, d, Rational(0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<int> room = b[j].parts();
            L(i, j) = Rational(count_fillings(b[i].parts(), 0, room));
        }
    return g_transitions.emplace(n, std::make_pair(L, inverse(L))).first->second;
}

} // namespace

Matrix<Rational> power_to_monomial(int n) { return transitions(n).first; }
Matrix<Rational> monomial_to_power(int n) { return transitions(n).second; }

FockVector monomial(const Partition& mu) {
    const int n = mu.size();
    auto b = partitions(n);
    const auto& inv = transitions(n).second;
    int i = index_of(b, mu);
    FockVector v(n);
    for (size_t j = 0; j < b.size(); ++j)
        if (inv(i, int(j)) != 0) v.set(b[j], RatFunc(inv(i, int(j)) * Rational(zee(b[j]))));
    return v;
}

std::vector<RatFunc> monomial_coefficients(const FockVector& v) {
    const int n = v.energy();
    auto b = partitions(n);
    const auto& L = transitions(n).first;
    std::vector<RatFunc> out(b.size());
    for (const auto& [nu, a] : v.coeffs()) {
        int i = index_of(b, nu);
        Rational z = Rational(1) / Rational(zee(nu));
        for (size_t j = 0; j < b.size(); ++j)
            if (L(i, int(j)) != 0) out[j] += a * RatFunc(L(i, int(j)) * z);
    }
    return out;
}

namespace {

RatFunc qt_weight(const Partition& mu) {
    Poly Q = Poly::variable(Var::T1), T = Poly::variable(Var::T2);
    Poly num(1), den(1);
    for (int p : mu.parts()) {
        num *= Poly(1) - Q.pow(p);
        den *= Poly(1) - T.pow(p);
    }
    return RatFunc(num, den * Rational(zee(mu)));
}

std::mutex g_macdonald_mutex;
std::map<int, std::vector<MacdonaldVector>> g_macdonald;

const std::vector<MacdonaldVector>& macdonald_all(int n) {
    std::lock_guard<std::mutex> lock(g_macdonald_mutex);
    auto it = g_macdonald.find(n);
    if (it != g_macdonald.end()) return it->second;
    auto b = partitions(n);
    const int d = int(b.size());
    std::vector<MacdonaldVector> out(d);
    std::vector<RatFunc> norms(d);
    // Lexicographic order refines dominance; orthogonalize from the bottom up.
    for (int i = d - 1; i >= 0; --i) {
        FockVector m = monomial(b[i]);
        FockVector p = m;
        for (int j = d - 1; j > i; --j) {
            RatFunc c = macdonald_inner(m, out[j].vector);
            if (c.is_zero()) continue;
            p -= (c / norms[j]) * out[j].vector;
        }
        out[i].lambda = b[i];
        out[i].vector = p;
        out[i].mono = monomial_coefficients(p);
        norms[i] = macdonald_inner(p, p);
    }
    return g_macdonald.emplace(n, std::move(out)).first->second;
}

} // namespace

RatFunc macdonald_inner(const FockVector& v, const FockVector& w) {
    if (v.energy() != w.energy() && !v.is_zero() && !w.is_zero())
        throw MixedEnergy("inner product of vectors of different energy");
    RatFunc s;
    for (const auto& [mu, a] : v.coeffs()) {
        RatFunc b = w.coefficient(mu);
        if (!b.is_zero()) s += a * b * qt_weight(mu);
    }
    return s;
}

MacdonaldVector macdonald_P(const Partition& lambda) {
    const auto& all = macdonald_all(lambda.size());
    return all[index_of(partitions(lambda.size()), lambda)];
}

CheckReport check_macdonald_triangular(const Partition& lambda) {
    auto P = macdonald_P(lambda);
    auto b = partitions(lambda.size());
    for (size_t j = 0; j < b.size(); ++j) {
        const RatFunc& c = P.mono[j];
        if (b[j] == lambda) {
            if (c != RatFunc(1)) return {false, "P(" + lambda.str() + ") is not monic"};
        } else if (!c.is_zero() && dominance(b[j], lambda) != Dominance::leq) {
            return {false, "P(" + lambda.str() + ") contains m(" + b[j].str() + ")"};
        }
    }
    return {};
}

CheckReport check_macdonald_orthogonality(int n) {
    const auto& all = macdonald_all(n);
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if (!macdonald_inner(all[i].vector, all[j].vector).is_zero())
                return {false, "<P(" + all[i].lambda.str() + "), P(" + all[j].lambda.str() + ")> != 0"};
    return {};
}

CheckReport check_schur_limit(int n) {
    for (const auto& P : macdonald_all(n)) {
        FockVector lim(n);
        for (const auto& [mu, c] : P.vector.coeffs()) lim.set(mu, c.substitute(Var::T2, RatFunc::variable(Var::T1)));
        if (lim != schur(P.lambda)) return {false, "P(" + P.lambda.str() + ") at Q = T is not s"};
    }
    return {};
}

FockVector upsilon(const FockVector& v, bool invert) {
    FockVector out(v.energy());
    Poly T = Poly::variable(Var::T2);
    for (const auto& [mu, c] : v.coeffs()) {
        Poly num(1), den(1);
        for (int p : mu.parts()) {
            num *= T.pow(p);
            den *= T.pow(p) - Poly(1);
        }
        out.set(mu, invert ? c * RatFunc(den, num) : c * RatFunc(num, den));
    }
    return out;
}

FockVector haiman_H(const Partition& lambda) {
    const int n = lambda.size();
    FockVector p(n);
    RatFunc Tinv = RatFunc(Poly(1), Poly::variable(Var::T2));
    FockVector P = macdonald_P(lambda).vector;
    for (const auto& [mu, c] : P.coeffs()) p.set(mu, c.substitute(Var::T2, Tinv));
    FockVector h = upsilon(p);
    RatFunc factor = RatFunc(Poly::variable(Var::T2).pow(nstat(lambda)));
    Poly T1 = Poly::variable(Var::T1), T2 = Poly::variable(Var::T2);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i - 1]; ++j) {
            auto [a, l] = arm_leg(lambda, i, j);
            // 1 - T1^a T2^{-l-1}
            factor *= RatFunc(T2.pow(l + 1) - T1.pow(a), T2.pow(l + 1));
        }
    return factor * h;
}

Matrix<RatFunc> haiman_matrix(int n) {
    auto b = partitions(n);
    Matrix<RatFunc> m(int(b.size()), int(b.size()));
    for (size_t j = 0; j < b.size(); ++j) {
        auto col = haiman_H(b[j]).column();
        for (size_t i = 0; i < b.size(); ++i) m(int(i), int(j)) = col[i];
    }
    return m;
}

Rational haiman_det_at(int n, const Rational& T1, const Rational& T2) {
    std::map<Var, Rational> pt{{Var::T1, T1}, {Var::T2, T2}};
    Matrix<RatFunc> h = haiman_matrix(n);
    Matrix<Rational> m = h.map([&](const RatFunc& f) { return f.evaluate(pt); });
    return det(m);
}

FockVector classical_jack(const Partition& lambda) {
    const int n = lambda.size();
    FockVector j = jack(lambda).vector, out(n);
    for (const auto& [mu, c] : j.coeffs()) out.set(mu, c / RatFunc(t2_poly().pow(n) * t1_poly().pow(mu.length())));
    return out;
}

std::vector<RatFunc> monic_jack_monomial(const Partition& lambda) {
    auto mono = monomial_coefficients(classical_jack(lambda));
    RatFunc lead = mono[index_of(partitions(lambda.size()), lambda)];
    for (auto& c : mono) c /= lead;
    return mono;
}

} // namespace qde
