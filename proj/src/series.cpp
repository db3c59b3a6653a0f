#include "qde/series.hpp"

#include <map>
#include <mutex>

#include "qde/error.hpp"
#include "qde/symfunc.hpp"

namespace qde {

MDTaylor md_taylor(int n, int N) {
    MDTaylor t;
    t.M0 = build_M0(n);
    t.D.resize(N + 1);
    for (int m = 1; m <= N; ++m) t.D[m] = MD_diagonal_coefficient(n, m);
    return t;
}

namespace {

Poly as_poly(const RatFunc& f) {
    if (!f.is_polynomial()) throw Error("polynomial expected, got " + f.str());
    return f.num() * (Rational(1) / f.den().constant_value());
}

// Identity, or t2 -> level - t1.
struct Specialize {
    std::optional<int> level;
    Poly operator()(const Poly& p) const {
        if (!level) return p;
        return p.substitute(Var::t2, Poly(*level) - Poly::variable(Var::t1));
    }
    DPoly dense(const Poly& p) const { return DPoly::from_poly((*this)(p)); }
};

Linear to_linear(const Poly& p) {
    Linear l{0, 0, 0};
    for (const auto& [m, c] : p.terms()) {
        if (c.get_den() != 1 || m.degree() > 1) throw Error("linear form expected, got " + p.str());
        if (m.is_one()) l.a = c.get_num();
        else if (m.exponent(Var::t1) == 1) l.b1 = c.get_num();
        else if (m.exponent(Var::t2) == 1) l.b2 = c.get_num();
        else throw Error("linear form in t1, t2 expected, got " + p.str());
    }
    return l;
}

Linear bar(const Linear& l) { return Linear{l.a, -l.b1, -l.b2}; }

std::mutex g_adj_mutex;
std::map<int, Matrix<Poly>> g_adj;

// adj(q - M_D(0)), with q used as the spectral variable.
const Matrix<Poly>& adjugate_resolvent(int n) {
    std::lock_guard<std::mutex> lock(g_adj_mutex);
    auto it = g_adj.find(n);
    if (it != g_adj.end()) return it->second;
    OperatorMatrix m0 = build_M0(n);
    const int d = m0.dim();
    Matrix<Poly> b(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) b(i, j) = -as_poly(m0(i, j)) + (i == j ? Poly::variable(Var::q) : Poly());
    Matrix<Poly> adj(d, d);
    if (d == 1) {
        adj(0, 0) = Poly(1);
    } else {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Matrix<Poly> minor(d - 1, d - 1);
                for (int r = 0, rr = 0; r < d; ++r) {
                    if (r == j) continue;
                    for (int c = 0, cc = 0; c < d; ++c) {
                        if (c == i) continue;
                        minor(rr, cc++) = b(r, c);
                    }
                    ++rr;
                }
                Poly det = det_bareiss(minor);
                adj(i, j) = (i + j) % 2 ? -det : det;
            }
    }
    return g_adj.emplace(n, std::move(adj)).first->second;
}

using DVec = std::vector<DPoly>;

void mul_factors(DVec& v, const std::vector<Linear>& f) {
    for (auto& x : v)
        for (const auto& l : f) x.mul_linear(l);
}

void mul_range(DVec& v, const std::vector<std::vector<Linear>>& dets, int a, int b) {
    for (int j = a; j <= b; ++j) mul_factors(v, dets[j]);
}

SeriesSolution solve(const Partition& lambda, int N, std::optional<int> level) {
    if (N < 0) throw Error("series order must be non-negative");
    const int n = lambda.size();
    const auto basis = partitions(n);
    const int d = int(basis.size());
    const int self = index_of(basis, lambda);
    Specialize sp{level};

    SeriesSolution s;
    s.lambda = lambda;
    s.exponent = -content_sum(lambda);
    s.level = level;
    if (level) s.exponent = RatFunc(sp(as_poly(s.exponent)));

    Poly c_lambda = as_poly(content_sum(lambda));
    std::vector<Poly> c_mu(d);
    for (int i = 0; i < d; ++i) c_mu[i] = as_poly(content_sum(basis[i]));

    s.dets.resize(N + 1);
    for (int k = 1; k <= N; ++k) {
        s.dets[k].push_back(Linear{k, 0, 0});
        for (int i = 0; i < d; ++i) {
            if (i == self) continue;
            Linear l = to_linear(sp(Poly(k) - c_lambda + c_mu[i]));
            if (l.is_constant() && l.a == 0)
                throw ResonanceAtSpecializedParameters("c(" + lambda.str() + ") - c(" + basis[i].str() +
                                                       ") = " + std::to_string(k) + " identically");
            s.dets[k].push_back(l);
        }
    }

    FockVector j = jack(lambda).vector;
    s.w.assign(1, DVec(d));
    for (int i = 0; i < d; ++i) s.w[0][i] = sp.dense(as_poly(j.coefficient(basis[i])));

    // sum_m D_m u_{k-m} = (t1+t2) [n G1 + sum_j E_j G_j] over divisor classes j of m.
    DPoly sigma = sp.dense(Poly::variable(Var::t1) + Poly::variable(Var::t2));
    std::vector<std::vector<Integer>> E(n + 1, std::vector<Integer>(d, 0));
    for (int jj = 1; jj <= n; ++jj)
        for (int i = 0; i < d; ++i) E[jj][i] = -Integer(basis[i].multiplicity(jj)) * jj * jj;
    std::vector<std::vector<DVec>> G(n + 1, std::vector<DVec>(N + 1, DVec(d)));

    const Matrix<Poly>& adj = adjugate_resolvent(n);
    for (int k = 1; k <= N; ++k) {
        for (int jj = 1; jj <= n && jj <= k; ++jj) {
            DVec g = G[jj][k - jj];
            if (k - jj >= 1) mul_factors(g, s.dets[k - jj]);
            for (int i = 0; i < d; ++i) g[i] += s.w[k - jj][i];
            mul_range(g, s.dets, k - jj + 1, k - 1);
            if (jj % 2)
                for (auto& x : g) x = -x;
            G[jj][k] = std::move(g);
        }
        DVec S(d);
        for (int i = 0; i < d; ++i) {
            DPoly acc = G[1][k][i];
            acc *= Integer(n);
            for (int jj = 1; jj <= n; ++jj)
                if (E[jj][i] != 0 && !G[jj][k][i].is_zero()) {
                    DPoly t = G[jj][k][i];
                    t *= E[jj][i];
                    acc += t;
                }
            S[i] = sigma * acc;
        }
        Poly shift = Poly(k) - c_lambda;
        DVec wk(d);
        for (int i = 0; i < d; ++i)
            for (int c = 0; c < d; ++c) {
                if (S[c].is_zero() || adj(i, c).is_zero()) continue;
                wk[i].add_product(sp.dense(adj(i, c).substitute(Var::q, shift)), S[c]);
            }
        s.w.push_back(std::move(wk));
    }
    return s;
}

} // namespace

SeriesSolution frobenius(const Partition& lambda, int N) { return solve(lambda, N, std::nullopt); }

SeriesSolution frobenius_level(const Partition& lambda, int level, int N) { return solve(lambda, N, level); }

bool SeriesSolution::vanishes(int k) const {
    for (const auto& x : w[k])
        if (!x.is_zero()) return false;
    return true;
}

DPoly SeriesSolution::delta_ratio(int k, int j) const {
    DPoly r(1);
    for (int i = j + 1; i <= k; ++i)
        for (const auto& l : dets[i]) r.mul_linear(l);
    return r;
}

FockVector SeriesSolution::coefficient(int k) const {
    const int n = energy();
    const auto basis = partitions(n);
    Integer scale = 1;
    std::map<Linear, int> factors;
    for (int i = 1; i <= k; ++i)
        for (const auto& l : dets[i]) {
            Integer g;
            Linear p = l.primitive(g);
            scale *= g;
            if (!p.is_constant()) ++factors[p];
        }
    FockVector v(n);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (w[k][i].is_zero()) continue;
        DPoly num = w[k][i];
        DPoly den(scale);
        for (const auto& [l, e] : factors) {
            int left = e;
            DPoly q;
            while (left > 0 && num.divide_linear(l, q)) {
                num = std::move(q);
                --left;
            }
            for (int r = 0; r < left; ++r) den.mul_linear(l);
        }
        v.set(basis[i], RatFunc::from_coprime(num.to_poly(), den.to_poly()));
    }
    return v;
}

std::vector<std::vector<Rational>> frobenius_point(const Partition& lambda, int N, const Rational& t1,
                                                   const Rational& t2) {
    const int n = lambda.size();
    const auto basis = partitions(n);
    const int d = int(basis.size());
    std::map<Var, Rational> pt{{Var::t1, t1}, {Var::t2, t2}};
    Matrix<Rational> m0 = build_M0(n).m.map([&](const RatFunc& f) { return f.evaluate(pt); });
    Rational c = content_sum(lambda, t1, t2);
    Rational sigma = t1 + t2;
    std::vector<std::vector<Rational>> u(1, std::vector<Rational>(d));
    FockVector j = jack(lambda).vector;
    for (int i = 0; i < d; ++i) u[0][i] = j.coefficient(basis[i]).evaluate(pt);
    for (int k = 1; k <= N; ++k) {
        Matrix<Rational> a(d, d);
        for (int r = 0; r < d; ++r)
            for (int col = 0; col < d; ++col) a(r, col) = (r == col ? Rational(k) - c : Rational(0)) - m0(r, col);
        if (det(a) == 0)
            throw ResonanceAtSpecializedParameters("k = " + std::to_string(k) + " is a resonance for " +
                                                   lambda.str());
        std::vector<Rational> rhs(d, Rational(0));
        for (int m = 1; m <= k; ++m) {
            Rational sign = (m % 2) ? Rational(2) : Rational(-2); // -2 (-1)^m
            for (int i = 0; i < d; ++i) {
                Rational bracket = frac(-n, 2);
                for (int p : basis[i].parts())
                    if (m % p == 0) bracket += frac(p * p, 2);
                if (bracket == 0) continue;
                rhs[i] += sign * sigma * bracket * u[k - m][i];
            }
        }
        for (auto& x : rhs) x.canonicalize();
        u.push_back(inverse(a).apply(rhs));
    }
    return u;
}

ResidualReport check_ode_residual(const SeriesSolution& s) {
    ResidualReport rep;
    const int n = s.energy();
    const int d = int(partitions(n).size());
    Specialize sp{s.level};
    OperatorMatrix md = build_MD(n);

    Poly den(1);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Poly& e = md(i, j).den();
            if (e.is_constant()) continue;
            Poly g = gcd(den, e);
            den = den * e.exact_div(g);
        }
    // Integral scale so that s*den and s*den*M_D have integer coefficients.
    Integer scale = 1;
    auto absorb = [&](const Poly& p) {
        for (const auto& [m, c] : p.terms()) {
            Integer dd = c.get_den();
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), dd.get_mpz_t());
        }
    };
    absorb(den);
    Matrix<Poly> P(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            P(i, j) = md(i, j).num() * den.exact_div(md(i, j).den());
            absorb(P(i, j));
        }
    auto qcoeffs = [&](const Poly& p) {
        std::vector<DPoly> out;
        for (const auto& c : p.coefficients(Var::q)) out.push_back(sp.dense(c * Rational(scale)));
        return out;
    };
    std::vector<DPoly> den_c = qcoeffs(den);
    std::vector<std::vector<std::vector<DPoly>>> P_c(d, std::vector<std::vector<DPoly>>(d));
    int degP = int(den_c.size()) - 1;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            P_c[i][j] = qcoeffs(P(i, j));
            degP = std::max(degP, int(P_c[i][j].size()) - 1);
        }
    DPoly c = DPoly::from_poly(as_poly(-s.exponent));

    for (int k = 0; k <= s.order(); ++k) {
        DVec total(d);
        for (int i = 0; i <= std::min(k, degP); ++i) {
            const DVec& u = s.w[k - i];
            DVec term(d);
            for (int r = 0; r < d; ++r) {
                if (i < int(den_c.size()) && !den_c[i].is_zero() && !u[r].is_zero()) {
                    DPoly x = DPoly(Integer(k - i)) - c;
                    term[r].add_product(den_c[i] * x, u[r]);
                }
                for (int col = 0; col < d; ++col)
                    if (i < int(P_c[r][col].size()) && !P_c[r][col][i].is_zero() && !u[col].is_zero())
                        term[r] -= P_c[r][col][i] * u[col];
            }
            mul_range(term, s.dets, k - i + 1, k);
            for (int r = 0; r < d; ++r) total[r] += term[r];
        }
        for (int r = 0; r < d; ++r)
            if (!total[r].is_zero()) {
                rep.ok = false;
                rep.first_failure = k;
                rep.failure = "residual at order " + std::to_string(k);
                return rep;
            }
        rep.verified = k;
    }
    return rep;
}

ResidualReport check_orthogonality(const SeriesSolution& A, const SeriesSolution& B) {
    if (A.level || B.level) throw Error("orthogonality needs unspecialized series");
    if (A.energy() != B.energy()) throw MixedEnergy("orthogonality of series of different energy");
    ResidualReport rep;
    const int n = A.energy();
    const auto basis = partitions(n);
    const int d = int(basis.size());
    const int N = std::min(A.order(), B.order());

    Integer Z = 1;
    for (const auto& nu : basis) {
        Integer z = zee(nu);
        mpz_lcm(Z.get_mpz_t(), Z.get_mpz_t(), z.get_mpz_t());
    }
    std::vector<DPoly> weight(d);
    for (int i = 0; i < d; ++i) {
        Poly m = (Poly::variable(Var::t1) * Poly::variable(Var::t2)).pow(n - basis[i].length());
        weight[i] = DPoly::from_poly(m * Rational(Z / zee(basis[i])));
    }
    std::vector<std::vector<Linear>> bar_dets(A.dets.size());
    for (size_t k = 0; k < A.dets.size(); ++k)
        for (const auto& l : A.dets[k]) bar_dets[k].push_back(bar(l));

    for (int k = 0; k <= N; ++k) {
        DPoly total;
        for (int a = 0; a <= k; ++a) {
            const int b = k - a;
            DVec x(d), y(d);
            for (int i = 0; i < d; ++i) {
                x[i] = A.w[a][i].bar();
                y[i] = B.w[b][i];
            }
            mul_range(x, bar_dets, a + 1, k);
            mul_range(y, B.dets, b + 1, k);
            for (int i = 0; i < d; ++i) {
                if (x[i].is_zero() || y[i].is_zero()) continue;
                total.add_product(x[i] * weight[i], y[i]);
            }
        }
        DPoly expected;
        if (k == 0 && A.lambda == B.lambda) {
            Poly m = (Poly::variable(Var::t1) * Poly::variable(Var::t2)).pow(n);
            expected = DPoly::from_poly(as_poly(jack_norm(A.lambda)) * m * Rational(Z));
        }
        if (total != expected) {
            rep.ok = false;
            rep.first_failure = k;
            rep.failure = "<Y(" + A.lambda.str() + "), Y(" + B.lambda.str() + ")> at order " + std::to_string(k);
            return rep;
        }
        rep.verified = k;
    }
    return rep;
}

ResidualReport check_orthogonality(const Partition& lambda, const Partition& mu, int N) {
    SeriesSolution a = frobenius(lambda, N);
    if (lambda == mu) return check_orthogonality(a, a);
    return check_orthogonality(a, frobenius(mu, N));
}

CheckReport check_series_symmetry(const SeriesSolution& a, const SeriesSolution& at) {
    const int N = std::min(a.order(), at.order());
    for (int k = 0; k <= N; ++k)
        for (size_t i = 0; i < a.w[k].size(); ++i)
            if (a.w[k][i].swap_vars() != at.w[k][i])
                return {false, "order " + std::to_string(k) + " of Y(" + a.lambda.str() + ")"};
    return {};
}

LevelReport check_polynomial_level(const Partition& lambda, int level, int N) {
    SeriesSolution s = frobenius_level(lambda, level, N);
    LevelReport r;
    r.order = N;
    r.terminated = s.vanishes(N);
    for (int k = N; k >= 0; --k)
        if (!s.vanishes(k)) {
            r.degree = k;
            break;
        }
    if (!r.terminated) r.degree = -1;
    return r;
}

} // namespace qde
