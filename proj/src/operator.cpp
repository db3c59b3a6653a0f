#include "qde/operator.hpp"

#include <numeric>

namespace qde {

OperatorMatrix::OperatorMatrix(int energy) : n(energy), basis(partitions(energy)) {
    m = Matrix<RatFunc>(int(basis.size()), int(basis.size()));
}

FockVector OperatorMatrix::apply(const FockVector& v) const {
    if (!v.is_zero() && v.energy() != n) throw MixedEnergy("operator applied to wrong energy");
    return FockVector::from_column(n, m.apply(v.column()));
}

OperatorMatrix OperatorMatrix::substitute(Var v, const RatFunc& value) const {
    OperatorMatrix r = *this;
    r.m = m.map([&](const RatFunc& f) { return f.substitute(v, value); });
    return r;
}

OperatorMatrix OperatorMatrix::substitute(Var v, const Rational& value) const {
    OperatorMatrix r = *this;
    r.m = m.map([&](const RatFunc& f) { return f.substitute(v, value); });
    return r;
}

RatFunc A_factor(int k) {
    Poly mq = Poly(-1) * Poly::variable(Var::q);
    Poly p = mq.pow(unsigned(k));
    return RatFunc(p + Poly(1), p - Poly(1));
}

namespace {

RatFunc t1() { return RatFunc::variable(Var::t1); }
RatFunc t2() { return RatFunc::variable(Var::t2); }

// (1/2) sum_{k,l>=1} [a * alpha_{k+l} alpha_{-k} alpha_{-l} + b * alpha_{-k-l} alpha_k alpha_l]
void add_cubic(OperatorMatrix& M, const RatFunc& split, const RatFunc& join) {
    const int n = M.n;
    for (int s = 0; s < M.dim(); ++s) {
        FockVector e = FockVector::basis(M.basis[s]);
        FockVector acc(n);
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
                if (k + l > n) continue;
                if (!split.is_zero())
                    acc += split * apply_alpha(k + l, apply_alpha(-k, apply_alpha(-l, e)));
                if (!join.is_zero())
                    acc += join * apply_alpha(-k - l, apply_alpha(k, apply_alpha(l, e)));
            }
        for (const auto& [mu, c] : acc.coeffs()) {
            int r = index_of(M.basis, mu);
            M(r, s) += c * RatFunc(Rational(1, 2));
        }
    }
}

OperatorMatrix build_with_diagonal(int n, const std::vector<RatFunc>& Ak, const RatFunc& shift) {
    OperatorMatrix M(n);
    RatFunc lvl = t1() + t2();
    for (int s = 0; s < M.dim(); ++s) {
        RatFunc d;
        for (int p : M.basis[s].parts()) d += RatFunc(frac(p * p, 2)) * Ak[p];
        M(s, s) = lvl * d - shift;
    }
    add_cubic(M, t1() * t2(), RatFunc(-1));
    return M;
}

std::vector<RatFunc> A_table(int n) {
    std::vector<RatFunc> a(n + 1);
    for (int k = 1; k <= n; ++k) a[k] = A_factor(k);
    return a;
}

std::vector<RatFunc> minus_ones(int n) { return std::vector<RatFunc>(n + 1, RatFunc(-1)); }

CheckReport fail(const std::string& s) {
    CheckReport r;
    r.ok = false;
    r.failure = s;
    return r;
}

// ---- univariate rational polynomials for the cyclotomic field ----

using UQ = std::vector<Rational>;

void utrim(UQ& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

UQ umul(const UQ& a, const UQ& b) {
    if (a.empty() || b.empty()) return {};
    UQ r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

// quotient and remainder
void udivmod(UQ a, const UQ& b, UQ& q, UQ& r) {
    utrim(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        size_t sh = a.size() - b.size();
        Rational c = a.back() / b.back();
        q[sh] = c;
        for (size_t i = 0; i < b.size(); ++i) a[i + sh] -= c * b[i];
        utrim(a);
    }
    r = a;
}

UQ usub(const UQ& a, const UQ& b) {
    UQ r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    utrim(r);
    return r;
}

UQ cyclotomic(int d) {
    UQ num(d + 1, Rational(0));
    num[0] = -1;
    num[d] = 1;
    for (int e = 1; e < d; ++e)
        if (d % e == 0) {
            UQ q, r;
            udivmod(num, cyclotomic(e), q, r);
            num = q;
        }
    return num;
}

// inverse of a modulo m (a coprime to m)
UQ uinverse(const UQ& a, const UQ& m) {
    UQ r0 = m, r1 = a, s0, s1{Rational(1)};
    utrim(r1);
    while (!(r1.size() == 1)) {
        if (r1.empty()) throw Error("element not invertible in cyclotomic field");
        UQ q, r;
        udivmod(r0, r1, q, r);
        UQ s = usub(s0, umul(q, s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    UQ res = s1;
    for (auto& c : res) c /= r1[0];
    UQ q, r;
    udivmod(res, m, q, r);
    return r;
}

// p(-x) mod phi for p with coefficients in Q[t] given by coefficients(q)
std::vector<Poly> reduce_at_minus_x(const Poly& p, const UQ& phi) {
    auto c = p.coefficients(Var::q);
    std::vector<Poly> v(c.size());
    for (size_t k = 0; k < c.size(); ++k) v[k] = (k % 2) ? -c[k] : c[k];
    const size_t d = phi.size() - 1;
    for (size_t k = v.size(); k-- > d;) {
        if (v[k].is_zero()) continue;
        Poly lead = v[k];
        for (size_t i = 0; i <= d; ++i) v[k - d + i] -= lead * Poly(phi[i]);
    }
    if (v.size() > d) v.resize(d);
    return v;
}

UQ rational_coeffs(const std::vector<Poly>& v) {
    UQ r;
    for (const auto& p : v) {
        if (!p.is_constant()) throw Error("expected t-free polynomial");
        r.push_back(p.constant_value());
    }
    utrim(r);
    return r;
}

} // namespace

OperatorMatrix build_M(int n) { return build_with_diagonal(n, A_table(n), RatFunc()); }

OperatorMatrix build_MD(int n) {
    RatFunc shift = (t1() + t2()) * RatFunc(frac(n, 2)) * A_factor(1);
    return build_with_diagonal(n, A_table(n), shift);
}

OperatorMatrix build_M0(int n) {
    RatFunc shift = (t1() + t2()) * RatFunc(frac(-n, 2));
    return build_with_diagonal(n, minus_ones(n), shift);
}

OperatorMatrix build_Mq0(int n) { return build_with_diagonal(n, minus_ones(n), RatFunc()); }

OperatorMatrix build_CS(int n, const RatFunc& theta) {
    OperatorMatrix M(n);
    RatFunc half = (RatFunc(1) - theta) * RatFunc(Rational(1, 2));
    for (int s = 0; s < M.dim(); ++s) {
        long sq = 0;
        for (int p : M.basis[s].parts()) sq += long(p) * p;
        M(s, s) = half * RatFunc(sq);
    }
    add_cubic(M, theta, RatFunc(1));
    return M;
}

std::vector<RatFunc> MD_diagonal_coefficient(int n, int m) {
    // A_k(q) = -1 - 2 sum_{j>=1} (-q)^{kj};  A_1 term of the energy shift likewise.
    auto basis = partitions(n);
    std::vector<RatFunc> d(basis.size());
    if (m < 1) throw Error("coefficient index must be positive");
    RatFunc lvl = t1() + t2();
    Rational sign = (m % 2) ? -1 : 1;
    for (size_t s = 0; s < basis.size(); ++s) {
        Rational acc = 0;
        for (int p : basis[s].parts())
            if (m % p == 0) acc += frac(p * p, 2);
        acc -= frac(n, 2);
        d[s] = lvl * RatFunc(Rational(-2) * sign * acc);
    }
    return d;
}

MDCSReport check_MDCS(int n) {
    MDCSReport rep;
    OperatorMatrix lhs = build_Mq0(n);
    RatFunc theta = -t2() / t1();
    OperatorMatrix cs = build_CS(n, theta);
    Matrix<RatFunc> diff(lhs.dim(), lhs.dim());
    for (int i = 0; i < lhs.dim(); ++i)
        for (int j = 0; j < lhs.dim(); ++j) {
            int li = lhs.basis[i].length(), lj = lhs.basis[j].length();
            RatFunc rhs = -t1().pow(li + 1) * cs(i, j) * t1().pow(-lj);
            diff(i, j) = lhs(i, j) - rhs;
        }
    RatFunc shift = diff(0, 0);
    for (int i = 0; i < lhs.dim(); ++i)
        for (int j = 0; j < lhs.dim(); ++j) {
            RatFunc want = i == j ? shift : RatFunc();
            if (diff(i, j) != want) {
                rep.failure = "entry (" + lhs.basis[i].str() + "," + lhs.basis[j].str() +
                              ") differs by " + diff(i, j).str();
                return rep;
            }
        }
    rep.ok = true;
    rep.shift = shift;
    return rep;
}

CheckReport check_skew(const OperatorMatrix& M) {
    // <M e_s, e_r> + <e_s, M e_r> = 0 with <mu|nu> = delta / (z (t1 t2)^l)
    RatFunc t12 = t1() * t2();
    auto w = [&](const Partition& mu) {
        return RatFunc(Rational(1) / Rational(zee(mu))) * t12.pow(-mu.length());
    };
    for (int s = 0; s < M.dim(); ++s)
        for (int r = 0; r < M.dim(); ++r) {
            RatFunc v = bar(M(r, s)) * w(M.basis[r]) + M(s, r) * w(M.basis[s]);
            if (!v.is_zero())
                return fail("pair (" + M.basis[s].str() + "," + M.basis[r].str() + ")");
        }
    return {};
}

CheckReport check_skew(int n) {
    CheckReport r = check_skew(build_M(n));
    if (!r.ok) return fail("M: " + r.failure);
    r = check_skew(build_MD(n));
    if (!r.ok) return fail("MD: " + r.failure);
    return r;
}

CheckReport check_inversion(int n) {
    OperatorMatrix M = build_MD(n);
    OperatorMatrix Minv = M.substitute(Var::q, RatFunc::variable(Var::q).inverse());
    for (int i = 0; i < M.dim(); ++i)
        for (int j = 0; j < M.dim(); ++j) {
            int s = ((M.basis[i].length() + M.basis[j].length()) % 2) ? -1 : 1;
            if (Minv(i, j) != RatFunc(-s) * M(i, j))
                return fail("entry (" + M.basis[i].str() + "," + M.basis[j].str() + ")");
        }
    return {};
}

SingularPoints singular_points(int n) {
    SingularPoints sp;
    for (int d = 2; d <= n; ++d)
        for (int j = 1; j < d; ++j)
            if (std::gcd(j, d) == 1) sp.roots.push_back({frac(j, d)});
    return sp;
}

OperatorMatrix residue_at_root(int n, const RootPoint& zeta) {
    int d = zeta.order();
    if (zeta.r <= 0 || zeta.r >= 1 || d < 2 || d > n)
        throw NotASingularRoot("-exp(2 pi i " + zeta.r.get_str() + ") is not singular for n=" +
                               std::to_string(n));
    OperatorMatrix R(n);
    for (int s = 0; s < R.dim(); ++s) {
        long e = 0;
        for (int p : R.basis[s].parts())
            if (p % d == 0) e += p;
        R(s, s) = (t1() + t2()) * RatFunc(e);
    }
    return R;
}

OperatorMatrix residue_exact(int n, const RootPoint& zeta) {
    int d = zeta.order();
    if (zeta.r <= 0 || zeta.r >= 1 || d < 2)
        throw NotASingularRoot("not a root of unity point");
    UQ phi = cyclotomic(d);
    OperatorMatrix M = build_MD(n);
    OperatorMatrix R(n);
    Poly qv = Poly::variable(Var::q);
    for (int i = 0; i < M.dim(); ++i)
        for (int j = 0; j < M.dim(); ++j) {
            const RatFunc& f = M(i, j);
            if (f.is_zero()) continue;
            if (f.den().variables() & ~1u) throw Error("denominator depends on t");
            Poly h = qv * f.den();
            UQ hz = rational_coeffs(reduce_at_minus_x(h, phi));
            if (!hz.empty()) continue; // zeta is not a pole
            UQ dz = rational_coeffs(reduce_at_minus_x(h.derivative(Var::q), phi));
            if (dz.empty()) throw Error("pole of order > 1");
            UQ inv = uinverse(dz, phi);
            auto nz = reduce_at_minus_x(f.num(), phi);
            // product nz * inv mod phi with Poly coefficients
            std::vector<Poly> prod(nz.size() + inv.size(), Poly());
            for (size_t a = 0; a < nz.size(); ++a)
                for (size_t b = 0; b < inv.size(); ++b) prod[a + b] += nz[a] * Poly(inv[b]);
            const size_t dd = phi.size() - 1;
            for (size_t k = prod.size(); k-- > dd;) {
                if (prod[k].is_zero()) continue;
                Poly lead = prod[k];
                for (size_t t = 0; t <= dd; ++t) prod[k - dd + t] -= lead * Poly(phi[t]);
            }
            for (size_t k = 1; k < std::min(prod.size(), dd); ++k)
                if (!prod[k].is_zero()) throw Error("residue is not rational");
            R(i, j) = RatFunc(prod[0]);
        }
    return R;
}

OperatorMatrix residue_at_infinity(int n) {
    OperatorMatrix M = build_MD(n);
    OperatorMatrix W = M.substitute(Var::q, RatFunc::variable(Var::q).inverse());
    OperatorMatrix R = W.substitute(Var::q, Rational(0));
    for (int i = 0; i < R.dim(); ++i)
        for (int j = 0; j < R.dim(); ++j) R(i, j) = -R(i, j);
    return R;
}

CheckReport check_residues(int n) {
    for (const auto& z : singular_points(n).roots) {
        if (!(residue_exact(n, z) == residue_at_root(n, z)))
            return fail("root r=" + z.r.get_str());
    }
    return {};
}

CheckReport check_residue_sum(int n) {
    OperatorMatrix S = build_M0(n);
    for (const auto& z : singular_points(n).roots) {
        OperatorMatrix R = residue_exact(n, z);
        S.m = S.m + R.m;
    }
    S.m = S.m + residue_at_infinity(n).m;
    for (int i = 0; i < S.dim(); ++i)
        for (int j = 0; j < S.dim(); ++j)
            if (!S(i, j).is_zero()) return fail("nonzero sum at (" + S.basis[i].str() + "," + S.basis[j].str() + ")");
    return {};
}

CheckReport check_M0_spectrum(int n) {
    OperatorMatrix M0 = build_M0(n);
    for (const auto& lam : M0.basis) {
        RatFunc c = content_sum(lam);
        Matrix<Poly> A(M0.dim(), M0.dim());
        for (int i = 0; i < M0.dim(); ++i)
            for (int j = 0; j < M0.dim(); ++j) {
                RatFunc e = M0(i, j) + (i == j ? c : RatFunc());
                A(i, j) = e.num();
            }
        if (!det_bareiss(A).is_zero()) return fail("det(M0 + c) != 0 for " + lam.str());
    }
    return {};
}

} // namespace qde
