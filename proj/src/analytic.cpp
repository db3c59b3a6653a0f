#include "qde/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "qde/error.hpp"
#include "qde/operator.hpp"
#include "qde/series.hpp"
#include "qde/symfunc.hpp"

namespace qde {

Complex evaluate(const RatFunc& f, const std::vector<std::pair<Var, Complex>>& point, mpfr_prec_t prec) {
    auto eval_poly = [&](const Poly& p) {
        Complex s(prec);
        for (const auto& [m, c] : p.terms()) {
            Complex term(c, prec);
            int used = 0;
            for (const auto& [v, x] : point) {
                int e = m.exponent(v);
                if (e == 0) continue;
                used += e;
                term *= pow(x, e);
            }
            if (used != m.degree()) throw Error("unbound variable in " + p.str());
            s += term;
        }
        return s;
    };
    Complex d = eval_poly(f.den());
    if (d.is_zero()) throw PoleAtPoint("denominator vanishes at the evaluation point");
    return eval_poly(f.num()) / d;
}

namespace {

Complex cx(const Rational& r, mpfr_prec_t p) { return Complex(r, p); }

Real min_real(const Real& a, const Real& b) { return a < b ? a : b; }

Rational at(const RatFunc& f, const Params& t) { return f.evaluate({{Var::t1, t.t1}, {Var::t2, t.t2}}); }

const OperatorMatrix& md_cached(int n) {
    static std::mutex mu;
    static std::map<int, OperatorMatrix> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_MD(n)).first;
    return it->second;
}

using PointSeries = std::vector<std::vector<Rational>>;

const PointSeries& frobenius_cached(const Partition& lambda, int N, const Params& t) {
    static std::mutex mu;
    static std::map<std::string, PointSeries> cache;
    std::string key = lambda.str() + "|" + std::to_string(N) + "|" + to_string(t.t1) + "|" + to_string(t.t2);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    PointSeries s = frobenius_point(lambda, N, t.t1, t.t2);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(s)).first->second;
}

// Coefficients of p(c + h) in h.
std::vector<Complex> taylor_shift(const std::vector<Complex>& a, const Complex& c) {
    std::vector<Complex> b = a;
    const int m = int(b.size()) - 1;
    for (int i = 0; i < m; ++i)
        for (int j = m - 1; j >= i; --j) b[j] += c * b[j + 1];
    return b;
}

std::vector<Complex> to_coefficients(const Poly& p, mpfr_prec_t prec) {
    std::vector<Complex> r;
    for (const Poly& c : p.coefficients(Var::q)) r.push_back(cx(c.is_zero() ? Rational(0) : c.constant_value(), prec));
    if (r.empty()) r.push_back(Complex(prec));
    return r;
}

int taylor_order(const NumericConfig& cfg) {
    if (cfg.taylor_order > 0) return cfg.taylor_order;
    int k = int(std::ceil(cfg.tolerance_bits() * std::log(2.0) / 2));
    return std::clamp(k, 16, 32);
}

Real dist_to_segment(const Complex& s, const Complex& a, const Complex& b) {
    Complex ab = b - a;
    Real len2 = norm(ab);
    if (len2.is_zero()) return abs(s - a);
    Complex as = s - a;
    Real u = (as.re * ab.re + as.im * ab.im) / len2;
    if (u.sign() < 0) return abs(s - a);
    if (u > Real(1, u.prec())) return abs(s - b);
    return abs(s - (a + ab * u));
}

} // namespace

std::vector<Complex> finite_singularities(int n, mpfr_prec_t prec) {
    std::vector<Complex> s{Complex(prec)};
    if (n < 1) return s;
    for (const auto& r : singular_points(n).roots) {
        Complex z = exp(Complex::two_pi_i(prec) * Complex(r.r, prec));
        s.push_back(-z);
    }
    return s;
}

PathSpec PathSpec::reversed() const {
    PathSpec p = *this;
    std::reverse(p.points.begin(), p.points.end());
    return p;
}

PathSpec PathSpec::then(const PathSpec& o) const {
    PathSpec p = *this;
    for (size_t i = 1; i < o.points.size(); ++i) p.points.push_back(o.points[i]);
    return p;
}

void PathSpec::validate(int n) const {
    if (points.empty()) throw Error("empty path");
    const mpfr_prec_t prec = points[0].prec();
    Real clear(64);
    mpfr_set_d(clear.get(), clearance, MPFR_RNDN);
    for (const auto& s : finite_singularities(n, prec)) {
        for (size_t i = 0; i + 1 < points.size(); ++i)
            if (dist_to_segment(s, points[i], points[i + 1]) < clear)
                throw SingularityTooClose("path passes within " + std::to_string(clearance) + " of " + s.str(6));
        if (points.size() == 1 && abs(points[0] - s) < clear) throw SingularityTooClose("path starts at a singular point");
    }
}

Complex PathSpec::log_change() const {
    const mpfr_prec_t prec = points.empty() ? 64 : points[0].prec();
    Complex s(prec);
    for (size_t i = 0; i + 1 < points.size(); ++i) s += log(points[i + 1] / points[i]);
    return s;
}

NumericQDE::NumericQDE(int n, const Params& t, mpfr_prec_t prec) : n_(n), prec_(prec) {
    const OperatorMatrix& md = md_cached(n);
    d_ = md.dim();
    e_.resize(size_t(d_) * d_);
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) {
            RatFunc f = md(i, j).substitute(Var::t1, t.t1).substitute(Var::t2, t.t2);
            Entry& e = e_[size_t(i) * d_ + j];
            e.zero = f.is_zero();
            if (e.zero) continue;
            e.num = to_coefficients(f.num(), prec);
            e.den = to_coefficients(f.den(), prec);
        }
    sing_ = finite_singularities(n, prec);
}

Real NumericQDE::distance_to_singularity(const Complex& q) const {
    Real best = abs(q - sing_[0]);
    for (size_t i = 1; i < sing_.size(); ++i) best = min_real(best, abs(q - sing_[i]));
    return best;
}

NumMatrix NumericQDE::M_D(const Complex& q) const {
    NumMatrix m(d_, d_, prec_);
    auto horner = [&](const std::vector<Complex>& c) {
        Complex s = c.back();
        for (int k = int(c.size()) - 2; k >= 0; --k) s = s * q + c[k];
        return s;
    };
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) {
            const Entry& e = at(i, j);
            if (!e.zero) m(i, j) = horner(e.num) / horner(e.den);
        }
    return m;
}

std::vector<NumMatrix> NumericQDE::taylor(const Complex& c, int K) const {
    std::vector<NumMatrix> F(K + 1, NumMatrix(d_, d_, prec_));
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) {
            const Entry& e = at(i, j);
            if (e.zero) continue;
            std::vector<Complex> num = taylor_shift(e.num, c);
            std::vector<Complex> den0 = taylor_shift(e.den, c);
            // multiply by (c + h)
            std::vector<Complex> den(den0.size() + 1, Complex(prec_));
            for (size_t k = 0; k < den0.size(); ++k) {
                den[k] += den0[k] * c;
                den[k + 1] += den0[k];
            }
            if (den[0].is_zero()) throw PoleAtCenter("expansion center is a pole of M_D/q");
            Complex inv0 = Complex(1, prec_) / den[0];
            std::vector<Complex> f(K + 1, Complex(prec_));
            for (int k = 0; k <= K; ++k) {
                Complex s = k < int(num.size()) ? num[k] : Complex(prec_);
                for (int m = 1; m <= k && m < int(den.size()); ++m) s -= den[m] * f[k - m];
                f[k] = s * inv0;
                F[k](i, j) = f[k];
            }
        }
    return F;
}

std::vector<Complex> NumericQDE::trace_taylor(const Complex& c, int K) const {
    std::vector<NumMatrix> F = taylor(c, K);
    std::vector<Complex> t;
    for (const auto& m : F) t.push_back(m.trace());
    return t;
}

TransportResult transport(const NumericQDE& qde, const PathSpec& path, const NumMatrix& initial,
                          const NumericConfig& cfg) {
    path.validate(qde.energy());
    const mpfr_prec_t prec = cfg.prec;
    const int K = taylor_order(cfg);
    const double T = cfg.tolerance_bits();
    const int d = qde.dim(), m = initial.cols();
    TransportResult res{initial, Complex(prec), 0};
    NumMatrix& X = res.value;
    Real t(prec), u(prec);
    for (size_t seg = 0; seg + 1 < path.points.size(); ++seg) {
        Complex pos = path.points[seg];
        const Complex& end = path.points[seg + 1];
        const double seg_log2 = abs(end - pos).log2_abs();
        while (true) {
            Complex rem = end - pos;
            if (rem.is_zero()) break;
            Real rem_abs = abs(rem);
            Real R = qde.distance_to_singularity(pos);
            if (R.is_zero()) throw SingularityTooClose("transport reached a singular point");
            std::vector<NumMatrix> F = qde.taylor(pos, K);
            std::vector<NumMatrix> P(K + 1, NumMatrix(d, m, prec));
            P[0] = X;
            for (int j = 0; j < K; ++j) {
                NumMatrix& next = P[j + 1];
                for (int i = 0; i <= j; ++i) {
                    const NumMatrix& f = F[i];
                    const NumMatrix& p = P[j - i];
                    for (int r = 0; r < d; ++r)
                        for (int k = 0; k < d; ++k) {
                            if (f(r, k).is_zero()) continue;
                            for (int c = 0; c < m; ++c) fma(next(r, c), f(r, k), p(k, c), t, u);
                        }
                }
                next *= Complex(Rational(1, j + 1), prec);
            }
            double l0 = P[0].max_abs().log2_abs();
            double lh = std::min(rem_abs.log2_abs(), R.log2_abs() - 1);
            for (int j = K - 1; j <= K; ++j) {
                double lj = P[j].max_abs().log2_abs();
                if (std::isfinite(lj)) lh = std::min(lh, (l0 - T - lj) / j);
            }
            if (lh < seg_log2 - 60) throw StepUnderflow("Taylor step underflow near " + pos.str(8));
            Complex h = rem;
            bool last = lh >= rem_abs.log2_abs();
            if (!last) {
                Real scale(prec);
                mpfr_set_d(scale.get(), std::exp2(lh), MPFR_RNDN);
                h = rem * (scale / rem_abs);
            }
            NumMatrix Y = P[K];
            for (int j = K - 1; j >= 0; --j) {
                Y *= h;
                Y += P[j];
            }
            X = std::move(Y);
            std::vector<Complex> tr;
            for (int j = 0; j < K; ++j) tr.push_back(F[j].trace());
            Complex hp = h;
            for (int j = 0; j < K; ++j) {
                res.log_det_change += tr[j] * hp * Complex(Rational(1, j + 1), prec);
                hp *= h;
            }
            ++res.steps;
            if (last) break;
            pos += h;
        }
    }
    return res;
}

NumMatrix transport(int n, const Params& t, const PathSpec& path, const NumMatrix& initial,
                    const NumericConfig& cfg) {
    NumericQDE qde(n, t, cfg.prec);
    return transport(qde, path, initial, cfg).value;
}

TransportResult fundamental_Phi(int n, const Params& t, const PathSpec& path, const NumericConfig& cfg) {
    NumericQDE qde(n, t, cfg.prec);
    return transport(qde, path, NumMatrix::identity(qde.dim(), cfg.prec), cfg);
}

NumMatrix fundamental_Phi(int n, const Params& t, const Complex& q_end, const NumericConfig& cfg) {
    return fundamental_Phi(n, t, PathSpec::segment(Complex(-1, cfg.prec), q_end), cfg).value;
}

Rational series_matching_point(int n, const Params& t, const NumericConfig& cfg) {
    const int N = cfg.series_order;
    const double T = cfg.tolerance_bits();
    double worst = -INFINITY; // max over lambda of log2 |u_N| / |u_0| and the same for N - 1
    std::vector<std::pair<int, double>> tail;
    for (const auto& lambda : partitions(n)) {
        const PointSeries& u = frobenius_cached(lambda, N, t);
        auto lnorm = [&](int k) {
            double b = -INFINITY;
            for (const auto& x : u[k])
                if (x != 0) b = std::max(b, Real(x, 64).log2_abs());
            return b;
        };
        double l0 = lnorm(0);
        for (int k = std::max(1, N - 1); k <= N; ++k) tail.emplace_back(k, lnorm(k) - l0);
    }
    int e = 1;
    for (; e < 200; ++e) {
        worst = -INFINITY;
        for (const auto& [k, l] : tail) worst = std::max(worst, l - double(k * e));
        if (worst <= -T - 8) break;
    }
    Rational q = 1;
    mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return -q;
}

NumMatrix Y_series(int n, const Params& t, const Complex& q, const NumericConfig& cfg, NumMatrix* q_dY) {
    const auto basis = partitions(n);
    const int d = int(basis.size());
    const mpfr_prec_t p = cfg.prec;
    NumMatrix Y(d, d, p);
    if (q_dY) *q_dY = NumMatrix(d, d, p);
    for (int col = 0; col < d; ++col) {
        const PointSeries& u = frobenius_cached(basis[col], cfg.series_order, t);
        for (int k = int(u.size()) - 1; k >= 0; --k)
            for (int i = 0; i < d; ++i) Y(i, col) = Y(i, col) * q + cx(u[k][i], p);
        if (q_dY) {
            for (int k = int(u.size()) - 1; k >= 1; --k)
                for (int i = 0; i < d; ++i) (*q_dY)(i, col) = (*q_dY)(i, col) * q + cx(u[k][i] * k, p);
            for (int i = 0; i < d; ++i) (*q_dY)(i, col) *= q;
        }
    }
    return Y;
}

NumMatrix Y_at(int n, const Params& t, const Complex& q0, const NumericConfig& cfg, const std::vector<Complex>& waypoints) {
    const mpfr_prec_t p = cfg.prec;
    Complex qs = cx(series_matching_point(n, t, cfg), p);
    PathSpec path{{qs}};
    for (const auto& w : waypoints) path.points.push_back(w);
    path.points.push_back(q0);
    NumMatrix Ys = Y_series(n, t, qs, cfg);
    NumMatrix X = transport(n, t, path, Ys, cfg);
    Complex dl = path.log_change();
    const auto basis = partitions(n);
    for (int col = 0; col < int(basis.size()); ++col) {
        Complex f = exp(cx(at(content_sum(basis[col]), t), p) * dl);
        for (int i = 0; i < X.rows(); ++i) X(i, col) *= f;
    }
    return X;
}

namespace {

// exp(t x log x) / Gamma(t x)
Complex g_factor(int x, const Rational& t, mpfr_prec_t p) {
    Complex tx = cx(t * x, p);
    Real lx = log(Real(x, p));
    return exp(tx * lx) / gamma(tx);
}

Complex tangent_gamma_product(const Partition& lambda, const Params& t, mpfr_prec_t p) {
    Complex prod(1, p);
    for (const auto& w : tangent_weights(lambda)) prod *= gamma(cx(at(w, t) + 1, p));
    return prod;
}

} // namespace

NumMatrix gw_gluing(int n, const Params& t, mpfr_prec_t prec) {
    std::vector<Complex> d;
    for (const auto& mu : partitions(n)) {
        Complex v(1, prec);
        for (int x : mu.parts()) v *= g_factor(x, t.t1, prec) * g_factor(x, t.t2, prec);
        d.push_back(v);
    }
    return NumMatrix::diagonal(d);
}

NumMatrix gamma_op(int n, const Params& t, mpfr_prec_t prec) {
    NumMatrix g = gw_gluing(n, t, prec);
    const auto basis = partitions(n);
    Complex tpi = Complex::two_pi_i(prec);
    for (int i = 0; i < int(basis.size()); ++i) {
        long prod = 1;
        for (int x : basis[i].parts()) prod *= x;
        g(i, i) *= pow(tpi, long(basis[i].length())) * Complex(Rational(1, prod), prec);
    }
    return g;
}

NumMatrix dt_gluing(int n, const Params& t, const Complex& log_q, mpfr_prec_t prec) {
    std::vector<Complex> d;
    for (const auto& lambda : partitions(n)) {
        Complex c = cx(at(content_sum(lambda), t), prec);
        d.push_back(exp(-(c * log_q)) / tangent_gamma_product(lambda, t, prec));
    }
    return NumMatrix::diagonal(d);
}

NumMatrix dt_gluing_at_minus_one(int n, const Params& t, LogBranch branch, mpfr_prec_t prec) {
    Complex lq(prec);
    if (branch == LogBranch::principal) lq = Complex(Real(prec), Real::pi(prec));
    return dt_gluing(n, t, lq, prec);
}

namespace {

constexpr int kLoopVertices = 64;

// Straight connector from a to b with detours above any singular point closer than `clear`.
std::vector<Complex> connector(const Complex& a, const Complex& b, const std::vector<Complex>& sing,
                               const Complex& skip, const Real& clear) {
    const mpfr_prec_t p = a.prec();
    std::vector<std::pair<Real, Complex>> detours;
    Complex ab = b - a;
    Real len2 = norm(ab);
    for (const auto& s : sing) {
        if (abs(s - skip).log2_abs() < -double(p) / 2) continue;
        if (!(dist_to_segment(s, a, b) < clear)) continue;
        Complex as = s - a;
        Real u = (as.re * ab.re + as.im * ab.im) / len2;
        Real r(Rational(1, 4), p);
        for (const auto& o : sing)
            if (abs(o - s).log2_abs() > -double(p) / 2) r = min_real(r, abs(o - s) * Real(Rational(1, 2), p));
        detours.emplace_back(u, s + Complex(Real(p), r));
    }
    std::sort(detours.begin(), detours.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Complex> pts{a};
    for (auto& d : detours) pts.push_back(d.second);
    pts.push_back(b);
    return pts;
}

Real loop_radius(const std::vector<Complex>& sing, const Complex& zeta) {
    const mpfr_prec_t p = zeta.prec();
    Real r(Rational(1, 2), p);
    bool any = false;
    Real best(p);
    for (const auto& s : sing) {
        Real d = abs(s - zeta);
        if (d.log2_abs() < -double(p) / 2) continue;
        if (!any || d < best) best = d;
        any = true;
    }
    if (any) r = best * Real(Rational(1, 2), p);
    return r;
}

} // namespace

PathSpec loop_path(int n, const Complex& zeta, mpfr_prec_t prec) {
    auto sing = finite_singularities(n, prec);
    Complex base(-1, prec);
    Real r = loop_radius(sing, zeta);
    Complex dir = base - zeta;
    Complex u = dir * (Real(1, prec) / abs(dir));
    Complex entry = zeta + u * r;
    auto conn = connector(base, entry, sing, zeta, Real(Rational(1, 10), prec));
    PathSpec path{conn};
    Complex step = exp(Complex::two_pi_i(prec) * Complex(Rational(1, kLoopVertices), prec));
    Complex w = u;
    for (int k = 1; k <= kLoopVertices; ++k) {
        w *= step;
        path.points.push_back(k == kLoopVertices ? entry : zeta + w * r);
    }
    for (int i = int(conn.size()) - 2; i >= 0; --i) path.points.push_back(conn[i]);
    return path;
}

PathSpec loop_at_infinity(mpfr_prec_t prec) {
    Complex base(-1, prec), far(-2, prec);
    PathSpec path{{base, far}};
    const int M = 2 * kLoopVertices;
    Complex step = exp(-(Complex::two_pi_i(prec) * Complex(Rational(1, M), prec)));
    Complex w = far;
    for (int k = 1; k <= M; ++k) {
        w *= step;
        path.points.push_back(k == M ? far : w);
    }
    path.points.push_back(base);
    return path;
}

std::vector<Complex> generator_order(int n, mpfr_prec_t prec) {
    auto sing = finite_singularities(n, prec);
    Complex base(-1, prec);
    struct Key {
        double angle, dist;
        Complex z;
    };
    std::vector<Key> keys;
    for (const auto& z : sing) {
        PathSpec loop = loop_path(n, z, prec);
        Complex first = loop.points[1] - base;
        keys.push_back({arg(first).to_double(), abs(z - base).to_double(), z});
    }
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        if (std::fabs(a.angle - b.angle) > 1e-12) return a.angle < b.angle;
        return a.dist < b.dist;
    });
    std::vector<Complex> out;
    for (auto& k : keys) out.push_back(k.z);
    return out;
}

NumMatrix monodromy(int n, const Params& t, const PathSpec& loop, const NumericConfig& cfg) {
    NumericQDE qde(n, t, cfg.prec);
    return transport(qde, loop, NumMatrix::identity(qde.dim(), cfg.prec), cfg).value;
}

NumMatrix monodromy(int n, const Params& t, const Complex& zeta, const NumericConfig& cfg) {
    return monodromy(n, t, loop_path(n, zeta, cfg.prec), cfg);
}

NumMatrix gamma_conjugate(int n, const Params& t, const NumMatrix& P) {
    NumMatrix G = gamma_op(n, t, P.prec());
    return inverse(G) * P * G;
}

namespace {

// q^{-(c(t) - c(t'))} prod Gamma(w' + 1) / prod Gamma(w + 1) with t' = t - (a, b).
NumMatrix dt_ratio(long a, long b, int n, const Params& t, const Complex& q, mpfr_prec_t p) {
    Params s = t.shifted(a, b);
    std::vector<Complex> d;
    for (const auto& lambda : partitions(n)) {
        Rational e = at(content_sum(lambda), t) - at(content_sum(lambda), s);
        if (e.get_den() != 1) throw Error("content difference is not integral");
        d.push_back(pow(q, -e.get_num().get_si()) * tangent_gamma_product(lambda, s, p) /
                    tangent_gamma_product(lambda, t, p));
    }
    return NumMatrix::diagonal(d);
}

} // namespace

NumMatrix intertwiner_DT(long a, long b, int n, const Params& t, const Complex& q0, const NumericConfig& cfg) {
    Params s = t.shifted(a, b);
    NumMatrix Yt = Y_at(n, t, q0, cfg), Ys = Y_at(n, s, q0, cfg);
    return Yt * dt_ratio(a, b, n, t, q0, cfg.prec) * inverse(Ys);
}

Intertwiner intertwiner_S(long a, long b, int n, const Params& t, const Complex& q0, const NumericConfig& cfg) {
    Params s = t.shifted(a, b);
    const mpfr_prec_t p = cfg.prec;
    NumMatrix Pt = fundamental_Phi(n, t, q0, cfg), Ps = fundamental_Phi(n, s, q0, cfg);
    NumMatrix gw = Pt * gw_gluing(n, t, p) * inverse(gw_gluing(n, s, p)) * inverse(Ps);
    NumMatrix dt = intertwiner_DT(a, b, n, t, q0, cfg);
    Real diff = relative_error(gw, dt);
    return {std::move(gw), std::move(dt), std::move(diff)};
}

namespace {

// Y at each point, transported successively from the series matching point.
std::vector<NumMatrix> Y_along(int n, const Params& t, const std::vector<Complex>& points, const NumericConfig& cfg) {
    const mpfr_prec_t p = cfg.prec;
    NumericQDE qde(n, t, p);
    Complex pos = cx(series_matching_point(n, t, cfg), p);
    NumMatrix X = Y_series(n, t, pos, cfg);
    Complex logq = log(pos);
    const auto basis = partitions(n);
    std::vector<Complex> c;
    for (const auto& lambda : basis) c.push_back(cx(at(content_sum(lambda), t), p));
    // Psi = Y q^{-c} is what is transported.
    for (size_t col = 0; col < basis.size(); ++col) {
        Complex f = exp(-(c[col] * logq));
        for (int i = 0; i < X.rows(); ++i) X(i, col) *= f;
    }
    std::vector<NumMatrix> out;
    for (const auto& q : points) {
        PathSpec seg = PathSpec::segment(pos, q);
        X = transport(qde, seg, X, cfg).value;
        logq += seg.log_change();
        pos = q;
        NumMatrix Y = X;
        for (size_t col = 0; col < basis.size(); ++col) {
            Complex f = exp(c[col] * logq);
            for (int i = 0; i < Y.rows(); ++i) Y(i, col) *= f;
        }
        out.push_back(std::move(Y));
    }
    return out;
}

} // namespace

LaurentFit laurent_fit(long a, long b, int n, const Params& t, int degree, const NumericConfig& cfg, int samples,
                       const Rational& radius) {
    const mpfr_prec_t p = cfg.prec;
    Params s = t.shifted(a, b);
    std::vector<Complex> pts;
    Complex root = exp(Complex::two_pi_i(p) * Complex(Rational(1, samples), p));
    Complex start = -cx(radius, p); // angle pi
    Complex w = start;
    for (int j = 0; j < samples; ++j) {
        pts.push_back(w);
        w *= root;
    }
    auto Yt = Y_along(n, t, pts, cfg), Ys = Y_along(n, s, pts, cfg);
    std::vector<NumMatrix> S;
    Real scale(p);
    for (int j = 0; j < samples; ++j) {
        S.push_back(Yt[j] * dt_ratio(a, b, n, t, pts[j], p) * inverse(Ys[j]));
        scale = max(scale, S.back().max_abs());
    }
    LaurentFit fit;
    fit.low = -degree;
    fit.high = degree;
    const int d = S[0].rows();
    for (int k = fit.low; k <= fit.high; ++k) {
        NumMatrix C(d, d, p);
        for (int j = 0; j < samples; ++j) C += S[j] * pow(pts[j], -k);
        C *= Complex(Rational(1, samples), p);
        fit.coefficients.push_back(std::move(C));
    }
    Real worst(p);
    for (int j = 0; j < samples; ++j) {
        NumMatrix F(d, d, p);
        for (int k = fit.low; k <= fit.high; ++k) F += fit.coefficients[k - fit.low] * pow(pts[j], k);
        worst = max(worst, (F - S[j]).max_abs());
    }
    fit.residual = scale.is_zero() ? worst : worst / scale;
    return fit;
}

NumMatrix haiman_numeric(int n, const Params& t, mpfr_prec_t prec) {
    Matrix<RatFunc> H = haiman_matrix(n);
    Complex tpi = Complex::two_pi_i(prec);
    Complex T1 = exp(tpi * cx(t.t1, prec)), T2 = exp(tpi * cx(t.t2, prec));
    const int d = int(H.rows());
    NumMatrix m(d, d, prec);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = evaluate(H(i, j), {{Var::T1, T1}, {Var::T2, T2}}, prec);
    return m;
}

NumMatrix O_line(int n, const Params& t, const Rational& a, mpfr_prec_t prec) {
    NumMatrix H = haiman_numeric(n, t, prec);
    std::vector<Complex> d;
    Complex tpi = Complex::two_pi_i(prec);
    for (const auto& lambda : partitions(n)) d.push_back(exp(-(tpi * cx(a * at(content_sum(lambda), t), prec))));
    return H * NumMatrix::diagonal(d) * inverse(H);
}

ConnectReport verify_connect(int n, const Params& t, const NumericConfig& cfg, LogBranch branch) {
    const mpfr_prec_t p = cfg.prec;
    NumMatrix Y = Y_at(n, t, Complex(-1, p), cfg);
    NumMatrix lhs = inverse(gamma_op(n, t, p)) * Y * dt_gluing_at_minus_one(n, t, branch, p);
    NumMatrix H = haiman_numeric(n, t, p);
    std::vector<Complex> d;
    Complex scale = Complex(1, p) / pow(Complex::two_pi_i(p), long(n));
    for (const auto& lambda : partitions(n))
        d.push_back(scale * expi_pi(-cx(at(content_sum(lambda), t), p)));
    NumMatrix rhs = H * NumMatrix::diagonal(d);
    Real err = relative_error(lhs, rhs);
    return {std::move(lhs), std::move(rhs), std::move(err)};
}

Genericity genericity(int n, const Params& t, Context context) {
    Genericity g;
    auto exclude = [&](const std::string& why) {
        g.ok = false;
        g.description = why;
        return g;
    };
    auto resonant = [&]() -> std::string {
        const auto basis = partitions(n);
        for (const auto& a : basis)
            for (const auto& b : basis) {
                if (a == b) continue;
                Rational d = at(content_sum(a), t) - at(content_sum(b), t);
                if (d.get_den() == 1 && d != 0)
                    return "c(" + a.str() + ") - c(" + b.str() + ") = " + to_string(d) + " is an integer";
                if (d == 0) return "c(" + a.str() + ") = c(" + b.str() + ")";
            }
        return "";
    };
    switch (context) {
    case Context::Tmonodr:
        for (int s = 1; s <= n; ++s)
            for (int r = 1; r <= s; ++r)
                if (t.t2 == frac(r, s)) return exclude("t2 = " + to_string(frac(r, s)) + " with 0 < r <= s <= n");
        return g;
    case Context::semisimple: {
        Rational l = t.t1 + t.t2;
        if (l.get_den() != 1) return exclude("level t1 + t2 = " + to_string(l) + " is not an integer");
        long lv = l.get_num().get_si();
        for (long s = 1; s <= n; ++s) {
            Rational r = t.t1 * s;
            if (r.get_den() != 1) continue;
            long rv = r.get_num().get_si();
            bool in = lv > 0 ? (rv >= 1 && rv <= lv * s - 1) : (rv >= lv * s && rv <= 0);
            if (in) return exclude("t1 = " + to_string(t.t1) + " = r/s with s = " + std::to_string(s) + " in the excluded range");
        }
        return g;
    }
    case Context::connect: {
        if (t.t1 <= 0 || t.t2 <= 0) return exclude("Re t1 and Re t2 must be positive");
        if (Rational(t.t1 + t.t2).get_den() == 1) return exclude("t1 + t2 is an integer");
        std::string r = resonant();
        if (!r.empty()) return exclude(r);
        for (const auto& lambda : partitions(n))
            for (const auto& w : tangent_weights(lambda)) {
                Rational v = at(w, t) + 1;
                if (v.get_den() == 1 && v <= 0) return exclude("Gamma pole at a tangent weight of " + lambda.str());
            }
        return g;
    }
    case Context::resonance: {
        std::string r = resonant();
        if (!r.empty()) return exclude(r);
        return g;
    }
    }
    return g;
}

std::vector<Complex> herm_gram(int n, const Params& t, mpfr_prec_t prec) {
    std::vector<Complex> d;
    Real pi = Real::pi(prec);
    for (const auto& mu : partitions(n)) {
        Real v = Real(1, prec) / Real(Rational(zee(mu)), prec);
        for (int x : mu.parts()) {
            Real a = sin(pi * Real(t.t1 * x, prec)), b = sin(pi * Real(t.t2 * x, prec));
            v *= Real(-4, prec) * a * b; // (2i sin)(2i sin)
        }
        d.push_back(Complex(v));
    }
    return d;
}

TpolynomReport verify_Tpolynom(int n, const Params& t, const NumericConfig& cfg) {
    const mpfr_prec_t p = cfg.prec;
    TpolynomReport rep{Real(p), Real(p), {}};
    Params t1 = {t.t1 + 1, t.t2};
    NumMatrix K = NumMatrix::diagonal(herm_gram(n, t, p));
    Real kscale = K.max_abs();
    for (const auto& z : generator_order(n, p)) {
        NumMatrix A = gamma_conjugate(n, t, monodromy(n, t, z, cfg));
        NumMatrix B = gamma_conjugate(n, t1, monodromy(n, t1, z, cfg));
        rep.periodicity = max(rep.periodicity, relative_error(B, A));
        NumMatrix U = A.adjoint() * K * A;
        rep.unitarity = max(rep.unitarity, (U - K).max_abs() / kscale);
        rep.generators.push_back(std::move(A));
    }
    return rep;
}

Real commutator_defect(int n, const Params& t, const NumericConfig& cfg) {
    const mpfr_prec_t p = cfg.prec;
    std::vector<NumMatrix> P;
    for (const auto& z : generator_order(n, p)) P.push_back(monodromy(n, t, z, cfg));
    Real worst(p);
    for (size_t i = 0; i < P.size(); ++i)
        for (size_t j = i + 1; j < P.size(); ++j) {
            Real c = (P[i] * P[j] - P[j] * P[i]).max_abs() / (P[i].max_abs() * P[j].max_abs());
            worst = max(worst, c);
        }
    return worst;
}

TmonodrReport verify_Tmonodr(int n, const Params& t, const NumericConfig& cfg) {
    Genericity g = genericity(n, t, Context::Tmonodr);
    if (!g.ok) throw ExcludedParameter(g.description);
    const mpfr_prec_t p = cfg.prec;
    Params s = t.shifted(0, 1);
    NumMatrix S = gw_gluing(n, t, p) * inverse(gw_gluing(n, s, p));
    NumMatrix Si = inverse(S);
    TmonodrReport rep{Real(p)};
    for (const auto& z : generator_order(n, p)) {
        NumMatrix Pt = monodromy(n, t, z, cfg), Ps = monodromy(n, s, z, cfg);
        rep.error = max(rep.error, relative_error(Si * Pt * S, Ps));
    }
    return rep;
}

ScatteringReport scattering(int n, const Params& t, const NumericConfig& cfg) {
    const mpfr_prec_t p = cfg.prec;
    const auto basis = partitions(n);
    const int d = int(basis.size());
    std::vector<Complex> e;
    for (const auto& mu : basis) e.push_back(Complex(mu.length() % 2 ? -1 : 1, p));
    NumMatrix E = NumMatrix::diagonal(e);
    NumMatrix H = haiman_numeric(n, t, p);
    ScatteringReport rep{inverse(H) * E * H, Real(p), Real(p)};
    Real big = rep.involution.max_abs();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (basis[i] != basis[j].transpose()) rep.off_pattern = max(rep.off_pattern, abs(rep.involution(i, j)));
    rep.off_pattern /= big;

    // Psi(q) = E Y(w) w^{-c}, w = 1/q:  q Psi' = -E (w Y'(w) - Y(w) C) w^{-c} must equal M_D(q) Psi.
    Complex w = cx(series_matching_point(n, t, cfg), p) * exp(Complex::i(p) * Complex(Rational(7, 10), p));
    NumMatrix wdY;
    NumMatrix Y = Y_series(n, t, w, cfg, &wdY);
    std::vector<Complex> c;
    for (const auto& lambda : basis) c.push_back(cx(at(content_sum(lambda), t), p));
    NumMatrix lhs = E * (Y * NumMatrix::diagonal(c) - wdY);
    NumMatrix rhs = NumericQDE(n, t, p).M_D(Complex(1, p) / w) * E * Y;
    rep.residual = relative_error(lhs, rhs);
    return rep;
}

} // namespace qde
