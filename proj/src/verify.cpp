#include "qde/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "qde/operator.hpp"
#include "qde/partition.hpp"
#include "qde/series.hpp"
#include "qde/symfunc.hpp"

namespace qde {

namespace {

struct Run {
    CriterionResult& r;
    std::ostringstream detail;

    void fail(const std::string& what) {
        if (r.ok) r.detail = "first failure: " + what;
        r.ok = false;
    }
    void require(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }
    void bound(const std::string& name, const Real& value, double tol) {
        double v = value.to_double();
        r.errors.emplace_back(name, v);
        require(v <= tol, name + " " + sci(value) + " > " + sci(tol));
    }
    static std::string sci(double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2e", x);
        return buf;
    }
    static std::string sci(const Real& x) { return sci(x.to_double()); }
};

Params point(const char* t1, const char* t2) { return {parse_rational(t1), parse_rational(t2)}; }

std::string str(const Params& t) { return "(" + to_string(t.t1) + ", " + to_string(t.t2) + ")"; }

std::vector<Complex> q0_eigenvalues(int n, const Params& t, mpfr_prec_t p) {
    std::vector<Complex> e;
    for (const auto& lambda : partitions(n))
        e.push_back(exp(-(Complex::two_pi_i(p) * Complex(content_sum(lambda, t.t1, t.t2), p))));
    return e;
}

void golden(Run& run, int) {
    const char* ref[3][3] = {
        {"3*(t1+t2)*(q^2-1)/(q^2-q+1)", "-3", "0"},
        {"2*t1*t2", "(t1+t2)*(q+1)/(q-1)", "-1"},
        {"0", "3*t1*t2", "0"},
    };
    OperatorMatrix M = build_MD(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            run.require(M(i, j) == RatFunc::parse(ref[i][j]),
                        "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + M(i, j).str());
    run.detail << "build_MD(3) equals the reference matrix";
}

void skew_inversion(Run& run, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        CheckReport s = check_skew(n), v = check_inversion(n);
        run.require(s.ok, "skew n=" + std::to_string(n) + ": " + s.failure);
        run.require(v.ok, "inversion n=" + std::to_string(n) + ": " + v.failure);
    }
    run.detail << "exact for n <= " << n_max;
}

void mdcs(Run& run, int n_max) {
    run.detail << "exact for n <= " << n_max << "; additive shift";
    for (int n = 1; n <= n_max; ++n) {
        MDCSReport r = check_MDCS(n);
        run.require(r.ok, "n=" + std::to_string(n) + ": " + r.failure);
        run.detail << " n=" << n << ":" << r.shift.str();
    }
}

void residues(Run& run, int n_max) {
    int roots = 0;
    for (int n = 1; n <= n_max; ++n) {
        CheckReport r = check_residues(n), s = check_residue_sum(n);
        run.require(r.ok, "n=" + std::to_string(n) + ": " + r.failure);
        run.require(s.ok, "residue sum n=" + std::to_string(n) + ": " + s.failure);
        roots += int(singular_points(n).roots.size());
    }
    run.detail << roots << " (n, zeta) pairs, n <= " << n_max;
}

void jack_suite(Run& run, int n_max) {
    int count = 0;
    for (int n = 1; n <= n_max; ++n) {
        long nf = 1;
        for (int i = 2; i <= n; ++i) nf *= i;
        RatFunc expected = RatFunc(nf) * RatFunc::parse("t1*t2").pow(n);
        Partition ones(std::vector<int>(size_t(n), 1));
        for (const auto& lambda : partitions(n)) {
            const std::string tag = " lambda=" + lambda.str() + ": ";
            CheckReport r = check_jack_eigen(lambda);
            run.require(r.ok, "eigen" + tag + r.failure);
            r = check_jack_norm(lambda);
            run.require(r.ok, "norm" + tag + r.failure);
            r = check_jack_symmetry(lambda);
            run.require(r.ok, "symmetry" + tag + r.failure);
            r = degree_structure_check(lambda);
            run.require(r.ok, "degree" + tag + r.failure);
            run.require(jack(lambda).vector.coefficient(ones) == expected, "normalization" + tag);
            ++count;
        }
        CheckReport r = check_jack_orthogonality(n);
        run.require(r.ok, "orthogonality n=" + std::to_string(n) + ": " + r.failure);
    }
    run.detail << count << " partitions, n <= " << n_max;
}

void frobenius_suite(Run& run, int n_max) {
    const int N = 30, Northo = 10;
    int pairs = 0;
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& lambda : partitions(n)) {
            ResidualReport r = check_ode_residual(frobenius(lambda, N));
            run.require(r.ok && r.verified >= N, "residual lambda=" + lambda.str() + ": " + r.failure);
        }
        std::vector<std::pair<Partition, SeriesSolution>> sol;
        for (const auto& lambda : partitions(n)) sol.emplace_back(lambda, frobenius(lambda, Northo));
        for (const auto& a : sol)
            for (const auto& b : sol) {
                ResidualReport r = check_orthogonality(a.second, b.second);
                run.require(r.ok && r.verified >= Northo,
                            "orthogonality " + a.first.str() + " | " + b.first.str() + ": " + r.failure);
                ++pairs;
            }
    }
    run.detail << "residual to order " << N << ", orthogonality to order " << Northo << " for " << pairs
               << " ordered pairs, n <= " << n_max;
}

void level_suite(Run& run, int n_max) {
    run.detail << "level 1, last nonzero order:";
    for (int n = 1; n <= n_max; ++n)
        for (const auto& lambda : partitions(n)) {
            LevelReport r = check_polynomial_level(lambda, 1, 30);
            run.require(r.terminated, "lambda=" + lambda.str() + " does not terminate by order 30");
            run.detail << " " << lambda.str() << ":" << r.degree;
        }
}

void connect_suite(Run& run, int n_max, const NumericConfig& cfg) {
    const mpfr_prec_t P = cfg.prec;
    ConnectReport one = verify_connect(1, point("1/3", "1/5"), cfg);
    Complex expected = Complex(1, P) / Complex::two_pi_i(P);
    run.bound("n=1 vs 1/(2 pi i)", abs(one.lhs(0, 0) - expected) / abs(expected), std::ldexp(1.0, -int(P) + 16));
    for (int n = 2; n <= n_max; ++n)
        for (const Params& t : {point("0.31", "0.47"), point("0.27", "0.56")})
            run.bound("n=" + std::to_string(n) + " " + str(t), verify_connect(n, t, cfg).error, 1e-20);
    run.detail << "q^{-c} at q = -1 taken as (-q)^{-c}, n <= " << n_max;
    if (n_max >= 2) {
        ConnectReport pr = verify_connect(2, point("0.31", "0.47"), cfg, LogBranch::principal);
        run.r.note = "with log(-1) = +i pi the n=2 error at (31/100, 47/100) is " + Run::sci(pr.error);
    }
}

void monodromy_suite(Run& run, int n_max, const NumericConfig& cfg) {
    const mpfr_prec_t P = cfg.prec;
    Params t = point("0.31", "0.47"), level = point("0.31", "0.69");
    Real eig(P), per(P), uni(P), com(P);
    for (int n = 1; n <= n_max; ++n) {
        NumMatrix m0 = monodromy(n, t, Complex(P), cfg);
        eig = max(eig, match_distance(eigenvalues(m0), q0_eigenvalues(n, t, P)));
        if (n == 1) continue;
        TpolynomReport tp = verify_Tpolynom(n, t, cfg);
        per = max(per, tp.periodicity);
        uni = max(uni, tp.unitarity);
        com = max(com, commutator_defect(n, level, cfg));
    }
    run.bound("q=0 eigenvalues", eig, 1e-20);
    run.bound("periodicity", per, 1e-15);
    run.bound("unitarity", uni, 1e-15);
    run.bound("level-1 commutators", com, 1e-15);
    run.detail << "generic t " << str(t) << ", level 1 at " << str(level) << ", n <= " << n_max;
}

void intertwiner_suite(Run& run, int n_max, const NumericConfig& cfg) {
    const mpfr_prec_t P = cfg.prec;
    Params t = point("0.31", "0.47");
    const Complex qs[2] = {Complex(Real(Rational(-1, 2), P)), Complex(Real(Rational(-1, 2), P), Real(Rational(1, 5), P))};
    Real line(P), comp(P), sym(P), fit(P);
    for (int n = 1; n <= n_max; ++n) {
        for (const Complex& q : qs) {
            for (auto [a, b] : {std::pair{1L, 0L}, {0L, 1L}, {1L, 1L}})
                line = max(line, intertwiner_S(a, b, n, t, q, cfg).difference);
            // S(1,1; t) = S(1,0; t) S(0,1; t - (1,0)), one factor from each line
            NumMatrix s10 = intertwiner_S(1, 0, n, t, q, cfg).gw;
            NumMatrix s01 = intertwiner_DT(0, 1, n, t.shifted(1, 0), q, cfg);
            comp = max(comp, relative_error(s10 * s01, intertwiner_S(1, 1, n, t, q, cfg).gw));
            // S(a,b; t1,t2) = S(b,a; t2,t1)
            for (auto [a, b] : {std::pair{1L, 0L}, {1L, 1L}, {2L, -1L}})
                sym = max(sym, relative_error(intertwiner_DT(a, b, n, t, q, cfg),
                                              intertwiner_S(b, a, n, t.swapped(), q, cfg).gw));
        }
        for (auto [a, b] : {std::pair{0L, 0L}, {1L, 0L}, {0L, 1L}, {1L, 1L}, {2L, -1L}})
            fit = max(fit, laurent_fit(a, b, n, t, 4, cfg).residual);
    }
    run.bound("GW vs DT", line, 1e-15);
    run.bound("composition", comp, 1e-15);
    run.bound("swap symmetry", sym, 1e-15);
    run.bound("Laurent fit", fit, 1e-10);
    run.detail << "t = " << str(t) << ", q in {-1/2, -1/2 + i/5}, n <= " << n_max;
}

void scattering_suite(Run& run, int n_max, const NumericConfig& cfg) {
    int n = std::max(1, n_max);
    ScatteringReport r = scattering(n, point("0.31", "0.69"), cfg);
    run.bound("off-pattern", r.off_pattern, 1e-12);
    run.bound("solution residual", r.residual, 1e-20);
    run.detail << "level 1, n = " << n;
}

struct Spec {
    const char* suite;
    const char* title;
    int n_range;
    double budget;
    std::function<void(Run&, int, const NumericConfig&)> body;
};

template <class F> std::function<void(Run&, int, const NumericConfig&)> exact(F f) {
    return [f](Run& run, int n, const NumericConfig&) { f(run, n); };
}

const std::vector<Spec>& specs() {
    static const std::vector<Spec> s = {
        {"exact", "golden matrix build_MD(3)", 3, 1, exact(golden)},
        {"exact", "skew-adjointness and q -> 1/q symmetry", 6, 30, exact(skew_inversion)},
        {"exact", "Calogero-Sutherland relation", 5, 30, exact(mdcs)},
        {"exact", "residues at roots of unity", 5, 30, exact(residues)},
        {"exact", "Jack suite", 6, 120, exact(jack_suite)},
        {"series", "Frobenius residual and orthogonality", 4, 300, exact(frobenius_suite)},
        {"series", "integer-level polynomiality", 3, 120, exact(level_suite)},
        {"analytic", "connection formula", 3, 600, connect_suite},
        {"analytic", "monodromy", 3, 900, monodromy_suite},
        {"analytic", "intertwiners", 2, 900, intertwiner_suite},
        {"analytic", "scattering involution", 2, 300, scattering_suite},
    };
    return s;
}

} // namespace

Suite parse_suite(const std::string& s) {
    if (s == "exact") return Suite::exact;
    if (s == "series") return Suite::series;
    if (s == "analytic") return Suite::analytic;
    if (s == "all") return Suite::all;
    throw std::invalid_argument("unknown suite '" + s + "' (expected exact, series, analytic or all)");
}

std::vector<int> criteria_of(Suite suite) {
    static const char* names[] = {"exact", "series", "analytic"};
    std::vector<int> ids;
    for (size_t i = 0; i < specs().size(); ++i)
        if (suite == Suite::all || specs()[i].suite == std::string(names[int(suite)])) ids.push_back(int(i) + 1);
    return ids;
}

CriterionResult run_criterion(int id, int n_max, const NumericConfig& cfg) {
    if (id < 1 || id > int(specs().size())) throw std::invalid_argument("no criterion " + std::to_string(id));
    const Spec& spec = specs()[size_t(id - 1)];
    CriterionResult r;
    r.id = id;
    r.suite = spec.suite;
    r.title = spec.title;
    r.budget = spec.budget;
    Run run{r, {}};
    int n = id == 1 ? 3 : std::min(spec.n_range, n_max);
    auto t0 = std::chrono::steady_clock::now();
    try {
        spec.body(run, n, cfg);
    } catch (const std::exception& e) {
        run.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.seconds > r.budget) run.fail("took " + std::to_string(r.seconds) + " s, budget " + std::to_string(r.budget) + " s");
    if (r.ok) r.detail = run.detail.str();
    return r;
}

} // namespace qde
