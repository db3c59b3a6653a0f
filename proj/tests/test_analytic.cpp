#include "test_util.hpp"

#include "qde/analytic.hpp"
#include "qde/error.hpp"
#include "qde/partition.hpp"

using namespace qde;

namespace {

constexpr mpfr_prec_t P = 128;

Complex C(const char* re, const char* im = "0", mpfr_prec_t p = P) {
    return Complex(Real(parse_rational(re), p), Real(parse_rational(im), p));
}

Params T(const char* t1, const char* t2) { return {parse_rational(t1), parse_rational(t2)}; }

NumericConfig config(mpfr_prec_t prec = P) {
    NumericConfig c;
    c.prec = prec;
    return c;
}

double err(const Complex& a, const Complex& b) { return abs(a - b).to_double(); }

bool small(const Real& x, double tol) { return x.to_double() <= tol; }

std::vector<Complex> expected_q0_eigenvalues(int n, const Params& t, mpfr_prec_t p) {
    std::vector<Complex> e;
    for (const auto& lambda : partitions(n))
        e.push_back(exp(-(Complex::two_pi_i(p) * Complex(content_sum(lambda, t.t1, t.t2), p))));
    return e;
}

} // namespace

TEST_CASE("gamma function") {
    CHECK(err(gamma(Complex(1, 256)), Complex(1, 256)) < 1e-70);
    CHECK(err(gamma(C("1/2", "0", 256)), Complex(sqrt(Real::pi(256)))) < 1e-70);
    Complex z = C("31/100", "17/100", 256);
    CHECK(err(gamma(z + Complex(1, 256)), z * gamma(z)) < 1e-70);
    // reference values computed independently to 40 digits
    Complex g = gamma(z);
    CHECK(err(g, Complex(Real::parse("2.154744646649979152338832659043430227538", 256),
                         Real::parse("-1.255259326428756310409987448760859007031", 256))) < 1e-38);
    Complex w = C("-27/10", "3/10", 256);
    CHECK(err(gamma(w), Complex(Real::parse("-0.5576942395324058423033161897415965556213", 256),
                                Real::parse("0.07897613819665131298157986115944735680869", 256))) < 1e-38);
    CHECK(err(gamma(C("5")), Complex(24, P)) < 1e-35);
    CHECK_THROWS_AS(gamma(Complex(-3, P)), PoleOfGamma);
    CHECK_THROWS_AS(gamma(Complex(0, P)), PoleOfGamma);
}

TEST_CASE("numeric linear algebra") {
    NumMatrix m(3, 3, P);
    const char* e[3][3] = {{"2", "1", "0"}, {"1", "3", "1"}, {"0", "1", "4"}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = C(e[i][j]);
    CHECK(small((m * inverse(m) - NumMatrix::identity(3, P)).max_abs(), 1e-35));
    CHECK(err(det(m), Complex(18, P)) < 1e-35);
    // triangular: eigenvalues on the diagonal
    NumMatrix u(3, 3, P);
    u(0, 0) = C("1", "1");
    u(0, 1) = C("5");
    u(1, 1) = C("-2");
    u(1, 2) = C("3", "-1");
    u(2, 2) = C("1/3");
    CHECK(small(match_distance(eigenvalues(u), {C("1", "1"), C("-2"), C("1/3")}), 1e-30));
    CHECK_THROWS_AS(inverse(NumMatrix(2, 2, P)), SingularMatrix);
}

TEST_CASE("singular points") {
    auto s = finite_singularities(3, P);
    REQUIRE(s.size() == 4);
    CHECK(s[0].is_zero());
    CHECK(err(s[1], Complex(1, P)) < 1e-35); // -exp(i pi)
    CHECK(finite_singularities(1, P).size() == 1);
    CHECK_THROWS_AS(PathSpec::segment(C("-1"), C("1/2")).validate(2), SingularityTooClose);
    CHECK_NOTHROW(PathSpec::segment(C("-1"), C("-1/2")).validate(3));
}

TEST_CASE("transport") {
    NumericConfig cfg = config();
    Params t = T("0.31", "0.47");
    // n = 1 is the zero equation
    NumMatrix one = fundamental_Phi(1, t, C("1/2", "1/2"), cfg);
    CHECK(err(one(0, 0), Complex(1, P)) < 1e-35);
    CHECK(small((fundamental_Phi(2, t, C("-1"), cfg) - NumMatrix::identity(2, P)).max_abs(), 1e-35));

    PathSpec path{{C("-1"), C("-1/2", "1/3"), C("1/2", "1/3")}};
    for (int n = 2; n <= 3; ++n) {
        TransportResult fwd = fundamental_Phi(n, t, path, cfg);
        NumMatrix back = transport(n, t, path.reversed(), fwd.value, cfg);
        CHECK(small((back - NumMatrix::identity(fwd.value.rows(), P)).max_abs(), 1e-17));
        // Liouville: det Phi = exp(int tr M_D dq/q)
        CHECK(small(abs(det(fwd.value) - exp(fwd.log_det_change)), 1e-17));
    }
    // contractible loop around the regular point -1
    PathSpec loop{{C("-1"), C("-13/10"), C("-1", "3/10"), C("-7/10"), C("-1", "-3/10"), C("-13/10"), C("-1")}};
    NumMatrix m = monodromy(3, t, loop, cfg);
    CHECK(small((m - NumMatrix::identity(3, P)).max_abs(), 1e-17));
}

TEST_CASE("Liouville to 1e-20 at 256 bits") {
    NumericConfig cfg = config(256);
    PathSpec path{{C("-1", "0", 256), C("-1/2", "1/3", 256), C("1/2", "1/3", 256), C("1/2", "-2/3", 256)}};
    TransportResult r = fundamental_Phi(3, T("0.31", "0.47"), path, cfg);
    CHECK(small(abs(det(r.value) - exp(r.log_det_change)), 1e-20));
}

TEST_CASE("unitarity along paths") {
    // Phi(-t)^T K Phi(t) = K with K the Gram matrix of the Hermitian product.
    NumericConfig cfg = config();
    Params t = T("0.31", "0.47"), mt = {-t.t1, -t.t2};
    for (int n = 2; n <= 3; ++n) {
        NumMatrix A = fundamental_Phi(n, t, C("-1/2", "1/5"), cfg);
        NumMatrix B = fundamental_Phi(n, mt, C("-1/2", "1/5"), cfg);
        auto basis = partitions(n);
        NumMatrix K(int(basis.size()), int(basis.size()), P);
        for (int i = 0; i < int(basis.size()); ++i) {
            FockVector v = FockVector::basis(basis[i]);
            K(i, i) = Complex(inner_herm(v, v).evaluate({{Var::t1, t.t1}, {Var::t2, t.t2}}), P);
        }
        CHECK(small(relative_error(B.transpose() * K * A, K), 1e-17));
    }
}

TEST_CASE("Y at points") {
    NumericConfig cfg = config();
    Params t = T("0.31", "0.47");
    NumMatrix y1 = Y_at(1, t, C("-1"), cfg);
    CHECK(err(y1(0, 0), Complex(t.t1 * t.t2, P)) < 1e-35);
    // transported values agree with the series inside its disc
    NumericConfig longer = cfg;
    longer.series_order = 60;
    for (int n = 2; n <= 3; ++n) {
        NumMatrix a = Y_at(n, t, C("-1/4"), cfg);
        NumMatrix b = Y_series(n, t, C("-1/4"), longer);
        CHECK(small(relative_error(a, b), 1e-17));
        NumMatrix c = Y_at(n, t, C("-1/5", "1/5"), cfg);
        NumMatrix d = Y_series(n, t, C("-1/5", "1/5"), longer);
        CHECK(small(relative_error(c, d), 1e-17));
    }
    CHECK(series_matching_point(2, t, cfg) < 0);
    CHECK_THROWS_AS(Y_at(2, T("1/2", "-1/2"), C("-1"), cfg), ResonanceAtSpecializedParameters);
}

TEST_CASE("gluing matrices") {
    Params t = T("0.31", "0.47");
    Complex g1 = gamma(Complex(t.t1, P)), g2 = gamma(Complex(t.t2, P));
    CHECK(err(gw_gluing(1, t, P)(0, 0), Complex(1, P) / (g1 * g2)) < 1e-35);
    CHECK(err(gamma_op(1, t, P)(0, 0), Complex::two_pi_i(P) / (g1 * g2)) < 1e-35);
    Complex h1 = gamma(Complex(t.t1 + 1, P)), h2 = gamma(Complex(t.t2 + 1, P));
    for (auto b : {LogBranch::principal, LogBranch::real_axis})
        CHECK(err(dt_gluing_at_minus_one(1, t, b, P)(0, 0), Complex(1, P) / (h1 * h2)) < 1e-35);
    // g(2, t) = 2^{2t} / Gamma(2t) on |2>
    Complex g22 = exp(Complex(t.t1 * 2, P) * Complex(log(Real(2, P)))) / gamma(Complex(t.t1 * 2, P)) *
                  exp(Complex(t.t2 * 2, P) * Complex(log(Real(2, P)))) / gamma(Complex(t.t2 * 2, P));
    CHECK(err(gw_gluing(2, t, P)(0, 0), g22) < 1e-30);
    CHECK_THROWS_AS(gw_gluing(1, T("-1", "1/3"), P), PoleOfGamma);
}

TEST_CASE("monodromy around zero and the loop relation") {
    NumericConfig cfg = config();
    Params t = T("0.31", "0.47");
    CHECK(small((monodromy(1, t, Complex(P), cfg) - NumMatrix::identity(1, P)).max_abs(), 1e-35));
    for (int n = 2; n <= 3; ++n) {
        NumMatrix m0 = monodromy(n, t, Complex(P), cfg);
        CHECK(small(match_distance(eigenvalues(m0), expected_q0_eigenvalues(n, t, P)), 1e-17));
    }
    NumMatrix prod = NumMatrix::identity(2, P);
    for (const auto& z : generator_order(2, P)) prod = monodromy(2, t, z, cfg) * prod;
    NumMatrix inf = monodromy(2, t, loop_at_infinity(P), cfg);
    CHECK(small((prod * inf - NumMatrix::identity(2, P)).max_abs(), 1e-15));
}

TEST_CASE("intertwiners") {
    NumericConfig cfg = config();
    Params t = T("0.31", "0.47");
    Complex q = C("-1/2", "1/5");
    Intertwiner s00 = intertwiner_S(0, 0, 2, t, q, cfg);
    CHECK(small((s00.dt - NumMatrix::identity(2, P)).max_abs(), 1e-30));
    CHECK(small((s00.gw - NumMatrix::identity(2, P)).max_abs(), 1e-30));
    // n = 1: S(1, 0) = Gamma(t1 - 1) / Gamma(t1) = 1 / (t1 - 1)
    Intertwiner s1 = intertwiner_S(1, 0, 1, t, q, cfg);
    CHECK(err(s1.dt(0, 0), Complex(1 / (t.t1 - 1), P)) < 1e-30);
    CHECK(small(s1.difference, 1e-30));
    Intertwiner s = intertwiner_S(1, 0, 2, t, q, cfg);
    CHECK(small(s.difference, 1e-17));

    // q dS/dq = M_D(t) S - S M_D(t') from the Laurent coefficients
    LaurentFit fit = laurent_fit(1, 0, 2, t, 3, cfg, 32);
    CHECK(small(fit.residual, 1e-17));
    NumMatrix S(2, 2, P), qdS(2, 2, P);
    for (int k = fit.low; k <= fit.high; ++k) {
        S += fit.coefficients[k - fit.low] * pow(q, k);
        qdS += fit.coefficients[k - fit.low] * (pow(q, k) * Complex(k, P));
    }
    CHECK(small(relative_error(S, s.dt), 1e-15));
    NumMatrix rhs = NumericQDE(2, t, P).M_D(q) * S - S * NumericQDE(2, t.shifted(1, 0), P).M_D(q);
    CHECK(small(relative_error(qdS, rhs), 1e-15));

    CHECK(small(laurent_fit(0, 0, 2, t, 2, cfg, 16).residual, 1e-30));
    CHECK(laurent_fit(-1, -1, 2, t, 4, cfg, 32).residual.to_double() > 1e-6);
}

TEST_CASE("connection formula") {
    NumericConfig cfg = config(160);
    ConnectReport one = verify_connect(1, T("1/3", "1/5"), cfg);
    CHECK(small(one.error, 1e-40));
    CHECK(err(one.lhs(0, 0), Complex(1, 160) / Complex::two_pi_i(160)) < 1e-40);
    Params t = T("0.31", "0.47");
    ConnectReport r = verify_connect(2, t, cfg);
    CHECK(small(r.error, 1e-20));
    CHECK(small(verify_connect(2, t.swapped(), cfg).error, 1e-20));
    // with log(-1) = i pi every column picks up exp(-i pi c), i.e. O(1) in place of O(1/2)
    ConnectReport pr = verify_connect(2, t, cfg, LogBranch::principal);
    CHECK(pr.error.to_double() > 0.1);
    auto basis = partitions(2);
    for (int j = 0; j < 2; ++j) {
        Complex f = expi_pi(-Complex(content_sum(basis[j], t.t1, t.t2), 160));
        for (int i = 0; i < 2; ++i) CHECK(err(pr.lhs(i, j), r.lhs(i, j) * f) < 1e-25);
    }
    // more precision, smaller error
    ConnectReport lo = verify_connect(2, t, config(192)), hi = verify_connect(2, t, config(320));
    CHECK(hi.error < lo.error);
}

TEST_CASE("O line") {
    Params t = T("0.31", "0.47");
    NumMatrix H = haiman_numeric(2, t, P);
    NumMatrix o = O_line(2, t, Rational(1), P);
    auto basis = partitions(2);
    for (int j = 0; j < 2; ++j) {
        Complex e = exp(-(Complex::two_pi_i(P) * Complex(content_sum(basis[j], t.t1, t.t2), P)));
        for (int i = 0; i < 2; ++i) {
            Complex s(P);
            for (int k = 0; k < 2; ++k) s += o(i, k) * H(k, j);
            CHECK(err(s, H(i, j) * e) < 1e-30);
        }
    }
    CHECK(small((O_line(3, t, Rational(0), P) - NumMatrix::identity(3, P)).max_abs(), 1e-30));
}

TEST_CASE("genericity") {
    CHECK_FALSE(genericity(3, T("1/5", "2/3"), Context::Tmonodr).ok);
    CHECK(genericity(3, T("1/5", "0.31"), Context::Tmonodr).ok);
    CHECK_FALSE(genericity(2, T("1/2", "1/2"), Context::semisimple).ok);
    CHECK(genericity(2, T("0.31", "0.69"), Context::semisimple).ok);
    CHECK(genericity(2, T("1/3", "2/3"), Context::semisimple).ok);
    CHECK_FALSE(genericity(3, T("1/3", "2/3"), Context::semisimple).ok);
    CHECK_FALSE(genericity(2, T("0.31", "0.47"), Context::semisimple).ok); // level not integral
    CHECK(genericity(3, T("0.31", "0.47"), Context::connect).ok);
    CHECK_FALSE(genericity(2, T("0.5", "0.5"), Context::connect).ok);
    CHECK_FALSE(genericity(2, T("3/2", "1/2"), Context::resonance).ok);
}

TEST_CASE("monodromy theorems at n = 2") {
    NumericConfig cfg = config();
    Params t = T("0.31", "0.47");
    TpolynomReport tp = verify_Tpolynom(2, t, cfg);
    CHECK(small(tp.periodicity, 1e-15));
    CHECK(small(tp.unitarity, 1e-15));
    CHECK(small(verify_Tmonodr(2, t, cfg).error, 1e-15));
    CHECK_THROWS_AS(verify_Tmonodr(2, T("0.31", "1/2"), cfg), ExcludedParameter);
    CHECK(small(commutator_defect(2, T("0.31", "0.69"), cfg), 1e-15));
    CHECK(commutator_defect(2, t, cfg).to_double() > 1e-3);
}

TEST_CASE("scattering") {
    NumericConfig cfg = config();
    ScatteringReport one = scattering(1, T("0.31", "0.69"), cfg);
    CHECK(err(one.involution(0, 0), Complex(-1, P)) < 1e-30);
    ScatteringReport r = scattering(2, T("0.31", "0.69"), cfg);
    CHECK(small(r.off_pattern, 1e-12));
    CHECK(small(r.residual, 1e-20));
    ScatteringReport g = scattering(2, T("0.31", "0.47"), cfg);
    CHECK(g.off_pattern.to_double() > 1e-3);
    CHECK(small(g.residual, 1e-20));
}
