#include "test_util.hpp"

#include "qde/error.hpp"
#include "qde/series.hpp"
#include "qde/symfunc.hpp"

using namespace qde;

namespace {

Partition P(const char* s) { return Partition::parse(s); }
RatFunc R(const char* s) { return RatFunc::parse(s); }

// (k - c - M0) u_k = sum_{m=1}^k D_m u_{k-m}, solved with rational functions.
std::vector<FockVector> direct_series(const Partition& lambda, int N) {
    const int n = lambda.size();
    OperatorMatrix M0 = build_M0(n);
    const auto& basis = M0.basis;
    const int d = int(basis.size());
    RatFunc c = content_sum(lambda);
    std::vector<std::vector<RatFunc>> D(N + 1);
    for (int m = 1; m <= N; ++m) D[m] = MD_diagonal_coefficient(n, m);
    std::vector<FockVector> u{jack(lambda).vector};
    for (int k = 1; k <= N; ++k) {
        Matrix<RatFunc> A(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) A(i, j) = (i == j ? RatFunc(k) - c : RatFunc(0)) - M0(i, j);
        Matrix<RatFunc> Ai = inverse(A);
        std::vector<RatFunc> rhs(d);
        for (int m = 1; m <= k; ++m)
            for (int i = 0; i < d; ++i) rhs[i] += D[m][i] * u[k - m].coefficient(basis[i]);
        std::vector<RatFunc> col(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) col[i] += Ai(i, j) * rhs[j];
        u.push_back(FockVector::from_column(n, col));
    }
    return u;
}

} // namespace

TEST_CASE("md_taylor matches the expansion of the diagonal") {
    for (int n = 1; n <= 3; ++n) {
        MDTaylor T = md_taylor(n, 6);
        OperatorMatrix MD = build_MD(n);
        CHECK(T.M0 == build_M0(n));
        for (int i = 0; i < MD.dim(); ++i) {
            auto series = MD(i, i).taylor(Var::q, 0, 6);
            for (int m = 1; m <= 6; ++m) CHECK(T.D[m][i] == series[m]);
        }
    }
}

TEST_CASE("energy one solution is constant") {
    SeriesSolution s = frobenius(P("1"), 12);
    CHECK(s.order() == 12);
    CHECK(s.coefficient(0).coefficient(P("1")) == R("t1*t2"));
    for (int k = 1; k <= 12; ++k) CHECK(s.vanishes(k));
    CHECK(s.exponent == R("0"));
}

TEST_CASE("series agrees with a direct rational recursion") {
    for (int n = 2; n <= 3; ++n)
        for (const auto& lambda : partitions(n)) {
            auto expected = direct_series(lambda, 3);
            SeriesSolution s = frobenius(lambda, 3);
            CHECK(s.exponent == -content_sum(lambda));
            for (int k = 0; k <= 3; ++k) {
                INFO(lambda.str() << " k=" << k);
                CHECK(s.coefficient(k) == expected[k]);
            }
        }
}

TEST_CASE("point recursion agrees with the generic series") {
    const Rational t1 = frac(3, 7), t2 = frac(5, 11);
    for (const auto& lambda : partitions(3)) {
        SeriesSolution s = frobenius(lambda, 8);
        auto pt = frobenius_point(lambda, 8, t1, t2);
        for (int k = 0; k <= 8; ++k) {
            FockVector u = s.coefficient(k);
            for (size_t i = 0; i < s.w[k].size(); ++i) {
                RatFunc c = u.coefficient(partitions(3)[i]);
                CHECK(c.evaluate({{Var::t1, t1}, {Var::t2, t2}}) == pt[k][i]);
            }
        }
    }
    CHECK_THROWS_AS(frobenius_point(P("2"), 4, frac(1, 1), frac(-1, 1)), Error);
}

TEST_CASE("residual vanishes to order 30") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& lambda : partitions(n)) {
            ResidualReport r = check_ode_residual(frobenius(lambda, 30));
            INFO(lambda.str() << " " << r.failure);
            CHECK(r.ok);
            CHECK(r.verified == 30);
        }
}

TEST_CASE("residual detects a corrupted coefficient") {
    SeriesSolution s = frobenius(P("2,1"), 6);
    s.w[2][0] += DPoly(1);
    ResidualReport r = check_ode_residual(s);
    CHECK_FALSE(r.ok);
    CHECK(r.first_failure == 2);
    CHECK(r.verified == 1);
}

TEST_CASE("orthogonality of solutions") {
    ResidualReport one = check_orthogonality(P("1"), P("1"), 10);
    CHECK(one.ok);
    CHECK(one.verified == 10);
    CHECK(jack_norm(P("2")) == R("2*t1^2*t2*(t2-t1)"));
    CHECK(check_orthogonality(P("2"), P("2"), 8).verified == 8);
    CHECK(check_orthogonality(P("2"), P("1,1"), 8).verified == 8);
    for (int n = 2; n <= 3; ++n) {
        auto basis = partitions(n);
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i; j < basis.size(); ++j) {
                ResidualReport r = check_orthogonality(basis[i], basis[j], n == 2 ? 10 : 6);
                INFO(basis[i].str() << " " << basis[j].str() << " " << r.failure);
                CHECK(r.ok);
            }
    }
}

TEST_CASE("orthogonality against the Hermitian pairing") {
    // sum_{a+b=k} <u_a, u_b> through inner_herm for k = 1, 2.
    for (const auto& lambda : partitions(2))
        for (const auto& mu : partitions(2)) {
            SeriesSolution a = frobenius(lambda, 2), b = frobenius(mu, 2);
            CHECK(inner_herm(a.coefficient(0), b.coefficient(0)) ==
                  (lambda == mu ? jack_norm(lambda) : RatFunc(0)));
            for (int k = 1; k <= 2; ++k) {
                RatFunc s;
                for (int i = 0; i <= k; ++i) s += inner_herm(a.coefficient(i), b.coefficient(k - i));
                CHECK(s == RatFunc(0));
            }
        }
}

TEST_CASE("orthogonality detects a corrupted coefficient") {
    SeriesSolution a = frobenius(P("2"), 4), b = frobenius(P("1,1"), 4);
    b.w[3][1] += DPoly(Linear{0, 1, 0});
    ResidualReport r = check_orthogonality(a, b);
    CHECK_FALSE(r.ok);
    CHECK(r.first_failure == 3);
}

TEST_CASE("transposition symmetry") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lambda : partitions(n)) {
            CheckReport r = check_series_symmetry(frobenius(lambda, n < 4 ? 10 : 6),
                                                  frobenius(lambda.transpose(), n < 4 ? 10 : 6));
            INFO(lambda.str() << " " << r.failure);
            CHECK(r.ok);
        }
}

TEST_CASE("level specialization terminates") {
    LevelReport r = check_polynomial_level(P("1"), 1, 10);
    CHECK(r.terminated);
    CHECK(r.degree == 0);
    for (int n = 2; n <= 3; ++n)
        for (const auto& lambda : partitions(n)) {
            LevelReport lv = check_polynomial_level(lambda, 1, 30);
            INFO(lambda.str());
            CHECK(lv.terminated);
            CHECK(lv.degree <= 30);
        }
}

TEST_CASE("level series matches the generic series") {
    SeriesSolution g = frobenius(P("2"), 4);
    SeriesSolution l = frobenius_level(P("2"), 1, 4);
    for (int k = 0; k <= 4; ++k) {
        if (g.vanishes(k)) {
            CHECK(l.vanishes(k));
            continue;
        }
        RatFunc expected = g.coefficient(k).coefficient(P("1,1")).substitute(Var::t2, R("1-t1"));
        CHECK(l.coefficient(k).coefficient(P("1,1")) == expected);
    }
}
