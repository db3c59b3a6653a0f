#include "test_util.hpp"

#include <chrono>

#include "qde/error.hpp"
#include "qde/operator.hpp"

using namespace qde;

namespace {
RatFunc R(const char* s) { return RatFunc::parse(s); }
} // namespace

TEST_CASE("golden n=3 matrix") {
    auto t0 = std::chrono::steady_clock::now();
    OperatorMatrix M = build_MD(3);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 1.0);
    const char* golden[3][3] = {
        {"3*(t1+t2)*(q^2-1)/(q^2-q+1)", "-3", "0"},
        {"2*t1*t2", "(t1+t2)*(q+1)/(q-1)", "-1"},
        {"0", "3*t1*t2", "0"},
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(M(i, j) == R(golden[i][j]));
}

TEST_CASE("small matrices") {
    OperatorMatrix M2 = build_M(2);
    CHECK(M2(1, 0) == R("t1*t2"));
    CHECK(M2(0, 1) == R("-1"));
    OperatorMatrix M3 = build_M(3);
    CHECK(M3(0, 1) == R("-3"));
    CHECK(M3(2, 1) == R("3*t1*t2"));

    OperatorMatrix D1 = build_MD(1);
    CHECK(D1(0, 0).is_zero());
    OperatorMatrix D2 = build_MD(2);
    CHECK(D2(0, 0) == R("(t1+t2)*(q+1)/(q-1)"));
    CHECK(D2(1, 1).is_zero());

    OperatorMatrix Z2 = build_M0(2);
    CHECK(Z2(0, 0) == R("-(t1+t2)"));
    CHECK(Z2(0, 1) == R("-1"));
    CHECK(Z2(1, 0) == R("t1*t2"));
    CHECK(Z2(1, 1).is_zero());
    OperatorMatrix Z3 = build_M0(3);
    const char* z3[3][3] = {{"-3*(t1+t2)", "-3", "0"}, {"2*t1*t2", "-(t1+t2)", "-1"}, {"0", "3*t1*t2", "0"}};
    RatFunc tr;
    for (int i = 0; i < 3; ++i) {
        tr += Z3(i, i);
        for (int j = 0; j < 3; ++j) CHECK(Z3(i, j) == R(z3[i][j]));
    }
    CHECK(tr == R("-4*(t1+t2)"));
    for (int n = 1; n <= 5; ++n)
        CHECK(build_M0(n) == build_MD(n).substitute(Var::q, Rational(0)));
}

TEST_CASE("Taylor coefficients of the diagonal") {
    for (int n = 1; n <= 4; ++n) {
        OperatorMatrix M = build_MD(n);
        for (int s = 0; s < M.dim(); ++s) {
            auto ser = M(s, s).taylor(Var::q, 0, 6);
            for (int m = 1; m <= 6; ++m) CHECK(ser[m] == MD_diagonal_coefficient(n, m)[s]);
        }
    }
}

TEST_CASE("Calogero-Sutherland relation") {
    for (int n = 1; n <= 5; ++n) {
        MDCSReport r = check_MDCS(n);
        CHECK_MESSAGE(r.ok, r.failure);
        CHECK(r.shift.is_zero());
    }
    // theta <-> 1/theta duality is the t1 <-> t2 swap of the conjugated operator
    RatFunc t1 = R("t1"), t2 = R("t2");
    for (int n = 1; n <= 4; ++n) {
        OperatorMatrix a = build_CS(n, -t2 / t1), b = build_CS(n, -t1 / t2);
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j) {
                int li = a.basis[i].length(), lj = a.basis[j].length();
                CHECK(t1.pow(li + 1) * a(i, j) * t1.pow(-lj) == t2.pow(li + 1) * b(i, j) * t2.pow(-lj));
            }
    }
}

TEST_CASE("skew-hermiticity and inversion") {
    for (int n = 1; n <= 5; ++n) {
        CHECK_MESSAGE(check_skew(n).ok, check_skew(n).failure);
        CHECK_MESSAGE(check_inversion(n).ok, check_inversion(n).failure);
    }
}

TEST_CASE("singular points and residues") {
    auto sp = singular_points(3);
    REQUIRE(sp.roots.size() == 3);
    CHECK(sp.roots[0].r == Rational(1, 2));
    CHECK(sp.roots[1].r == Rational(1, 3));
    CHECK(sp.roots[2].r == Rational(2, 3));
    OperatorMatrix res = residue_at_root(2, {Rational(1, 2)});
    CHECK(res(0, 0) == R("2*(t1+t2)"));
    CHECK(res(1, 1).is_zero());
    CHECK_THROWS_AS(residue_at_root(2, {Rational(1, 3)}), NotASingularRoot);
    for (int n = 1; n <= 4; ++n) {
        CHECK(check_residues(n).ok);
        CHECK(check_residue_sum(n).ok);
    }
}

TEST_CASE("spectrum of M0") {
    for (int n = 1; n <= 4; ++n) CHECK(check_M0_spectrum(n).ok);
}
