#include "test_util.hpp"

#include "qde/error.hpp"
#include "qde/fock.hpp"

using namespace qde;

namespace {
Partition P(const char* s) { return Partition::parse(s); }
RatFunc R(const char* s) { return RatFunc::parse(s); }
FockVector B(const char* s) { return FockVector::basis(P(s)); }
} // namespace

TEST_CASE("basis vectors and power sums") {
    CHECK(B("2,1").coefficient(P("2,1")) == RatFunc(1));
    CHECK(FockVector::vacuum().energy() == 0);
    CHECK(power_sum(P("2")).coefficient(P("2")) == RatFunc(2));
}

TEST_CASE("alpha action") {
    CHECK(apply_alpha(-1, FockVector::vacuum()) == B("1"));
    CHECK(apply_alpha(1, B("1")) == FockVector::vacuum());
    CHECK(apply_alpha(2, B("2")) == FockVector::vacuum());
    CHECK(apply_alpha(3, B("2,1")).is_zero());
    FockVector v = apply_alpha(3, apply_alpha(-3, B("3")));
    CHECK(v.coefficient(P("3")) == RatFunc(3 * 2));

    // [alpha_k, alpha_l] = k delta_{k+l}
    for (int n = 0; n <= 8; ++n)
        for (const auto& mu : partitions(n)) {
            FockVector b = FockVector::basis(mu);
            for (int k = -3; k <= 3; ++k)
                for (int l = -3; l <= 3; ++l) {
                    if (!k || !l) continue;
                    if (n - k < 0 || n - l < 0 || n - k - l < 0) continue;
                    FockVector c = apply_alpha(k, apply_alpha(l, b)) - apply_alpha(l, apply_alpha(k, b));
                    FockVector expect(n);
                    if (k + l == 0) expect = RatFunc(k) * b;
                    CHECK((c.is_zero() ? expect.is_zero() : c == expect));
                }
            FockVector e(n);
            for (int k = 1; k <= n; ++k) e += apply_alpha(-k, apply_alpha(k, b));
            CHECK((n == 0 ? e.is_zero() : e == RatFunc(n) * b));
            CHECK(energy(b) == n);
        }
}

TEST_CASE("bar involution") {
    CHECK(bar(R("t1*t2")) == R("t1*t2"));
    CHECK(bar(R("t1+t2")) == R("-t1-t2"));
    CHECK(bar(R("-2*t1^2*t2")) == R("2*t1^2*t2"));
    CHECK(bar(R("q*t1/(q-t2)")) == R("-q*t1/(q+t2)"));
}

TEST_CASE("hermitian product") {
    CHECK(inner_herm(B("1"), B("1")) == R("1/(t1*t2)"));
    CHECK(inner_herm(B("2"), B("1,1")).is_zero());
    FockVector j1 = R("t1*t2") * B("1");
    CHECK(inner_herm(j1, j1) == R("t1*t2"));
    CHECK_THROWS_AS(inner_herm(B("2"), B("1")), MixedEnergy);

    FockVector v = R("t1") * B("2") + R("q+t2^2") * B("1,1");
    FockVector w = R("1/(t1-t2)") * B("2") + R("3") * B("1,1");
    RatFunc a = R("t1/(t2+1)");
    CHECK(inner_herm(a * v, w) == bar(a) * inner_herm(v, w));
    CHECK(inner_herm(v, w) == bar(inner_herm(w, v)));
}

TEST_CASE("KT product on the doubled lattice") {
    RatFunc half;
    REQUIRE(undouble_lattice(inner_KT(B("2"), B("2")), half));
    CHECK(half == R("1/2*(T1-1/T1)*(T2-1/T2)"));
    CHECK(inner_KT(B("1"), B("1")) == R("(T1-1/T1)*(T2-1/T2)"));
    CHECK(inner_KT(B("2"), B("1,1")).is_zero());
}

TEST_CASE("adjoint of alpha") {
    CHECK(adjoint_check(1, 3).ok);
    CHECK(adjoint_check(-2, 3).ok);
    CHECK(adjoint_check(5, 3).ok);
    for (int k = -4; k <= 4; ++k) CHECK(adjoint_check(k, 5).ok);
}
