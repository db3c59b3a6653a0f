#include "test_util.hpp"

#include <random>

#include "qde/error.hpp"
#include "qde/ratfunc.hpp"

using namespace qde;

namespace {

RatFunc R(const char* s) { return RatFunc::parse(s); }
Poly P(const char* s) { return RatFunc::parse(s).num(); }

Poly random_poly(std::mt19937& rng, int terms, int maxdeg) {
    std::uniform_int_distribution<int> c(-5, 5), e(0, maxdeg);
    std::vector<Poly::Term> t;
    for (int i = 0; i < terms; ++i) {
        std::array<int, kNumVars> ex{};
        ex[0] = e(rng);
        ex[1] = e(rng);
        ex[2] = e(rng);
        Rational r(c(rng), 1 + std::abs(c(rng)));
        r.canonicalize();
        t.emplace_back(Monomial(ex), r);
    }
    return Poly::from_terms(t);
}

} // namespace

TEST_CASE("rational parsing") {
    CHECK(parse_rational("0.31") == Rational(31, 100));
    CHECK(parse_rational("-2/6") == Rational(-1, 3));
    CHECK(parse_rational("1.5e-2") == Rational(3, 200));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), ZeroDenominator);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("poly arithmetic") {
    CHECK(P("t1+t2") + P("t1-t2") == P("2*t1"));
    CHECK(P("q-1") * P("q+1") == P("q^2-1"));
    CHECK((P("t1*t2") * Poly(0)).is_zero());
    CHECK(P("q^2-1").exact_div(P("q-1")) == P("q+1"));
    CHECK_THROWS_AS(P("q^2+1").exact_div(P("q-1")), InexactDivision);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(7);
    for (int it = 0; it < 20; ++it) {
        Poly a = random_poly(rng, 4, 3), b = random_poly(rng, 3, 3), c = random_poly(rng, 5, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("gcd and normalization") {
    CHECK(RatFunc(P("q^2-1"), P("q-1")) == RatFunc(P("q+1")));
    RatFunc h(P("2*t1"), Poly(4));
    CHECK(h.den() == Poly(1));
    CHECK(h.num() == P("1/2*t1"));
    RatFunc c(P("q^2-1"), P("q^2-q+1"));
    CHECK(c.num() == P("q^2-1"));
    CHECK(c.den() == P("q^2-q+1"));
    CHECK(gcd(P("(t1+t2)*(t1-2*t2+1)*q"), P("(t1+t2)^2*(q+1)")) == P("t1+t2"));
    CHECK_THROWS_AS(RatFunc(P("q"), Poly()), ZeroDenominator);

    std::mt19937 rng(11);
    for (int it = 0; it < 15; ++it) {
        Poly a = random_poly(rng, 3, 2), b = random_poly(rng, 3, 2), c = random_poly(rng, 3, 2);
        if (b.is_zero() || c.is_zero()) continue;
        CHECK(RatFunc(a * c, b * c) == RatFunc(a, b));
    }
}

TEST_CASE("ratfunc arithmetic and printing") {
    RatFunc f = R("(3*t1+3*t2)*(q^2-1)/(q^2-q+1)");
    CHECK(RatFunc::parse(f.str()) == f);
    CHECK(f.str() == "(3*q^2*t1+3*q^2*t2-3*t1-3*t2)/(q^2-q+1)");
    RatFunc g = R("1/(q-1) - 1/(q+1)");
    CHECK(g == R("2/(q^2-1)"));
    CHECK(g * R("q^2-1") == RatFunc(2));
    CHECK(R("t1/t2").inverse() == R("t2/t1"));
    CHECK(R("(q+1)/(q-1)").substitute(Var::q, Rational(-1)).is_zero());
    CHECK(R("(q^2-1)/(q^2-q+1)").substitute(Var::q, Rational(0)) == RatFunc(-1));
    CHECK_THROWS_AS(R("(q+1)/(q-1)").substitute(Var::q, Rational(1)), PoleAtPoint);
    CHECK(R("(q+1)/(q-1)").substitute(Var::q, R("1/q")) == R("(1+q)/(1-q)"));
    CHECK(R("q^-2*t1") == R("t1/q^2"));
    CHECK_THROWS_AS(R("q/(t1-t1)"), ZeroDenominator);
    CHECK_THROWS_AS(R("q+*"), ParseError);
}

TEST_CASE("taylor expansion") {
    // -1 - 2*sum_{m>=1} (-q)^m
    auto a = R("((-q)+1)/((-q)-1)").taylor(Var::q, 0, 3);
    REQUIRE(a.size() == 4);
    CHECK(a[0] == RatFunc(-1));
    CHECK(a[1] == RatFunc(2));
    CHECK(a[2] == RatFunc(-2));
    CHECK(a[3] == RatFunc(2));
    auto b = R("1/(1-q)").taylor(Var::q, 0, 2);
    CHECK((b[0] == RatFunc(1) && b[1] == RatFunc(1) && b[2] == RatFunc(1)));
    auto c = R("(q^2+1)/(q^2-1)").taylor(Var::q, 0, 2);
    CHECK((c[0] == RatFunc(-1) && c[1] == RatFunc(0) && c[2] == RatFunc(-2)));
    auto d = R("t1/(q-2)").taylor(Var::q, 1, 1);
    CHECK((d[0] == R("-t1") && d[1] == R("-t1")));
    CHECK_THROWS_AS(R("1/q").taylor(Var::q, 0, 2), PoleAtCenter);
}

TEST_CASE("laurent polynomial view") {
    auto lp = LaurentPoly::from_ratfunc(R("(T1^3 - 2 + T2)/(T1^2)"), Var::T1);
    REQUIRE(lp.has_value());
    CHECK(lp->min_exponent() == -2);
    CHECK(lp->max_exponent() == 1);
    CHECK(lp->terms.at(-2) == R("T2-2"));
    CHECK(lp->to_ratfunc() == R("(T1^3 - 2 + T2)/(T1^2)"));
    CHECK_FALSE(LaurentPoly::from_ratfunc(R("1/(1-T1)"), Var::T1).has_value());
}
