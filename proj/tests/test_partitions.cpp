#include "test_util.hpp"

#include <algorithm>

#include "qde/error.hpp"
#include "qde/partition.hpp"

using namespace qde;

namespace {
Partition P(const char* s) { return Partition::parse(s); }
RatFunc R(const char* s) { return RatFunc::parse(s); }

std::vector<std::string> sorted_strs(const std::vector<RatFunc>& v) {
    std::vector<std::string> s;
    for (const auto& f : v) s.push_back(f.str());
    std::sort(s.begin(), s.end());
    return s;
}
} // namespace

TEST_CASE("enumeration order") {
    auto p3 = partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == P("3"));
    CHECK(p3[1] == P("2,1"));
    CHECK(p3[2] == P("1,1,1"));
    auto p0 = partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].length() == 0);
    CHECK(partitions(5).size() == 7);
    const long table[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
    for (int n = 0; n <= 20; ++n) {
        CHECK(long(partitions(n).size()) == table[n]);
        CHECK(partition_count(n) == table[n]);
    }
    for (int n = 1; n <= 8; ++n) {
        auto b = partitions(n);
        for (size_t i = 0; i < b.size(); ++i) CHECK(index_of(b, b[i]) == int(i));
    }
}

TEST_CASE("parsing and printing") {
    CHECK(P("2,1").str() == "2,1");
    CHECK(P("-").length() == 0);
    CHECK(P("1,2") == P("2,1"));
    CHECK_THROWS_AS(P("2,x"), ParseError);
    CHECK_THROWS_AS(P("2,0"), ParseError);
}

TEST_CASE("zee, arms and legs") {
    CHECK(zee(P("2,1")) == 2);
    CHECK(zee(P("1,1,1")) == 6);
    CHECK(zee(P("-")) == 1);
    CHECK(zee(P("2,2,1")) == 8);
    CHECK(arm_leg(P("2"), 1, 1) == std::make_pair(1, 0));
    CHECK(arm_leg(P("1"), 1, 1) == std::make_pair(0, 0));
    CHECK(arm_leg(P("2,1"), 1, 1) == std::make_pair(1, 1));
    CHECK_THROWS_AS(arm_leg(P("2,1"), 2, 2), BoxOutsideDiagram);
}

TEST_CASE("contents and tangent weights") {
    CHECK(content_sum(P("1")).is_zero());
    CHECK(content_sum(P("3")) == R("3*t1"));
    CHECK(content_sum(P("2,1")) == R("t1+t2"));
    CHECK(content_sum(P("3,1"), Rational(1, 2), Rational(1, 3)) == Rational(3, 2) + Rational(1, 3));
    CHECK(sorted_strs(tangent_weights(P("1"))) == sorted_strs({R("t1"), R("t2")}));
    CHECK(sorted_strs(tangent_weights(P("2"))) ==
          sorted_strs({R("2*t1"), R("-t1+t2"), R("t1"), R("t2")}));
    CHECK(tangent_weights(P("-")).empty());

    std::array<Var, kNumVars> swap{Var::q, Var::t2, Var::t1, Var::Q, Var::T1, Var::T2};
    for (int n = 1; n <= 7; ++n)
        for (const auto& l : partitions(n)) {
            CHECK(l.transpose().transpose() == l);
            CHECK(l.transpose().size() == l.size());
            CHECK(content_sum(l).rename(swap) == content_sum(l.transpose()));
            std::vector<RatFunc> sw;
            for (const auto& w : tangent_weights(l)) sw.push_back(w.rename(swap));
            CHECK(sorted_strs(tangent_weights(l.transpose())) == sorted_strs(sw));
        }
}

TEST_CASE("hooks, statistics and orders") {
    CHECK(hook_product(P("2,1")) == 3);
    CHECK(hook_product(P("3,2")) == 24);
    CHECK(P("3").transpose() == P("1,1,1"));
    CHECK(nstat(P("2,1")) == 1);
    CHECK(f2(P("2")) == 1);
    CHECK(f2(P("1,1")) == -1);
    CHECK(content_order_lt(P("1,1"), P("2")));
    CHECK(dominance(P("2,2"), P("3,1")) == Dominance::leq);
    CHECK(dominance(P("3,1"), P("2,2")) == Dominance::greater);
    CHECK(dominance(P("3,1,1,1"), P("2,2,2")) == Dominance::incomparable);
    for (int n = 1; n <= 10; ++n) {
        auto b = partitions(n);
        for (const auto& l : b)
            for (const auto& m : b)
                if (dominated_strictly(l, m)) CHECK(f2(l) < f2(m));
    }
}
