#include <doctest.h>

#include <stdexcept>

#include "hwm/classify.hpp"
#include "hwm/theta.hpp"
#include "test_util.hpp"

using namespace hwm;

TEST_CASE("pi_types enumerates (a,b,c) with a+b+c = n, c-a = m, sorted by (n,a)") {
    auto got = pi_types(0, 2);
    REQUIRE(got.size() == 4);
    CHECK(got[0] == ThetaType{0, 0, 0, 0, 16});
    CHECK(got[1] == ThetaType{0, 1, 0, 1, 19});
    CHECK(got[2] == ThetaType{0, 2, 0, 2, 22});
    CHECK(got[3] == ThetaType{1, 0, 1, 2, 22});

    CHECK(pi_types(-2, 2) == std::vector<ThetaType>{{2, 0, 0, 2, 20}});
    CHECK(pi_types(-3, 3) == std::vector<ThetaType>{{3, 0, 0, 3, 22}});
    CHECK(pi_types(5, 4).empty());

    for (int m = -6; m <= 6; ++m) {
        for (const auto& t : pi_types(m, 12)) {
            CHECK(t.a + t.b + t.c == t.n);
            CHECK(t.c - t.a == m);
            CHECK(t.a >= 0);
            CHECK(t.b >= 0);
            CHECK(t.c >= 0);
            CHECK(t.n <= 12);
            CHECK(t.hprime_weight == 3 * t.n + m + 16);
        }
    }
}

TEST_CASE("minimal_type is the unique h'-minimum of the table") {
    for (int m = -6; m <= 6; ++m) {
        auto lst = pi_types(m, 12);
        REQUIRE_FALSE(lst.empty());
        auto mt = minimal_type(m);
        int count_at_min = 0;
        for (const auto& t : lst) {
            CHECK(t.hprime_weight >= mt.hprime_weight);
            if (t.hprime_weight == mt.hprime_weight) {
                ++count_at_min;
                CHECK(t == mt);
            }
        }
        CHECK(count_at_min == 1);
    }
    CHECK(minimal_type(3) == ThetaType{0, 0, 3, 3, 28});   // 4m + 16
    CHECK(minimal_type(-4) == ThetaType{4, 0, 0, 4, 24});  // 2|m| + 16
    CHECK(minimal_type(0) == ThetaType{0, 0, 0, 0, 16});
}

TEST_CASE("discrete point bridge") {
    auto e6 = build(Family::E6);
    Weight h = wt("0,0,0,0,0,-2,-2,2");
    std::vector<int> valid;
    for (int k = 0; k <= 10; ++k) {
        DiscretePoint p;
        try {
            p = discrete_point_bridge(k);
        } catch (const std::domain_error&) {
            continue;
        }
        valid.push_back(k);
        CHECK(p.m == -k);
        Rat l = Rat(k + 8, 3);
        CHECK(p.chi == Weight{Rat(0), Rat(0), Rat(0), Rat(0), Rat(k), l, l, -l});
        CHECK(dot(p.chi, h) == Rat(-2 * k - 16));
        CHECK(classify_lambda(e6, p.chi).status == Status::Unitary);
    }
    CHECK(valid == std::vector<int>{1, 4, 7, 10});
    CHECK_THROWS_AS(discrete_point_bridge(-1), std::domain_error);
    CHECK_THROWS_AS(discrete_point_bridge(2), std::domain_error);
}
