#include <doctest.h>

#include <stdexcept>
#include <unordered_set>

#include "hwm/rational.hpp"

using hwm::Rat;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
    CHECK(Rat(6, 4) == Rat(3, 2));
    CHECK(Rat(-6, 4) == Rat(-3, 2));
    CHECK(Rat(6, -4) == Rat(-3, 2));
    CHECK(Rat(-6, -4) == Rat(3, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(0, -7).den() == 1);
    CHECK(Rat(17, 1).num() == 17);
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(3, 4) * Rat(2, 9) == Rat(1, 6));
    CHECK(Rat(3, 4) / Rat(9, 2) == Rat(1, 6));
    CHECK(-Rat(5, 3) == Rat(-5, 3));
    CHECK(abs(Rat(-7, 2)) == Rat(7, 2));
    CHECK(abs(Rat(7, 2)) == Rat(7, 2));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);

    Rat r(1, 3);
    r += Rat(1, 6);
    CHECK(r == Rat(1, 2));
    r *= Rat(4);
    CHECK(r == Rat(2));
    r -= Rat(1, 2);
    CHECK(r == Rat(3, 2));
    r /= Rat(3);
    CHECK(r == Rat(1, 2));
}

TEST_CASE("comparison is exact cross-multiplication") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(-1, 3));
    CHECK(Rat(7, 2) > Rat(3));
    CHECK(Rat(2, 4) <= Rat(1, 2));
    CHECK(Rat(2, 4) >= Rat(1, 2));
    CHECK(Rat(1, 3) != Rat(2, 3));
    CHECK(Rat(10, 5).is_integer());
    CHECK_FALSE(Rat(1, 2).is_integer());
    CHECK(Rat(-3).sign() == -1);
    CHECK(Rat(0).sign() == 0);
    CHECK(Rat(1, 9).sign() == 1);
}

TEST_CASE("large intermediates survive via 128-bit products") {
    Rat big(INT64_MAX / 4, 3);
    Rat r = big + big;  // numerator ~ 2^62 * 2 / 3 stays representable
    CHECK(r == Rat(2 * (INT64_MAX / 4), 3));
    // product that cannot be reduced back into range must throw, not wrap
    CHECK_THROWS_AS(Rat(INT64_MAX / 2, 1) * Rat(INT64_MAX / 2, 1), std::overflow_error);
}

TEST_CASE("text form is p or p/q") {
    CHECK(Rat(3, 2).str() == "3/2");
    CHECK(Rat(-3, 2).str() == "-3/2");
    CHECK(Rat(4).str() == "4");
    CHECK(Rat(0).str() == "0");
    CHECK(Rat(6, 4).str() == "3/2");
}

TEST_CASE("parse accepts fractions, integers, and decimals") {
    CHECK(Rat::parse("3/2") == Rat(3, 2));
    CHECK(Rat::parse("-3/2") == Rat(-3, 2));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK(Rat::parse("+7") == Rat(7));
    CHECK(Rat::parse("1.5") == Rat(3, 2));
    CHECK(Rat::parse(".5") == Rat(1, 2));
    CHECK(Rat::parse("-0.25") == Rat(-1, 4));
    CHECK(Rat::parse("  -17/2\t") == Rat(-17, 2));
    CHECK(Rat::parse("0") == Rat(0));

    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("  "), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("3/"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1.5/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1 2"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("3/0"), std::domain_error);
    CHECK_THROWS_AS(Rat::parse("99999999999999999999999"), std::overflow_error);
}

TEST_CASE("parse-print round trip on normalized text") {
    for (const char* s : {"0", "1", "-1", "3/2", "-17/2", "7/3", "-1/4", "12"}) {
        CHECK(Rat::parse(s).str() == s);
    }
}

TEST_CASE("hash is usable and consistent with equality") {
    std::unordered_set<Rat> set;
    set.insert(Rat(1, 2));
    set.insert(Rat(2, 4));  // same value
    set.insert(Rat(-1, 2));
    set.insert(Rat(3));
    CHECK(set.size() == 3);
    CHECK(set.count(Rat(1, 2)) == 1);
    CHECK(std::hash<Rat>{}(Rat(5, 10)) == std::hash<Rat>{}(Rat(1, 2)));
}
