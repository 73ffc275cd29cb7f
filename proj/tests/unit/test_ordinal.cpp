#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orw/error.hpp"
#include "orw/ordinal.hpp"

using namespace orw;

namespace {

std::vector<Term> terms_of(const char* text) { return parse_ordinal(text).terms(); }

}  // namespace

TEST_CASE("parsing produces canonical term lists") {
    CHECK(terms_of("w^2*3 + w*3 + 3") == std::vector<Term>{{2, 3}, {1, 3}, {0, 3}});
    CHECK(terms_of("w + w^2") == std::vector<Term>{{2, 1}});
    CHECK(terms_of("0").empty());
    CHECK(terms_of("  w^3*2+w ") == std::vector<Term>{{3, 2}, {1, 1}});
    CHECK(terms_of("5 + w") == std::vector<Term>{{1, 1}});
    CHECK(terms_of("w^0*4") == std::vector<Term>{{0, 4}});
    CHECK(terms_of("w*0 + 2") == std::vector<Term>{{0, 2}});
}

TEST_CASE("parse errors report a position") {
    try {
        parse_ordinal("w^2 + + 1");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 6);
    }
    CHECK_THROWS_AS(parse_ordinal(""), ParseError);
    CHECK_THROWS_AS(parse_ordinal("w^"), ParseError);
    CHECK_THROWS_AS(parse_ordinal("x"), ParseError);
    CHECK_THROWS_AS(parse_ordinal("w^2 3"), ParseError);
    CHECK_THROWS_AS(parse_ordinal("99999999999999999999999"), OverflowError);
    CHECK_THROWS_AS(parse_ordinal("w^99999999999"), OverflowError);
    CHECK_THROWS_AS(parse_ordinal("18446744073709551615 + 1"), OverflowError);
}

TEST_CASE("printing round-trips") {
    CHECK(to_string(Ordinal()) == "0");
    CHECK(to_string(parse_ordinal("w^2*3+w*3+3")) == "w^2*3 + w*3 + 3");
    CHECK(to_string(parse_ordinal("w")) == "w");
    CHECK(to_string(parse_ordinal("w^1*1")) == "w");
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const Ordinal a = oracle::random_ordinal(rng, 5, 20);
        CHECK(parse_ordinal(to_string(a)) == a);
    }
}

TEST_CASE("addition examples") {
    CHECK(parse_ordinal("w*5") + parse_ordinal("w^2") == parse_ordinal("w^2"));
    CHECK(parse_ordinal("w^2*2") + parse_ordinal("w*3+1") == parse_ordinal("w^2*2+w*3+1"));
    const Ordinal g = parse_ordinal("w^3+7");
    CHECK(Ordinal() + g == g);
    CHECK(g + Ordinal() == g);
    CHECK(Ordinal::natural(1) + Ordinal::omega() == Ordinal::omega());
}

TEST_CASE("comparison examples") {
    CHECK(compare(parse_ordinal("w^2"), parse_ordinal("w*100")) == Order::greater);
    CHECK(compare(parse_ordinal("w^2*3+w"), parse_ordinal("w^2*3+w")) == Order::equal);
    CHECK(compare(parse_ordinal("w+1"), parse_ordinal("w*2")) == Order::less);
}

TEST_CASE("arithmetic agrees with the dense oracle on 1000 cases below w^3*5") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const Ordinal a = oracle::random_ordinal(rng, 3, 5);
        const Ordinal b = oracle::random_ordinal(rng, 3, 5);
        const Ordinal c = oracle::random_ordinal(rng, 3, 5);
        CAPTURE(to_string(a));
        CAPTURE(to_string(b));
        CHECK(a + b == oracle::to(oracle::add(oracle::from(a), oracle::from(b))));
        const int expected = oracle::cmp(oracle::from(a), oracle::from(b));
        const Order got = compare(a, b);
        CHECK(got == (expected < 0 ? Order::less : expected == 0 ? Order::equal : Order::greater));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a <= a + b);
        if (!b.is_zero()) CHECK(a < a + b);
        const Ordinal lo = std::min(a, b);
        const Ordinal hi = std::max(a, b);
        CHECK(lo + left_subtract(lo, hi) == hi);
    }
}

TEST_CASE("Cantor-Bendixson data") {
    CHECK(cb_rank(parse_ordinal("w^2*3+w*2")) == 1);
    CHECK(l_count(parse_ordinal("w^2*3+w*2")) == 2);
    CHECK(cb_rank(parse_ordinal("w^2*4+w*6+1")) == 0);
    CHECK(l_count(parse_ordinal("w^2*4+w*6+1")) == 1);
    CHECK(cb_rank(Ordinal()) == 0);
    CHECK(l_count(Ordinal()) == 1);
    CHECK(drop_last_unit(parse_ordinal("w^2*3+w*2")) == parse_ordinal("w^2*3+w"));
    CHECK(drop_last_unit(parse_ordinal("w^2")) == Ordinal());
}

TEST_CASE("component structure") {
    const Ordinal g = parse_ordinal("w^2*2+w*3+1");
    CHECK(component_count(g) == 6);
    CHECK(component_exponent(g, 1) == 2);
    CHECK(component_exponent(g, 3) == 1);
    CHECK(component_exponent(g, 6) == 0);
    CHECK(partial_sum(g, 0) == Ordinal());
    CHECK(partial_sum(g, 4) == parse_ordinal("w^2*2+w*2"));
    CHECK(cnf_index(g, Ordinal()) == 1);
    CHECK(cnf_index(g, parse_ordinal("w^2")) == 1);
    CHECK(cnf_index(g, parse_ordinal("w^2+1")) == 2);
    CHECK(cnf_index(g, parse_ordinal("w^2*2+w+5")) == 4);
    CHECK(cnf_index(g, g) == 6);
    CHECK_THROWS_AS(cnf_index(g, g + Ordinal::natural(1)), DomainError);
}

TEST_CASE("cnf_index agrees with the partial-sum oracle") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Ordinal g = oracle::random_ordinal(rng, 3, 4);
        if (g.is_zero()) continue;
        for (const Ordinal& a : oracle::box(3, 3)) {
            if (g < a) break;
            if (a.is_zero()) continue;
            REQUIRE(cnf_index(g, a) == oracle::cnf_index(g, a));
        }
    }
}

TEST_CASE("the <* relation follows its definition") {
    const auto points = oracle::box(3, 2);
    for (const Ordinal& b : points) {
        for (const Ordinal& a : points) {
            REQUIRE(star_less(b, a) == oracle::star_less(b, a));
        }
        const Ordinal p = star_parent(b);
        CAPTURE(to_string(b));
        CHECK(oracle::star_immediate(b, p));
    }
    CHECK(star_parent(Ordinal()) == Ordinal::omega());
    CHECK(star_parent(parse_ordinal("w^2+w*3")) == parse_ordinal("w^2*2"));
    CHECK(star_parent(parse_ordinal("w+4")) == parse_ordinal("w*2"));
}
