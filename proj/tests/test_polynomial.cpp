#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "torhilb/polynomial.hpp"

using namespace torhilb;

namespace {
RingPtr ring_xy(OrderKind kind = OrderKind::DegRevLex) {
    return Ring::make(32003, {"x", "y"}, kind);
}
}  // namespace

TEST_CASE("parser round trips simple inputs") {
    auto R = ring_xy();
    auto f = parse_polynomial(R, "x^2*y + 3y^3");
    CHECK(f.nterms() == 2);
    CHECK(f.str() == "x^2*y + 3*y^3");
    CHECK(parse_polynomial(R, "0").is_zero());
    CHECK(parse_polynomial(R, " - x + x ").is_zero());
    CHECK(parse_polynomial(R, "2 * x * x * y") == parse_polynomial(R, "2x^2y"));
    CHECK(parse_polynomial(R, "-1").str() == "32002");
    CHECK_THROWS_AS(parse_polynomial(R, "x + q"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(R, "x + + +"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(R, "x ^"), ParseError);
}

TEST_CASE("addition") {
    auto R = ring_xy();
    auto x = Polynomial::variable(R, 0);
    auto y = Polynomial::variable(R, 1);
    CHECK((x + y) + (-x) == y);
    auto f = parse_polynomial(R, "x^2 + 3x*y");
    CHECK(Polynomial(R) + f == f);
    CHECK(parse_polynomial(R, "x^2+y^2") + parse_polynomial(R, "x^2") ==
          parse_polynomial(R, "2x^2 + y^2"));
}

TEST_CASE("multiplication") {
    auto R = ring_xy();
    auto x = Polynomial::variable(R, 0);
    auto y = Polynomial::variable(R, 1);
    CHECK((x + y) * (x - y) == parse_polynomial(R, "x^2 - y^2"));
    CHECK(((x + y) * Polynomial(R)).is_zero());
    CHECK((x + y) * (x + y) == parse_polynomial(R, "x^2 + 2x*y + y^2"));
}

TEST_CASE("degree of a homogeneous product is additive") {
    auto R = ring_xy();
    auto gen = oracle::rng(11);
    for (int it = 0; it < 50; ++it) {
        auto f = oracle::random_homogeneous(R, 2, gen);
        auto g = oracle::random_homogeneous(R, 3, gen);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK((f * g).degree() == 5);
        CHECK((f * g).is_homogeneous());
    }
}

TEST_CASE("leading terms under both orders") {
    auto R = ring_xy();
    auto f = parse_polynomial(R, "x^2*y + x*y^2");
    CHECK(f.leading_term().mono == Monomial(std::vector<std::int32_t>{2, 1}));
    CHECK(Polynomial::variable(R, 0).leading_term().mono ==
          Monomial(std::vector<std::int32_t>{1, 0}));

    auto L = ring_xy(OrderKind::DegLex);
    auto g = parse_polynomial(L, "x*y^2 + y^3 + x");
    CHECK(g.leading_term().mono == Monomial(std::vector<std::int32_t>{1, 2}));
    CHECK_THROWS_AS(Polynomial(L).leading_term(), std::domain_error);
}

TEST_CASE("degrevlex and deglex disagree where expected") {
    // x*z vs y^2 with x > y > z: degrevlex ranks x*z below y^2? both degree 2;
    // revlex looks at the last variable: x*z has z > 0, so x*z < y^2.
    auto R3 = Ring::make(32003, {"x", "y", "z"}, OrderKind::DegRevLex);
    auto L3 = Ring::make(32003, {"x", "y", "z"}, OrderKind::DegLex);
    Monomial xz(std::vector<std::int32_t>{1, 0, 1});
    Monomial yy(std::vector<std::int32_t>{0, 2, 0});
    CHECK(R3->order().less(xz, yy));
    CHECK(L3->order().greater(xz, yy));
}

TEST_CASE("ring axioms on random homogeneous triples") {
    auto R = ring_xy();
    auto gen = oracle::rng(13);
    for (int it = 0; it < 40; ++it) {
        auto f = oracle::random_homogeneous(R, 1 + it % 3, gen);
        auto g = oracle::random_homogeneous(R, 2, gen);
        auto h = oracle::random_homogeneous(R, 3, gen);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f + g == g + f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f - f).is_zero());
    }
}

TEST_CASE("order is multiplicative on random monomial triples") {
    auto R = Ring::make(32003, {"x", "y", "z"});
    auto gen = oracle::rng(17);
    std::uniform_int_distribution<std::int32_t> d(0, 6);
    for (int it = 0; it < 2000; ++it) {
        Monomial u(std::vector<std::int32_t>{d(gen), d(gen), d(gen)});
        Monomial v(std::vector<std::int32_t>{d(gen), d(gen), d(gen)});
        Monomial w(std::vector<std::int32_t>{d(gen), d(gen), d(gen)});
        int before = R->order().compare(u, v);
        int after = R->order().compare(u * w, v * w);
        CHECK(before == after);
    }
}

TEST_CASE("normalization is idempotent") {
    auto R = ring_xy();
    auto gen = oracle::rng(19);
    for (int it = 0; it < 50; ++it) {
        auto f = oracle::random_homogeneous(R, 3, gen);
        auto again = Polynomial::from_terms(R, f.terms());
        CHECK(f == again);
    }
}

TEST_CASE("exponent overflow aborts with a diagnostic") {
    auto R = ring_xy();
    auto big = Polynomial::variable(R, 0, 1 << 23);
    CHECK_THROWS_AS(big * big * big, std::overflow_error);
}

TEST_CASE("transport between rings matches variables by name") {
    auto R = ring_xy();
    auto S = Ring::make(32003, {"y", "x", "z"});
    auto f = parse_polynomial(R, "x^2 + 2x*y");
    auto g = transport(f, S);
    CHECK(g == parse_polynomial(S, "x^2 + 2x*y"));
    CHECK(transport(g, R) == f);
    auto h = parse_polynomial(S, "z + x");
    CHECK_THROWS_AS(transport(h, R), std::invalid_argument);
    CHECK(transport(substitute_zero(h, {S->var_index("z")}), R) == parse_polynomial(R, "x"));
}
