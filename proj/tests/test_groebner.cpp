#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "torhilb/groebner.hpp"

using namespace torhilb;

namespace {

RingPtr ring_xy(OrderKind kind = OrderKind::DegRevLex) {
    return Ring::make(32003, {"x", "y"}, kind);
}

Ideal ideal_of(const RingPtr& R, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(parse_polynomial(R, s));
    return Ideal(R, ps);
}

// S-polynomial reduced against the basis; the certificate that a basis is a
// Groebner basis is that this vanishes for every pair.
bool spoly_certificate(const GroebnerBasis& gb) {
    if (gb.elements.empty()) return true;
    const RingPtr& R = gb.elements.front().ring();
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
            const auto& f = gb.elements[i];
            const auto& g = gb.elements[j];
            Monomial l = Monomial::lcm(f.leading_term().mono, g.leading_term().mono);
            auto a = f.times_term(Monomial::quotient(l, f.leading_term().mono),
                                  R->field().inv(f.leading_coeff()));
            auto b = g.times_term(Monomial::quotient(l, g.leading_term().mono),
                                  R->field().inv(g.leading_coeff()));
            if (!normal_form(a - b, gb).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("reduced bases of basic ideals") {
    auto R = ring_xy();
    auto I = ideal_of(R, {"x", "y"});
    CHECK(I.basis().elements.size() == 2);
    CHECK(I.contains(parse_polynomial(R, "x")));
    CHECK(spoly_certificate(I.basis()));

    auto J = ideal_of(R, {"x^2 + 2x*y + y^2", "x^2"});
    const auto& gb = J.basis();
    REQUIRE(gb.elements.size() == 3);
    // descending leading terms: y^3, x^2, x*y; the last carries 1/2 * y^2
    CHECK(gb.elements[0].leading_term().mono == Monomial(std::vector<std::int32_t>{0, 3}));
    CHECK(gb.elements[1].leading_term().mono == Monomial(std::vector<std::int32_t>{2, 0}));
    CHECK(gb.elements[2].leading_term().mono == Monomial(std::vector<std::int32_t>{1, 1}));
    CHECK(gb.elements[2] == parse_polynomial(R, "x*y + 16002y^2"));  // 16002 = 1/2 mod 32003
    CHECK(J.contains(parse_polynomial(R, "y^3")));
    CHECK(spoly_certificate(gb));

    CHECK(Ideal::zero(R).basis().elements.empty());
}

TEST_CASE("normal forms") {
    auto R = ring_xy();
    auto I = ideal_of(R, {"x"});
    CHECK(normal_form(parse_polynomial(R, "x^2"), I.basis()).is_zero());
    CHECK(normal_form(parse_polynomial(R, "y^2"), I.basis()) == parse_polynomial(R, "y^2"));
    auto J = ideal_of(R, {"x^2", "x*y"});
    CHECK(normal_form(parse_polynomial(R, "x^2*y + y^3"), J.basis()) ==
          parse_polynomial(R, "y^3"));
}

TEST_CASE("normal form is idempotent on random polynomials") {
    auto R = ring_xy();
    auto I = ideal_of(R, {"x^2 + 2x*y + y^2", "x^2"});
    auto gen = oracle::rng(23);
    for (int it = 0; it < 30; ++it) {
        auto f = oracle::random_homogeneous(R, 2 + it % 4, gen);
        auto nf = normal_form(f, I.basis());
        CHECK(normal_form(nf, I.basis()) == nf);
        CHECK(I.contains(f - nf));
    }
}

TEST_CASE("membership matches brute-force divisibility for monomial ideals") {
    auto R = Ring::make(32003, {"x", "y", "z"});
    auto I = ideal_of(R, {"x^2", "x*y*z", "y^4"});
    std::vector<Monomial> gens = {Monomial(std::vector<std::int32_t>{2, 0, 0}),
                                  Monomial(std::vector<std::int32_t>{1, 1, 1}),
                                  Monomial(std::vector<std::int32_t>{0, 4, 0})};
    for (int d = 0; d <= 8; ++d) {
        for (const auto& m : oracle::monomials_of_degree(3, d)) {
            bool lib = I.contains(Polynomial::term(R, m, 1));
            bool ref = oracle::monomial_ideal_member(m, gens);
            CHECK(lib == ref);
        }
    }
}

TEST_CASE("ideal powers") {
    auto R = ring_xy();
    auto I = ideal_of(R, {"x", "y"});
    auto I2 = ideal_power(I, 2);
    CHECK(I2.basis().elements.size() == 3);
    CHECK(I2.contains(parse_polynomial(R, "x^2")));
    CHECK(I2.contains(parse_polynomial(R, "x*y")));
    CHECK(I2.contains(parse_polynomial(R, "y^2")));
    CHECK(!I2.contains(parse_polynomial(R, "x")));

    CHECK(ideal_power(I, 0).is_unit());

    auto J2 = ideal_power(ideal_of(R, {"x^2", "x*y"}), 2);
    CHECK(ideal_equal(J2, ideal_of(R, {"x^4", "x^3*y", "x^2*y^2"})));
}

TEST_CASE("intersections") {
    auto R = ring_xy();
    CHECK(ideal_equal(ideal_intersect(ideal_of(R, {"x"}), ideal_of(R, {"y"})),
                      ideal_of(R, {"x*y"})));
    auto I = ideal_of(R, {"x^2", "x*y"});
    CHECK(ideal_equal(ideal_intersect(I, Ideal::unit_ideal(R)), I));
    CHECK(ideal_equal(ideal_intersect(ideal_of(R, {"x", "y"}), ideal_of(R, {"x"})),
                      ideal_of(R, {"x"})));
}

TEST_CASE("intersection is symmetric and contained in both arguments") {
    auto R = ring_xy();
    auto gen = oracle::rng(29);
    for (int it = 0; it < 10; ++it) {
        auto f = oracle::random_homogeneous(R, 2, gen);
        auto g = oracle::random_homogeneous(R, 3, gen);
        auto h = oracle::random_homogeneous(R, 2, gen);
        Ideal a(R, {f, g}), b(R, {h});
        auto ab = ideal_intersect(a, b);
        auto ba = ideal_intersect(b, a);
        CHECK(ideal_equal(ab, ba));
        for (const auto& e : ab.basis().elements) {
            CHECK(a.contains(e));
            CHECK(b.contains(e));
        }
    }
}

TEST_CASE("colon ideals") {
    auto R = ring_xy();
    CHECK(ideal_equal(ideal_colon(ideal_of(R, {"x*y"}), ideal_of(R, {"x"})),
                      ideal_of(R, {"y"})));
    auto I = ideal_of(R, {"x^2", "x*y"});
    CHECK(ideal_equal(ideal_colon(I, Ideal::unit_ideal(R)), I));
    CHECK(ideal_equal(ideal_colon(ideal_of(R, {"x^2"}), ideal_of(R, {"x"})),
                      ideal_of(R, {"x"})));
}

TEST_CASE("radical membership") {
    auto R = ring_xy();
    CHECK(radical_membership(parse_polynomial(R, "x"), ideal_of(R, {"x^2"})));
    CHECK(!radical_membership(parse_polynomial(R, "y"), ideal_of(R, {"x^2"})));
    CHECK(radical_membership(parse_polynomial(R, "x + y"), ideal_of(R, {"x^2", "y^2"})));
    CHECK(radical_membership(Polynomial(R), ideal_of(R, {"x^2"})));
}

TEST_CASE("dimension") {
    auto R = ring_xy();
    CHECK(krull_dimension(ideal_of(R, {"x", "y"})) == 0);
    CHECK(krull_dimension(ideal_of(R, {"x"})) == 1);
    CHECK(krull_dimension(Ideal::zero(R)) == 2);
    CHECK(krull_dimension(Ideal::unit_ideal(R)) == -1);
}

TEST_CASE("zero-dimensionality test") {
    auto R = ring_xy();
    CHECK(is_zero_dimensional(ideal_of(R, {"x^2", "y^3"})));
    CHECK(!is_zero_dimensional(ideal_of(R, {"x"})));
    CHECK(is_zero_dimensional(ideal_of(R, {"x^2 + y^2", "x*y"})));
    CHECK(!is_zero_dimensional(Ideal::unit_ideal(R)));
}

TEST_CASE("quotient lengths") {
    auto R = ring_xy();
    auto P = ideal_of(R, {"x", "y"});
    for (int n = 1; n <= 6; ++n)
        CHECK(quotient_length(ideal_power(P, n)) == Length::finite(n * (n + 1) / 2));
    CHECK(quotient_length(ideal_of(R, {"x^2", "x*y", "y^3"})) == Length::finite(4));
    CHECK(quotient_length(ideal_of(R, {"x"})) == Length::infinite());
    CHECK(quotient_length(Ideal::unit_ideal(R)) == Length::finite(0));
}

TEST_CASE("length and dimension do not depend on the order") {
    for (auto kind : {OrderKind::DegRevLex, OrderKind::DegLex}) {
        auto R = ring_xy(kind);
        CHECK(quotient_length(ideal_of(R, {"x^2 + y^2", "x*y"})) == Length::finite(4));
        CHECK(krull_dimension(ideal_of(R, {"x^2 + y^2", "x*y"})) == 0);
        CHECK(is_zero_dimensional(ideal_of(R, {"x^2 + y^2", "x*y"})));
        CHECK(radical_membership(parse_polynomial(R, "x + y"), ideal_of(R, {"x^2", "y^2"})));
    }
}

TEST_CASE("length is additive over sums and intersections of monomial ideals") {
    auto R = ring_xy();
    auto gen = oracle::rng(31);
    std::uniform_int_distribution<std::int32_t> d(1, 4);
    for (int it = 0; it < 12; ++it) {
        auto I = ideal_of(R, {"x^" + std::to_string(d(gen)), "y^" + std::to_string(d(gen))});
        auto J = ideal_of(R, {"x^" + std::to_string(d(gen)),
                              "x*y^" + std::to_string(d(gen)),
                              "y^" + std::to_string(d(gen) + 1)});
        auto lhs = quotient_length(I).value() + quotient_length(J).value();
        auto rhs = quotient_length(ideal_intersect(I, J)).value() +
                   quotient_length(ideal_sum(I, J)).value();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("analytic spread") {
    auto R = ring_xy();
    auto zero = Ideal::zero(R);
    CHECK(analytic_spread(ideal_of(R, {"x", "y"}), zero) == 2);
    CHECK(analytic_spread(ideal_of(R, {"x"}), zero) == 1);
    CHECK(analytic_spread(ideal_of(R, {"x", "y"}), ideal_of(R, {"x"})) == 1);
}

TEST_CASE("buchberger output is deterministic and order-insensitive to input") {
    auto R = ring_xy();
    auto a = ideal_of(R, {"x^2 + 2x*y + y^2", "x^2"});
    auto b = ideal_of(R, {"x^2", "x^2 + 2x*y + y^2"});
    CHECK(ideal_equal(a, b));
}
