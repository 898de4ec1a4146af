#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "torhilb/theorems.hpp"

using namespace torhilb;

namespace {

struct Fix {
    RingPtr R;
    Ideal P;
    FPModule free1, k, rx, ry;

    Fix() {
        R = Ring::make(32003, {"x", "y"});
        P = Ideal(R, {parse_polynomial(R, "x"), parse_polynomial(R, "y")});
        free1 = FPModule::free_module(R, 1);
        k = FPModule::cyclic_quotient(P);
        rx = FPModule::cyclic_quotient(Ideal(R, {parse_polynomial(R, "x")}));
        ry = FPModule::cyclic_quotient(Ideal(R, {parse_polynomial(R, "y")}));
    }
};

const GridRange kGrid{1, 8, 1, 8};

}  // namespace

TEST_CASE("polynomiality criterion: constant table with a true prediction") {
    Fix f;
    TheoremReport rep = check_theorem6(0, f.P, f.P, f.rx, f.ry, kGrid, Budgets{});
    CHECK(rep.conclusion == Conclusion::CONFIRMED);
    REQUIRE(rep.prediction.has_value());
    CHECK(*rep.prediction == true);
    CHECK(rep.fit->verdict == FitVerdict::POLYNOMIAL);
    CHECK(rep.fit->poly->total_degree() == 0);
    CHECK(rep.fit->poly->evaluate(5, 7) == 1);
}

TEST_CASE("polynomiality criterion: failing prediction with region evidence") {
    Fix f;
    TheoremReport rep = check_theorem6(1, f.P, f.P, f.rx, f.rx, kGrid, Budgets{});
    CHECK(rep.conclusion == Conclusion::CONFIRMED);
    CHECK(*rep.prediction == false);
    CHECK(rep.fit->verdict == FitVerdict::NO_POLYNOMIAL_FOUND);
    CHECK(rep.fit->region_evidence.has_value());
    // the slot-1 criterion reports y escaping the radical of (x)
    bool saw_escape = false;
    for (const auto& c : rep.criteria)
        for (const auto& [gen, in] : c.generator_membership)
            if (!in) saw_escape = true;
    CHECK(saw_escape);
}

TEST_CASE("polynomiality criterion on free modules fails through the zeroth slot") {
    Fix f;
    TheoremReport rep = check_theorem6(1, f.P, f.P, f.free1, f.free1, kGrid, Budgets{});
    CHECK(rep.conclusion == Conclusion::CONFIRMED);
    CHECK(*rep.prediction == false);  // the zeroth slot has annihilator (0)
    CHECK(rep.fit->verdict == FitVerdict::NO_POLYNOMIAL_FOUND);
}

TEST_CASE("polynomiality criterion with a growing fitted polynomial") {
    Fix f;
    // R ⊕ R/(x) against the residue field: linear growth in n
    FPModule m = FPModule::from_columns(
        f.R, 2, {ModVec(std::vector<Polynomial>{parse_polynomial(f.R, "0"), parse_polynomial(f.R, "x")})});
    Budgets b;
    b.max_degree = 2;  // the default pairing cap undershoots this degenerate pairing
    TheoremReport rep = check_theorem6(1, f.P, f.P, m, f.k, kGrid, b);
    CHECK(rep.conclusion == Conclusion::CONFIRMED);
    CHECK(*rep.prediction == true);
    REQUIRE(rep.fit->verdict == FitVerdict::POLYNOMIAL);
    CHECK(rep.fit->poly->total_degree() == 1);
    CHECK(rep.fit->poly->evaluate(9, 9) == 12);  // n + 3
}

TEST_CASE("hypothesis failure is inconclusive") {
    Fix f;
    Ideal small(f.R, {parse_polynomial(f.R, "x")});
    TheoremReport rep = check_theorem6(0, f.P, small, f.free1, f.free1, kGrid, Budgets{});
    CHECK(rep.conclusion == Conclusion::INCONCLUSIVE);
}

TEST_CASE("diagonal check on the full ring") {
    Fix f;
    TheoremReport rep = check_corollary7(0, f.P, f.free1, f.free1, 1, 8, Budgets{});
    CHECK(rep.conclusion == Conclusion::CONFIRMED);
    auto mono = rep.fit->poly->monomial_basis();
    CHECK(mono.at({2, 0}) == Fraction(1, 2));
    CHECK(mono.at({1, 0}) == Fraction(1, 2));
}

TEST_CASE("diagonal check succeeds where the bivariate table fails") {
    Fix f;
    TheoremReport rep = check_corollary7(1, f.P, f.rx, f.rx, 1, 8, Budgets{});
    CHECK(rep.conclusion == Conclusion::CONFIRMED);
    REQUIRE(rep.fit->verdict == FitVerdict::POLYNOMIAL);
    // the diagonal values are 2n
    CHECK(rep.fit->poly->evaluate(6, 0) == 12);
    CHECK(rep.fit->poly->total_degree() == 1);
}

TEST_CASE("diagonal check on a finite-length pair is constant") {
    Fix f;
    TheoremReport rep = check_corollary7(2, f.P, f.k, f.k, 1, 8, Budgets{});
    CHECK(rep.conclusion == Conclusion::CONFIRMED);
    CHECK(rep.fit->poly->total_degree() == 0);
    CHECK(rep.fit->poly->evaluate(3, 0) == 1);
}

TEST_CASE("finite-length criterion matches the radical criterion and the fit") {
    Fix f;
    TheoremReport r1 = check_corollary8(1, f.P, f.P, f.rx, f.rx, kGrid, Budgets{});
    CHECK(r1.conclusion == Conclusion::CONFIRMED);
    CHECK(*r1.prediction == false);

    TheoremReport r2 = check_corollary8(0, f.P, f.P, f.free1, f.free1, kGrid, Budgets{});
    CHECK(r2.conclusion == Conclusion::CONFIRMED);
    CHECK(*r2.prediction == false);
    CHECK(r2.fit->region_evidence.has_value());

    TheoremReport r3 = check_corollary8(1, f.P, f.P, f.rx, f.ry, kGrid, Budgets{});
    CHECK(r3.conclusion == Conclusion::CONFIRMED);
    CHECK(*r3.prediction == true);
    CHECK(r3.fit->verdict == FitVerdict::POLYNOMIAL);
}

TEST_CASE("four-term identity fixtures") {
    Fix f;
    GridRange g{1, 6, 1, 6};
    TheoremReport r1 = check_theorem9(1, f.P, f.P, f.k, f.k, g, Budgets{});
    CHECK(r1.conclusion == Conclusion::CONFIRMED);
    CHECK(r1.onset >= 1);

    TheoremReport r2 = check_theorem9(0, f.P, f.P, f.rx, f.ry, g, Budgets{});
    CHECK(r2.conclusion == Conclusion::CONFIRMED);

    TheoremReport r3 = check_theorem9(1, f.P, f.P, f.k, f.free1, g, Budgets{});
    CHECK(r3.conclusion == Conclusion::CONFIRMED);

    // infinite tensor length bows out
    TheoremReport r4 = check_theorem9(1, f.P, f.P, f.rx, f.rx, g, Budgets{});
    CHECK(r4.conclusion == Conclusion::INCONCLUSIVE);
}

TEST_CASE("degree bound checks") {
    Fix f;
    TheoremReport diag = check_corollary7(0, f.P, f.free1, f.free1, 1, 8, Budgets{});
    TheoremReport bound = check_prop10(*diag.fit, f.P, f.P, f.free1, f.free1);
    CHECK(bound.conclusion == Conclusion::CONFIRMED);  // degree 2 <= 2 + 2 - 2

    TheoremReport both = run_prop10(0, f.P, f.P, f.rx, f.ry, kGrid, Budgets{});
    CHECK(both.conclusion == Conclusion::CONFIRMED);  // constant, bound 0

    // a fit that is not polynomial leaves the bound without a claim
    TheoremReport t6 = check_theorem6(1, f.P, f.P, f.rx, f.rx, kGrid, Budgets{});
    TheoremReport nop = check_prop10(*t6.fit, f.P, f.P, f.rx, f.rx);
    CHECK(nop.conclusion == Conclusion::INCONCLUSIVE);
}

TEST_CASE("five-way equivalence fixtures") {
    Fix f;
    TheoremReport r1 = check_prop5(1, f.P, f.k, f.k, Budgets{});
    CHECK(r1.conclusion == Conclusion::CONFIRMED);
    CHECK(*r1.prediction == true);

    TheoremReport r2 = check_prop5(1, f.P, f.rx, f.rx, Budgets{});
    CHECK(r2.conclusion == Conclusion::CONFIRMED);
    CHECK(*r2.prediction == false);

    TheoremReport r3 = check_prop5(1, f.P, f.free1, f.free1, Budgets{});
    CHECK(r3.conclusion == Conclusion::CONFIRMED);
    CHECK(*r3.prediction == true);
}

TEST_CASE("stock counterexample families") {
    auto reports = remark_fixtures(32003, Budgets{});
    REQUIRE(reports.size() == 5);
    for (const auto& r : reports) {
        CHECK(r.conclusion == Conclusion::CONFIRMED);
        REQUIRE(r.prediction.has_value());
        CHECK(*r.prediction == false);
        CHECK(r.fit->verdict == FitVerdict::NO_POLYNOMIAL_FOUND);
    }
    // the slot-1 and slot-2 families carry region evidence
    CHECK(reports[0].fit->region_evidence.has_value());
    CHECK(reports[1].fit->region_evidence.has_value());
}

TEST_CASE("narratives render") {
    Fix f;
    TheoremReport rep = check_theorem6(1, f.P, f.P, f.rx, f.rx, kGrid, Budgets{});
    std::string text = explain(rep);
    CHECK(text.find("CONFIRMED") != std::string::npos);
    CHECK(text.find("escapes the radical") != std::string::npos);
    CHECK(text.find("region fits disagree") != std::string::npos);
}
