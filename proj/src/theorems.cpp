#include "torhilb/theorems.hpp"

#include <algorithm>
#include <stdexcept>

namespace torhilb {

std::string conclusion_name(Conclusion c) {
    switch (c) {
        case Conclusion::CONFIRMED: return "CONFIRMED";
        case Conclusion::REFUTED: return "REFUTED";
        case Conclusion::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "?";
}

int spread_on_module(const Ideal& ideal, const FPModule& module) {
    Ideal ann = annihilator(module);
    if (ann.is_unit()) return 0;  // zero module
    return analytic_spread(ideal, ann);
}

namespace {

std::string ring_description(const RingPtr& ring) {
    std::string s = "k[";
    for (int v = 0; v < ring->nvars(); ++v) {
        if (v) s += ",";
        s += ring->var_name(v);
    }
    s += "], p=" + std::to_string(ring->field().characteristic());
    s += ring->order().kind() == OrderKind::DegRevLex ? ", degrevlex" : ", deglex";
    return s;
}

std::string fixture_description(int i, const Ideal& I, const Ideal* J, const FPModule& M,
                                const FPModule& N) {
    std::string s = ring_description(M.ring());
    s += "; i=" + std::to_string(i);
    s += "; I=" + I.str();
    if (J) s += "; J=" + J->str();
    s += "; M=" + M.str();
    s += "; N=" + N.str();
    return s;
}

bool hypotheses_hold(const std::vector<std::pair<std::string, bool>>& hyps, std::string* failed) {
    for (const auto& [name, ok] : hyps)
        if (!ok) {
            *failed = name;
            return false;
        }
    return true;
}

// radical containment of I in ann of the slot-j value of (M, N)
CriterionDetail radical_criterion(int j, const Ideal& I, const FPModule& M, const FPModule& N) {
    CriterionDetail detail;
    detail.slot = j;
    if (j < 0) {
        detail.annihilator = "(1)";
        detail.contained = true;
        return detail;
    }
    TorResult t = tor(j, M, N);
    Ideal ann = t.value.annihilator_ideal();
    detail.annihilator = ann.str();
    detail.contained = true;
    for (const auto& f : I.generators()) {
        bool in = radical_membership(f, ann);
        detail.generator_membership.emplace_back(f.str(), in);
        if (!in) detail.contained = false;
    }
    return detail;
}

int default_cap(const Ideal& I, const Ideal& J, const FPModule& M, const FPModule& N) {
    return std::max(0, spread_on_module(I, M) + spread_on_module(J, N) - 2);
}

void note_budgets(TheoremReport& rep, const GridRange& g, int cap) {
    rep.notes.push_back("grid n=" + std::to_string(g.n_lo) + ".." + std::to_string(g.n_hi) +
                        ", m=" + std::to_string(g.m_lo) + ".." + std::to_string(g.m_hi) +
                        "; onsets searched over {1..5}^2; degree cap " + std::to_string(cap));
}

Conclusion match_prediction(TheoremReport& rep, bool prediction, const FitReport& fit) {
    if (fit.verdict == FitVerdict::INFINITE_VALUES) {
        rep.notes.push_back("sampled values are infinite although the hypotheses hold");
        return Conclusion::INCONCLUSIVE;
    }
    bool empirical_poly = fit.verdict == FitVerdict::POLYNOMIAL;
    if (!empirical_poly)
        rep.notes.push_back(
            "NO_POLYNOMIAL_FOUND is a budgeted semi-decision; the conclusion leans on the "
            "criterion, which the fit corroborates");
    return prediction == empirical_poly ? Conclusion::CONFIRMED : Conclusion::REFUTED;
}

}  // namespace

TheoremReport check_theorem6(int i, const Ideal& I, const Ideal& J, const FPModule& M,
                             const FPModule& N, const GridRange& grid, const Budgets& budgets) {
    TheoremReport rep;
    rep.id = "theorem6";
    rep.fixture = fixture_description(i, I, &J, M, N);
    Ideal ann_sum = ideal_sum(ideal_sum(annihilator(M), annihilator(N)), J);
    rep.hypotheses = {{"I is proper", I.is_proper()},
                      {"J is proper", J.is_proper()},
                      {"ann(M) + ann(N) + J is zero-dimensional", is_zero_dimensional(ann_sum)}};
    std::string failed;
    if (!hypotheses_hold(rep.hypotheses, &failed)) {
        rep.notes.push_back("hypothesis failed: " + failed);
        rep.conclusion = Conclusion::INCONCLUSIVE;
        return rep;
    }

    for (int j : {i - 1, i}) rep.criteria.push_back(radical_criterion(j, I, M, N));
    bool predicted = rep.criteria[0].contained && rep.criteria[1].contained;
    rep.prediction = predicted;

    int cap = budgets.max_degree.value_or(default_cap(I, J, M, N));
    SampleTable table = sample_grid(i, M, N, I, J, grid, budgets.threads);
    rep.table_csv = table.csv();
    rep.fit = fit_bivariate(table, cap, default_onsets());
    note_budgets(rep, grid, cap);
    rep.conclusion = match_prediction(rep, predicted, *rep.fit);
    return rep;
}

TheoremReport check_corollary7(int i, const Ideal& I, const FPModule& M, const FPModule& N,
                               int n_lo, int n_hi, const Budgets& budgets) {
    TheoremReport rep;
    rep.id = "corollary7";
    rep.fixture = fixture_description(i, I, nullptr, M, N);
    Ideal ann_sum = ideal_sum(ideal_sum(annihilator(M), annihilator(N)), I);
    rep.hypotheses = {{"I is proper", I.is_proper()},
                      {"I + ann(M) + ann(N) is zero-dimensional", is_zero_dimensional(ann_sum)}};
    std::string failed;
    if (!hypotheses_hold(rep.hypotheses, &failed)) {
        rep.notes.push_back("hypothesis failed: " + failed);
        rep.conclusion = Conclusion::INCONCLUSIVE;
        return rep;
    }
    rep.prediction = true;  // the diagonal is always eventually polynomial here

    // the pairing-degree cap can undershoot on the diagonal, so widen it by
    // the grading dimension of the ambient ring
    int cap = budgets.max_degree.value_or(
        std::max(default_cap(I, I, M, N), M.ring()->nvars()));
    std::vector<Length> diag = sample_diagonal(i, M, N, I, n_lo, n_hi, budgets.threads);
    rep.table_csv = diagonal_csv(diag, n_lo);
    std::vector<int> onsets;
    for (int n0 = std::max(1, n_lo); n0 <= 5; ++n0) onsets.push_back(n0);
    rep.fit = fit_univariate(diag, n_lo, cap, onsets);
    rep.notes.push_back("diagonal n=" + std::to_string(n_lo) + ".." + std::to_string(n_hi) +
                        "; degree cap " + std::to_string(cap));
    if (rep.fit->verdict == FitVerdict::INFINITE_VALUES) {
        rep.notes.push_back("sampled values are infinite although the hypothesis holds");
        rep.conclusion = Conclusion::INCONCLUSIVE;
    } else {
        rep.conclusion = rep.fit->verdict == FitVerdict::POLYNOMIAL ? Conclusion::CONFIRMED
                                                                    : Conclusion::REFUTED;
    }
    return rep;
}

TheoremReport check_corollary8(int i, const Ideal& I, const Ideal& J, const FPModule& M,
                               const FPModule& N, const GridRange& grid, const Budgets& budgets) {
    TheoremReport rep;
    rep.id = "corollary8";
    rep.fixture = fixture_description(i, I, &J, M, N);
    Ideal ann_mn = ideal_sum(annihilator(M), annihilator(N));
    rep.hypotheses = {
        {"I is proper", I.is_proper()},
        {"J is proper", J.is_proper()},
        {"I + ann(M) + ann(N) is zero-dimensional", is_zero_dimensional(ideal_sum(ann_mn, I))},
        {"J + ann(M) + ann(N) is zero-dimensional", is_zero_dimensional(ideal_sum(ann_mn, J))}};
    std::string failed;
    if (!hypotheses_hold(rep.hypotheses, &failed)) {
        rep.notes.push_back("hypothesis failed: " + failed);
        rep.conclusion = Conclusion::INCONCLUSIVE;
        return rep;
    }

    Length li = tor(i, M, N).length;
    Length lprev = tor(i - 1, M, N).length;
    bool predicted = li.is_finite() && lprev.is_finite();
    rep.prediction = predicted;
    rep.notes.push_back("length in slot " + std::to_string(i) + ": " + li.str() +
                        "; slot " + std::to_string(i - 1) + ": " + lprev.str());

    // the radical criterion must agree with the finite-length criterion here
    CriterionDetail c0 = radical_criterion(i - 1, I, M, N);
    CriterionDetail c1 = radical_criterion(i, I, M, N);
    rep.criteria = {c0, c1};
    bool radical_route = c0.contained && c1.contained;
    if (radical_route != predicted) {
        rep.notes.push_back("criterion mismatch: the radical route disagrees with the "
                            "finite-length route (engine defect)");
        rep.conclusion = Conclusion::REFUTED;
        return rep;
    }

    int cap = budgets.max_degree.value_or(default_cap(I, J, M, N));
    SampleTable table = sample_grid(i, M, N, I, J, grid, budgets.threads);
    rep.table_csv = table.csv();
    rep.fit = fit_bivariate(table, cap, default_onsets());
    note_budgets(rep, grid, cap);
    rep.conclusion = match_prediction(rep, predicted, *rep.fit);
    return rep;
}

TheoremReport check_theorem9(int i, const Ideal& I, const Ideal& J, const FPModule& M,
                             const FPModule& N, const GridRange& grid, const Budgets& budgets) {
    TheoremReport rep;
    rep.id = "theorem9";
    rep.fixture = fixture_description(i, I, &J, M, N);
    Length tensor_len = tor(0, M, N).length;
    rep.hypotheses = {{"I is proper", I.is_proper()},
                      {"J is proper", J.is_proper()},
                      {"the tensor product has finite length", tensor_len.is_finite()}};
    std::string failed;
    if (!hypotheses_hold(rep.hypotheses, &failed)) {
        rep.notes.push_back("hypothesis failed: " + failed);
        rep.conclusion = Conclusion::INCONCLUSIVE;
        return rep;
    }

    SampleTable h = sample_grid(i, M, N, I, J, grid, budgets.threads);
    rep.table_csv = h.csv();

    Length c_const = tor(i, M, N).length;
    std::vector<Length> a_n, b_m;
    for (int n = grid.n_lo; n <= grid.n_hi; ++n) {
        if (i - 1 < 0) {
            a_n.push_back(Length::finite(0));
        } else {
            FPModule scaled = scaled_submodule(I, n, M).presented();
            a_n.push_back(tor(i - 1, scaled, N).length);
        }
    }
    for (int m = grid.m_lo; m <= grid.m_hi; ++m) {
        if (i - 1 < 0) {
            b_m.push_back(Length::finite(0));
        } else {
            b_m.push_back(tor(i - 1, M, scaled_submodule(J, m, N)).length);
        }
    }

    std::vector<std::vector<long long>> residual(
        static_cast<std::size_t>(grid.n_hi - grid.n_lo + 1),
        std::vector<long long>(static_cast<std::size_t>(grid.m_hi - grid.m_lo + 1), 0));
    for (int n = grid.n_lo; n <= grid.n_hi; ++n) {
        FPModule scaled_first;
        if (i - 2 >= 0) scaled_first = scaled_submodule(I, n, M).presented();
        for (int m = grid.m_lo; m <= grid.m_hi; ++m) {
            Length last = Length::finite(0);
            if (i - 2 >= 0) last = tor(i - 2, scaled_first, scaled_submodule(J, m, N)).length;
            Length sum = c_const + a_n[static_cast<std::size_t>(n - grid.n_lo)] +
                         b_m[static_cast<std::size_t>(m - grid.m_lo)] + last;
            const Length& lhs = h.at(n, m);
            if (lhs.is_infinite() || sum.is_infinite())
                throw std::logic_error("infinite term under a finite tensor product");
            residual[static_cast<std::size_t>(n - grid.n_lo)][static_cast<std::size_t>(m - grid.m_lo)] =
                lhs.value() - sum.value();
        }
    }

    std::string csv = "n\\m";
    for (int m = grid.m_lo; m <= grid.m_hi; ++m) csv += "," + std::to_string(m);
    csv += "\n";
    for (int n = grid.n_lo; n <= grid.n_hi; ++n) {
        csv += std::to_string(n);
        for (int m = grid.m_lo; m <= grid.m_hi; ++m)
            csv += "," + std::to_string(residual[static_cast<std::size_t>(n - grid.n_lo)]
                                                [static_cast<std::size_t>(m - grid.m_lo)]);
        csv += "\n";
    }
    rep.residual_csv = csv;

    int k_cap = std::min(grid.n_hi, grid.m_hi) - 2;
    int k_lo = std::max(grid.n_lo, grid.m_lo);
    int onset = -1;
    for (int k = k_lo; k <= k_cap && onset < 0; ++k) {
        bool ok = true;
        for (int n = std::max(k, grid.n_lo); n <= grid.n_hi && ok; ++n)
            for (int m = std::max(k, grid.m_lo); m <= grid.m_hi && ok; ++m)
                if (residual[static_cast<std::size_t>(n - grid.n_lo)]
                            [static_cast<std::size_t>(m - grid.m_lo)] != 0)
                    ok = false;
        if (ok) onset = k;
    }
    rep.onset = onset;
    for (const auto& row : residual)
        for (long long v : row)
            if (v != 0) ++rep.residual_nonzero;
    rep.notes.push_back("onset searched in [" + std::to_string(k_lo) + ", " +
                        std::to_string(k_cap) + "]");
    if (onset < 0) {
        rep.notes.push_back("no onset with an identically zero residual grid was found");
        rep.conclusion = Conclusion::REFUTED;
    } else {
        rep.notes.push_back("four-term identity holds exactly for n, m >= " + std::to_string(onset));
        rep.conclusion = Conclusion::CONFIRMED;
    }
    return rep;
}

TheoremReport check_prop10(const FitReport& fit, const Ideal& I, const Ideal& J,
                           const FPModule& M, const FPModule& N) {
    TheoremReport rep;
    rep.id = "prop10";
    rep.fixture = fixture_description(fit.univariate ? -1 : 0, I, &J, M, N);
    rep.fit = fit;
    if (fit.verdict != FitVerdict::POLYNOMIAL || !fit.poly) {
        rep.notes.push_back("precondition failed: the fit is not an accepted polynomial");
        rep.conclusion = Conclusion::INCONCLUSIVE;
        return rep;
    }
    int lm = spread_on_module(I, M);
    int ln = spread_on_module(J, N);
    int bound = lm + ln - 2;
    int deg = fit.poly->total_degree();
    rep.hypotheses = {{"fit verdict is POLYNOMIAL", true}};
    rep.prediction = deg <= bound;
    rep.notes.push_back("spread of I on M = " + std::to_string(lm) + ", spread of J on N = " +
                        std::to_string(ln) + "; bound " + std::to_string(bound) +
                        "; fitted total degree " + std::to_string(deg));
    rep.notes.push_back(
        "spread on a module is interpreted as the fiber-cone dimension of the ideal's image "
        "over the ring modulo the module's annihilator");
    rep.conclusion = deg <= bound ? Conclusion::CONFIRMED : Conclusion::REFUTED;
    return rep;
}

TheoremReport run_prop10(int i, const Ideal& I, const Ideal& J, const FPModule& M,
                         const FPModule& N, const GridRange& grid, const Budgets& budgets) {
    TheoremReport rep;
    rep.id = "prop10";
    rep.fixture = fixture_description(i, I, &J, M, N);
    int lm = spread_on_module(I, M);
    int ln = spread_on_module(J, N);
    int bound = lm + ln - 2;
    // fit one degree above the bound so a violation is observable
    int cap = budgets.max_degree.value_or(std::max(0, bound) + 1);
    rep.hypotheses = {{"I is proper", I.is_proper()}, {"J is proper", J.is_proper()}};
    std::string failed;
    if (!hypotheses_hold(rep.hypotheses, &failed)) {
        rep.notes.push_back("hypothesis failed: " + failed);
        rep.conclusion = Conclusion::INCONCLUSIVE;
        return rep;
    }
    rep.notes.push_back("spread of I on M = " + std::to_string(lm) + ", spread of J on N = " +
                        std::to_string(ln) + "; degree bound " + std::to_string(bound));
    rep.notes.push_back(
        "two sampled forms are checked: the scaled-quotient second argument and the literal "
        "scaled second argument; the bound is asserted on the literal form and flagged on "
        "the other");

    SampleTable literal = sample_second_scaled(i, M, N, I, J, grid, budgets.threads);
    rep.secondary_csv = literal.csv();
    FitReport literal_fit = fit_bivariate(literal, cap, default_onsets());

    SampleTable quotient_form = sample_grid(i, M, N, I, J, grid, budgets.threads);
    rep.table_csv = quotient_form.csv();
    FitReport quotient_fit = fit_bivariate(quotient_form, cap, default_onsets());

    rep.fit = literal_fit;
    rep.fit_secondary = quotient_fit;

    if (literal_fit.verdict != FitVerdict::POLYNOMIAL) {
        rep.notes.push_back("literal form did not fit; the bound has no claim here");
        rep.conclusion = Conclusion::INCONCLUSIVE;
        return rep;
    }
    int deg = literal_fit.poly->total_degree();
    bool holds = deg <= bound;
    rep.prediction = holds;
    rep.notes.push_back("literal form degree " + std::to_string(deg) +
                        (holds ? " <= bound" : " exceeds the bound"));
    if (quotient_fit.verdict == FitVerdict::POLYNOMIAL) {
        int qdeg = quotient_fit.poly->total_degree();
        if (qdeg <= bound)
            rep.notes.push_back("quotient form degree " + std::to_string(qdeg) + " <= bound");
        else
            rep.notes.push_back("flag: quotient form degree " + std::to_string(qdeg) +
                                " exceeds the bound; the two sampled forms genuinely differ");
    }
    rep.conclusion = holds ? Conclusion::CONFIRMED : Conclusion::REFUTED;
    return rep;
}

TheoremReport check_prop5(int i, const Ideal& I, const FPModule& M, const FPModule& N,
                          const Budgets& budgets) {
    TheoremReport rep;
    rep.id = "prop5";
    rep.fixture = fixture_description(i, I, nullptr, M, N);
    rep.hypotheses = {{"I is proper", I.is_proper()},
                      {"budget is at least 2", budgets.prop5_budget >= 2}};
    std::string failed;
    if (!hypotheses_hold(rep.hypotheses, &failed)) {
        rep.notes.push_back("hypothesis failed: " + failed);
        rep.conclusion = Conclusion::INCONCLUSIVE;
        return rep;
    }
    int budget = budgets.prop5_budget;

    auto contained_in_radical = [&](const Ideal& ann) {
        for (const auto& f : I.generators())
            if (!radical_membership(f, ann)) return false;
        return true;
    };

    // (a) the value itself
    TorResult t_plain = tor(i, M, N);
    bool cond_a = contained_in_radical(t_plain.value.annihilator_ideal());

    // (b) the scaled first argument at the budget power
    FPModule scaled_budget = scaled_submodule(I, budget, M).presented();
    bool cond_b = contained_in_radical(tor(i, scaled_budget, N).value.annihilator_ideal());

    // (c) every scaled power up to the budget
    bool cond_c = true;
    for (int n = 0; n <= budget && cond_c; ++n) {
        FPModule scaled = scaled_submodule(I, n, M).presented();
        if (!contained_in_radical(tor(i, scaled, N).value.annihilator_ideal())) cond_c = false;
    }

    // (d) annihilators of the induced images, every power up to the budget
    bool cond_d = true;
    for (int n = 0; n <= budget && cond_d; ++n) {
        InducedTorMap im = induced_image_A(i, I, n, M, N);
        Subquotient image(im.target.value.ambient(), im.image_numerator_gb,
                          im.target.value.denominator());
        if (!contained_in_radical(image.annihilator_ideal())) cond_d = false;
    }

    // (e) vanishing of the induced image near the budget
    bool cond_e = induced_image_A(i, I, budget, M, N).image_is_zero &&
                  induced_image_A(i, I, budget - 1, M, N).image_is_zero;

    rep.notes.push_back(std::string("(a) radical containment in ann of the value: ") +
                        (cond_a ? "yes" : "no"));
    rep.notes.push_back(std::string("(b) same for the budget-scaled first argument: ") +
                        (cond_b ? "yes" : "no"));
    rep.notes.push_back(std::string("(c) same for every power up to the budget: ") +
                        (cond_c ? "yes" : "no"));
    rep.notes.push_back(std::string("(d) same for annihilators of induced images: ") +
                        (cond_d ? "yes" : "no"));
    rep.notes.push_back(std::string("(e) induced image vanishes near the budget: ") +
                        (cond_e ? "yes" : "no"));

    bool all = cond_a && cond_b && cond_c && cond_d && cond_e;
    bool none = !cond_a && !cond_b && !cond_c && !cond_d && !cond_e;
    rep.prediction = cond_a;
    if (all || none) {
        rep.conclusion = Conclusion::CONFIRMED;
        rep.notes.push_back("all five conditions agree");
    } else {
        rep.conclusion = Conclusion::REFUTED;
        rep.notes.push_back("the five conditions disagree (engine defect)");
    }
    return rep;
}

std::vector<TheoremReport> remark_fixtures(std::int64_t characteristic, const Budgets& budgets) {
    RingPtr R = Ring::make(characteristic, {"x", "y"});
    Ideal P(R, {parse_polynomial(R, "x"), parse_polynomial(R, "y")});
    FPModule rx = FPModule::cyclic_quotient(Ideal(R, {parse_polynomial(R, "x")}));
    GridRange grid{1, 8, 1, 8};

    std::vector<TheoremReport> out;
    // family one: powers of a regular element whose ideal is not cofinite
    for (int i : {1, 2}) {
        TheoremReport rep = check_corollary8(i, P, P, rx, rx, grid, budgets);
        rep.id = "remark-family1-i" + std::to_string(i);
        rep.notes.push_back("family: quotients by powers of a regular element; the slot-1 value "
                            "has infinite length, so no bivariate polynomial can exist");
        out.push_back(std::move(rep));
    }
    // family two: modules annihilated by a non-maximal prime
    for (int i : {0, 1, 2}) {
        TheoremReport rep = check_corollary8(i, P, P, rx, rx, grid, budgets);
        rep.id = "remark-family2-i" + std::to_string(i);
        Length l0 = tor(0, rx, rx).length;
        Length l1 = tor(1, rx, rx).length;
        rep.notes.push_back("family: annihilator is the non-maximal prime (x); value lengths in "
                            "slots 0 and 1 are " + l0.str() + " and " + l1.str());
        out.push_back(std::move(rep));
    }
    return out;
}

std::string explain(const TheoremReport& r) {
    std::string s = "== " + r.id + " ==\n";
    s += "fixture: " + r.fixture + "\n";
    for (const auto& [name, ok] : r.hypotheses)
        s += "hypothesis: " + name + ": " + (ok ? "holds" : "fails") + "\n";
    for (const auto& c : r.criteria) {
        s += "criterion slot " + std::to_string(c.slot) + ": annihilator " + c.annihilator + "\n";
        for (const auto& [gen, in] : c.generator_membership)
            s += "  generator " + gen + (in ? " lies in the radical\n" : " escapes the radical\n");
        s += c.contained ? "  -> contained\n" : "  -> not contained\n";
    }
    if (r.prediction) s += std::string("prediction: ") + (*r.prediction ? "yes" : "no") + "\n";
    if (r.fit) s += r.fit->str();
    if (r.fit_secondary) s += "second form:\n" + r.fit_secondary->str();
    if (r.residual_csv) {
        s += "residual grid:\n" + *r.residual_csv;
        if (r.onset >= 0) s += "onset: " + std::to_string(r.onset) + "\n";
    }
    for (const auto& n : r.notes) s += "note: " + n + "\n";
    s += "conclusion: " + conclusion_name(r.conclusion) + "\n";
    return s;
}

}  // namespace torhilb
