#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torhilb/sampler.hpp"

namespace torhilb {

enum class Conclusion { CONFIRMED, REFUTED, INCONCLUSIVE };
std::string conclusion_name(Conclusion c);

// One radical-containment criterion evaluation: does every generator of the
// scaling ideal lie in the radical of the annihilator of the slot-j value?
struct CriterionDetail {
    int slot = 0;
    std::string annihilator;
    std::vector<std::pair<std::string, bool>> generator_membership;
    bool contained = false;
};

struct TheoremReport {
    std::string id;
    std::string fixture;  // reproducible description of all inputs
    std::vector<std::pair<std::string, bool>> hypotheses;
    std::optional<bool> prediction;  // predicted polynomiality (or bound compliance)
    std::vector<CriterionDetail> criteria;
    std::optional<FitReport> fit;
    std::optional<FitReport> fit_secondary;  // the second sampled form, when two are checked
    std::optional<std::string> table_csv;
    std::optional<std::string> secondary_csv;
    // exact-identity checking
    std::optional<std::string> residual_csv;
    long long residual_nonzero = 0;
    int onset = -1;
    std::vector<std::string> notes;
    Conclusion conclusion = Conclusion::INCONCLUSIVE;
};

struct Budgets {
    int prop5_budget = 8;
    int stabilization_budget = 4;
    std::optional<int> max_degree;  // fitter degree cap override
    int threads = 1;
};

// analytic spread of the image of `ideal` in R/ann(module); 0 for the zero module
int spread_on_module(const Ideal& ideal, const FPModule& module);

// polynomiality criterion: radical containment in slots {i-1, i} against the
// fitted bivariate table
TheoremReport check_theorem6(int i, const Ideal& I, const Ideal& J, const FPModule& M,
                             const FPModule& N, const GridRange& grid, const Budgets& budgets);

// diagonal specialization: always polynomial under the one-sided hypothesis
TheoremReport check_corollary7(int i, const Ideal& I, const FPModule& M, const FPModule& N,
                               int n_lo, int n_hi, const Budgets& budgets);

// finite-length criterion, equivalent to the radical criterion when both
// scaled hypotheses hold; both routes are computed and compared
TheoremReport check_corollary8(int i, const Ideal& I, const Ideal& J, const FPModule& M,
                               const FPModule& N, const GridRange& grid, const Budgets& budgets);

// four-term exact identity past a searched onset, under finite tensor length
TheoremReport check_theorem9(int i, const Ideal& I, const Ideal& J, const FPModule& M,
                             const FPModule& N, const GridRange& grid, const Budgets& budgets);

// degree bound on an accepted fit
TheoremReport check_prop10(const FitReport& fit, const Ideal& I, const Ideal& J,
                           const FPModule& M, const FPModule& N);

// samples and fits both sampled forms (second argument N/J^m N and J^m N) and
// checks the degree bound on each, flagging discrepancies
TheoremReport run_prop10(int i, const Ideal& I, const Ideal& J, const FPModule& M,
                         const FPModule& N, const GridRange& grid, const Budgets& budgets);

// five equivalent vanishing conditions evaluated within a budget; any
// disagreement is an engine defect
TheoremReport check_prop5(int i, const Ideal& I, const FPModule& M, const FPModule& N,
                          const Budgets& budgets);

// the two stock families whose bivariate tables are not polynomial
std::vector<TheoremReport> remark_fixtures(std::int64_t characteristic, const Budgets& budgets);

std::string explain(const TheoremReport& r);

}  // namespace torhilb
