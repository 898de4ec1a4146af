#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torhilb/homology.hpp"

namespace torhilb {

// Reduced rational number with small components; enough for the monomial
// basis expansion of integer-valued polynomials of desk-scale degree.
struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;
    Fraction(long long n, long long d);
    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend Fraction operator*(const Fraction& a, const Fraction& b);
    bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
    std::string str() const;
};

// Integer-valued polynomial in the binomial basis anchored at an onset:
//   sum over (a, b) of coeffs[a][b] * C(n - n0, a) * C(m - m0, b).
// Univariate polynomials keep b = 0 throughout.
struct IntegerPolynomial {
    int n0 = 0, m0 = 0;
    std::vector<std::vector<long long>> coeffs;

    int total_degree() const;  // -1 for the zero polynomial
    long long evaluate(long long n, long long m) const;
    // coefficients of n^a * m^b as exact rationals
    std::map<std::pair<int, int>, Fraction> monomial_basis() const;
    bool same_polynomial(const IntegerPolynomial& o) const;
    std::string str(const std::string& nvar = "n", const std::string& mvar = "m") const;
    std::string str_monomial(const std::string& nvar = "n", const std::string& mvar = "m") const;
};

struct GridRange {
    int n_lo = 1, n_hi = 8, m_lo = 1, m_hi = 8;
};

struct SampleTable {
    int index = 0;  // derived-functor slot
    GridRange range;
    std::vector<std::vector<Length>> values;  // [n - n_lo][m - m_lo]

    const Length& at(int n, int m) const;
    std::string csv() const;  // header row: m values; first column: n values; INF sentinel
};

enum class FitVerdict { POLYNOMIAL, NO_POLYNOMIAL_FOUND, INFINITE_VALUES };

std::string verdict_name(FitVerdict v);

struct RegionFit {
    GridRange block;
    IntegerPolynomial poly;
};

struct FitReport {
    FitVerdict verdict = FitVerdict::NO_POLYNOMIAL_FOUND;
    bool univariate = false;
    int max_degree = 0;
    std::optional<IntegerPolynomial> poly;
    std::pair<int, int> onset{0, 0};         // accepted onset, or the best attempt
    long long residual_cells = 0;            // mismatches at the best attempt
    std::vector<std::string> attempts;       // one diagnostic line per onset tried
    // two block fits that both succeed but disagree; evidence that the table
    // follows different polynomials in different regions
    std::optional<std::pair<RegionFit, RegionFit>> region_evidence;

    std::string str() const;
};

// Exact fit by forward differences: accepted only when all differences of
// order max_degree + 1 vanish on the fit window and the resulting polynomial
// reproduces every sampled cell from the onset on, including a nonempty
// hold-out outside the window. First onset that passes wins.
FitReport fit_bivariate(const SampleTable& table, int max_degree,
                        const std::vector<std::pair<int, int>>& onsets);

FitReport fit_univariate(const std::vector<Length>& values, int first_index, int max_degree,
                         const std::vector<int>& onsets);

// lengths of Tor_i(M/I^n M, N/J^m N) over the grid
SampleTable sample_grid(int i, const FPModule& M, const FPModule& N, const Ideal& I,
                        const Ideal& J, const GridRange& range, int threads = 1);

// lengths of Tor_i(M/I^n M, N/I^n N) along the diagonal
std::vector<Length> sample_diagonal(int i, const FPModule& M, const FPModule& N, const Ideal& I,
                                    int n_lo, int n_hi, int threads = 1);

// lengths of Tor_i(I^n M, N/J^m N)
SampleTable sample_mixed(int i, const FPModule& M, const FPModule& N, const Ideal& I,
                         const Ideal& J, const GridRange& range, int threads = 1);

// lengths of Tor_i(M/I^n M, J^m N)
SampleTable sample_second_scaled(int i, const FPModule& M, const FPModule& N, const Ideal& I,
                                 const Ideal& J, const GridRange& range, int threads = 1);

std::string diagonal_csv(const std::vector<Length>& values, int first_index);

// default onset candidates (n0, m0) in {1..5}^2, ordered by n0 + m0
std::vector<std::pair<int, int>> default_onsets();

}  // namespace torhilb
