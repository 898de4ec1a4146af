#include "torhilb/sampler.hpp"

#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace torhilb {

Fraction::Fraction(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
    return Fraction(a.num * b.den + b.num * a.den, a.den * b.den);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
    return Fraction(a.num * b.num, a.den * b.den);
}

std::string Fraction::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

long long binomial(long long v, int a) {
    long long acc = 1;
    for (int t = 0; t < a; ++t) {
        acc *= v - t;
        acc /= t + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return acc;
}

// coefficients (in the variable) of C(var - offset, a) as exact rationals
std::vector<Fraction> binomial_monomial_coeffs(int offset, int a) {
    // expand u*(u-1)*...*(u-a+1)/a! with u = var - offset
    std::vector<Fraction> in_u{Fraction(1, 1)};
    for (int t = 0; t < a; ++t) {
        std::vector<Fraction> next(in_u.size() + 1, Fraction(0, 1));
        for (std::size_t j = 0; j < in_u.size(); ++j) {
            next[j + 1] = next[j + 1] + in_u[j];
            next[j] = next[j] + in_u[j] * Fraction(-t, 1);
        }
        in_u = std::move(next);
    }
    long long fact = 1;
    for (int t = 2; t <= a; ++t) fact *= t;
    for (auto& c : in_u) c = c * Fraction(1, fact);
    // substitute u = var - offset
    std::vector<Fraction> out(in_u.size(), Fraction(0, 1));
    for (std::size_t j = 0; j < in_u.size(); ++j) {
        long long pw = 1;
        for (std::size_t k = j + 1; k-- > 0;) {
            out[k] = out[k] + in_u[j] * Fraction(binomial(static_cast<long long>(j), static_cast<int>(j - k)) * pw, 1);
            pw *= -offset;
        }
    }
    return out;
}

}  // namespace

int IntegerPolynomial::total_degree() const {
    int d = -1;
    for (std::size_t a = 0; a < coeffs.size(); ++a)
        for (std::size_t b = 0; b < coeffs[a].size(); ++b)
            if (coeffs[a][b] != 0) d = std::max(d, static_cast<int>(a + b));
    return d;
}

long long IntegerPolynomial::evaluate(long long n, long long m) const {
    long long acc = 0;
    for (std::size_t a = 0; a < coeffs.size(); ++a)
        for (std::size_t b = 0; b < coeffs[a].size(); ++b)
            if (coeffs[a][b] != 0)
                acc += coeffs[a][b] * binomial(n - n0, static_cast<int>(a)) *
                       binomial(m - m0, static_cast<int>(b));
    return acc;
}

std::map<std::pair<int, int>, Fraction> IntegerPolynomial::monomial_basis() const {
    std::map<std::pair<int, int>, Fraction> out;
    for (std::size_t a = 0; a < coeffs.size(); ++a) {
        for (std::size_t b = 0; b < coeffs[a].size(); ++b) {
            if (coeffs[a][b] == 0) continue;
            auto nc = binomial_monomial_coeffs(n0, static_cast<int>(a));
            auto mc = binomial_monomial_coeffs(m0, static_cast<int>(b));
            for (std::size_t j = 0; j < nc.size(); ++j) {
                for (std::size_t k = 0; k < mc.size(); ++k) {
                    Fraction add = nc[j] * mc[k] * Fraction(coeffs[a][b], 1);
                    auto key = std::make_pair(static_cast<int>(j), static_cast<int>(k));
                    auto it = out.find(key);
                    if (it == out.end())
                        out[key] = add;
                    else
                        it->second = it->second + add;
                }
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.num == 0 ? out.erase(it) : std::next(it);
    return out;
}

bool IntegerPolynomial::same_polynomial(const IntegerPolynomial& o) const {
    return monomial_basis() == o.monomial_basis();
}

std::string IntegerPolynomial::str(const std::string& nvar, const std::string& mvar) const {
    std::string s;
    for (std::size_t a = 0; a < coeffs.size(); ++a) {
        for (std::size_t b = 0; b < coeffs[a].size(); ++b) {
            if (coeffs[a][b] == 0) continue;
            if (!s.empty()) s += " + ";
            s += std::to_string(coeffs[a][b]);
            if (a > 0)
                s += "*C(" + nvar + (n0 ? "-" + std::to_string(n0) : "") + "," + std::to_string(a) + ")";
            if (b > 0)
                s += "*C(" + mvar + (m0 ? "-" + std::to_string(m0) : "") + "," + std::to_string(b) + ")";
        }
    }
    return s.empty() ? "0" : s;
}

std::string IntegerPolynomial::str_monomial(const std::string& nvar, const std::string& mvar) const {
    auto mono = monomial_basis();
    std::string s;
    for (const auto& [key, frac] : mono) {
        if (!s.empty()) s += " + ";
        s += frac.str();
        if (key.first > 0) s += "*" + nvar + (key.first > 1 ? "^" + std::to_string(key.first) : "");
        if (key.second > 0) s += "*" + mvar + (key.second > 1 ? "^" + std::to_string(key.second) : "");
    }
    return s.empty() ? "0" : s;
}

const Length& SampleTable::at(int n, int m) const {
    return values[static_cast<std::size_t>(n - range.n_lo)][static_cast<std::size_t>(m - range.m_lo)];
}

std::string SampleTable::csv() const {
    std::string s = "n\\m";
    for (int m = range.m_lo; m <= range.m_hi; ++m) s += "," + std::to_string(m);
    s += "\n";
    for (int n = range.n_lo; n <= range.n_hi; ++n) {
        s += std::to_string(n);
        for (int m = range.m_lo; m <= range.m_hi; ++m) s += "," + at(n, m).str();
        s += "\n";
    }
    return s;
}

std::string diagonal_csv(const std::vector<Length>& values, int first_index) {
    std::string s = "n,value\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        s += std::to_string(first_index + static_cast<int>(i)) + "," + values[i].str() + "\n";
    return s;
}

std::string verdict_name(FitVerdict v) {
    switch (v) {
        case FitVerdict::POLYNOMIAL: return "POLYNOMIAL";
        case FitVerdict::NO_POLYNOMIAL_FOUND: return "NO_POLYNOMIAL_FOUND";
        case FitVerdict::INFINITE_VALUES: return "INFINITE_VALUES";
    }
    return "?";
}

namespace {

struct Attempt {
    bool ok = false;
    bool inf_region = false;
    IntegerPolynomial poly;
    long long mismatches = -1;
    std::string note;
};

// One onset of the difference fit over table cells [n0..n_hi] x [m0..m_hi].
Attempt try_onset(const SampleTable& table, int degree, int n0, int m0, bool need_holdout) {
    Attempt at;
    const GridRange& r = table.range;
    if (n0 < r.n_lo || m0 < r.m_lo) {
        at.note = "onset below the sampled range";
        return at;
    }
    int w = degree + 2;
    int need_n = n0 + w - 1 + (need_holdout ? 1 : 0);
    int need_m = m0 + w - 1 + (need_holdout ? 1 : 0);
    if (need_n > r.n_hi || need_m > r.m_hi) {
        at.note = need_holdout ? "window plus hold-out exceeds the table" : "window exceeds the table";
        return at;
    }
    for (int n = n0; n <= r.n_hi; ++n)
        for (int m = m0; m <= r.m_hi; ++m)
            if (table.at(n, m).is_infinite()) {
                at.inf_region = true;
                at.note = "infinite value inside the fit region";
                return at;
            }

    // forward-difference pyramid over the w x w window
    std::vector<std::vector<std::vector<std::vector<long long>>>> diff(
        static_cast<std::size_t>(w + 1));
    for (int a = 0; a <= w - 1; ++a) diff[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(w));
    auto& base = diff[0][0];
    base.assign(static_cast<std::size_t>(w), std::vector<long long>(static_cast<std::size_t>(w), 0));
    for (int u = 0; u < w; ++u)
        for (int v = 0; v < w; ++v) base[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = table.at(n0 + u, m0 + v).value();
    for (int a = 0; a + 1 < w; ++a) {
        const auto& prev = diff[static_cast<std::size_t>(a)][0];
        auto& next = diff[static_cast<std::size_t>(a + 1)][0];
        int rows = w - a - 1;
        next.assign(static_cast<std::size_t>(rows), std::vector<long long>(static_cast<std::size_t>(w), 0));
        for (int u = 0; u < rows; ++u)
            for (int v = 0; v < w; ++v)
                next[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                    prev[static_cast<std::size_t>(u + 1)][static_cast<std::size_t>(v)] -
                    prev[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    }
    for (int a = 0; a < w; ++a) {
        for (int b = 0; b + 1 < w; ++b) {
            const auto& prev = diff[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (prev.empty()) break;
            auto& next = diff[static_cast<std::size_t>(a)][static_cast<std::size_t>(b + 1)];
            int rows = static_cast<int>(prev.size());
            int cols = static_cast<int>(prev.front().size()) - 1;
            if (cols <= 0) break;
            next.assign(static_cast<std::size_t>(rows), std::vector<long long>(static_cast<std::size_t>(cols), 0));
            for (int u = 0; u < rows; ++u)
                for (int v = 0; v < cols; ++v)
                    next[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                        prev[static_cast<std::size_t>(u)][static_cast<std::size_t>(v + 1)] -
                        prev[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        }
    }

    // the order-(degree+1) layer must vanish identically on the window
    for (int a = 0; a <= degree + 1 && a < w; ++a) {
        int b = degree + 1 - a;
        if (b < 0 || b >= w) continue;
        for (const auto& row : diff[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
            for (long long v : row)
                if (v != 0) {
                    at.note = "differences of order " + std::to_string(degree + 1) + " do not vanish";
                    return at;
                }
    }

    IntegerPolynomial poly;
    poly.n0 = n0;
    poly.m0 = m0;
    poly.coeffs.assign(static_cast<std::size_t>(degree + 1),
                       std::vector<long long>(static_cast<std::size_t>(degree + 1), 0));
    for (int a = 0; a <= degree; ++a)
        for (int b = 0; a + b <= degree; ++b)
            poly.coeffs[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                diff[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][0][0];

    long long bad = 0;
    for (int n = n0; n <= r.n_hi; ++n)
        for (int m = m0; m <= r.m_hi; ++m)
            if (poly.evaluate(n, m) != table.at(n, m).value()) ++bad;
    at.poly = std::move(poly);
    at.mismatches = bad;
    if (bad == 0) {
        at.ok = true;
        at.note = "accepted";
    } else {
        at.note = "window fit leaves " + std::to_string(bad) + " mismatched cells";
    }
    return at;
}

SampleTable sub_table(const SampleTable& t, const GridRange& block) {
    SampleTable s;
    s.index = t.index;
    s.range = block;
    s.values.assign(static_cast<std::size_t>(block.n_hi - block.n_lo + 1), {});
    for (int n = block.n_lo; n <= block.n_hi; ++n) {
        auto& row = s.values[static_cast<std::size_t>(n - block.n_lo)];
        for (int m = block.m_lo; m <= block.m_hi; ++m) row.push_back(t.at(n, m));
    }
    return s;
}

std::optional<std::pair<RegionFit, RegionFit>> region_split_fits(const SampleTable& table,
                                                                 int base_n, int base_m) {
    const GridRange& r = table.range;
    base_n = std::max(base_n, r.n_lo);
    base_m = std::max(base_m, r.m_lo);
    int n_mid = base_n + (r.n_hi - base_n) / 2;
    int m_mid = base_m + (r.m_hi - base_m) / 2;
    GridRange below{n_mid + 1, r.n_hi, base_m, m_mid};      // n large, m small
    GridRange above{base_n, n_mid, m_mid + 1, r.m_hi};      // m large, n small
    auto fit_block = [&](const GridRange& block) -> std::optional<RegionFit> {
        int rows = block.n_hi - block.n_lo + 1;
        int cols = block.m_hi - block.m_lo + 1;
        // the block degree is whatever the block can support; the evidence must
        // exhibit the regional polynomials even when the caller's cap is lower
        int d = std::min(rows, cols) - 2;
        if (d < 0) return std::nullopt;
        SampleTable s = sub_table(table, block);
        Attempt at = try_onset(s, d, block.n_lo, block.m_lo, false);
        if (!at.ok) return std::nullopt;
        return RegionFit{block, at.poly};
    };
    auto fa = fit_block(below);
    auto fb = fit_block(above);
    if (fa && fb && !fa->poly.same_polynomial(fb->poly))
        return std::make_pair(*fa, *fb);
    return std::nullopt;
}

}  // namespace

FitReport fit_bivariate(const SampleTable& table, int max_degree,
                        const std::vector<std::pair<int, int>>& onsets) {
    if (max_degree < 0) throw std::invalid_argument("negative degree cap");
    FitReport rep;
    rep.max_degree = max_degree;
    bool all_inf = true;
    long long best_bad = -1;
    std::pair<int, int> best_onset = onsets.empty() ? std::make_pair(0, 0) : onsets.front();
    for (const auto& [n0, m0] : onsets) {
        Attempt at = try_onset(table, max_degree, n0, m0, true);
        rep.attempts.push_back("onset (" + std::to_string(n0) + "," + std::to_string(m0) +
                               "): " + at.note);
        if (!at.inf_region) all_inf = false;
        if (at.ok) {
            rep.verdict = FitVerdict::POLYNOMIAL;
            rep.poly = at.poly;
            rep.onset = {n0, m0};
            rep.residual_cells = 0;
            return rep;
        }
        if (at.mismatches >= 0 && (best_bad < 0 || at.mismatches < best_bad)) {
            best_bad = at.mismatches;
            best_onset = {n0, m0};
        }
    }
    if (all_inf && !onsets.empty()) {
        rep.verdict = FitVerdict::INFINITE_VALUES;
        return rep;
    }
    rep.verdict = FitVerdict::NO_POLYNOMIAL_FOUND;
    rep.onset = best_onset;
    rep.residual_cells = best_bad < 0 ? 0 : best_bad;
    if (!onsets.empty())
        rep.region_evidence =
            region_split_fits(table, onsets.front().first, onsets.front().second);
    return rep;
}

FitReport fit_univariate(const std::vector<Length>& values, int first_index, int max_degree,
                         const std::vector<int>& onsets) {
    // univariate fit through the bivariate machinery with a single column
    SampleTable t;
    t.range = GridRange{first_index, first_index + static_cast<int>(values.size()) - 1, 0, 0};
    for (const auto& v : values) t.values.push_back({v});
    if (max_degree < 0) throw std::invalid_argument("negative degree cap");
    FitReport rep;
    rep.univariate = true;
    rep.max_degree = max_degree;
    bool all_inf = true;
    long long best_bad = -1;
    int best_onset = onsets.empty() ? first_index : onsets.front();
    for (int n0 : onsets) {
        Attempt at;
        {
            // 1-D window: reuse the bivariate attempt with the m-direction collapsed
            const GridRange& r = t.range;
            at.note = "";
            if (n0 < r.n_lo) {
                at.note = "onset below the sampled range";
            } else if (n0 + max_degree + 2 > r.n_hi) {
                at.note = "window plus hold-out exceeds the table";
            } else {
                bool inf = false;
                for (int n = n0; n <= r.n_hi && !inf; ++n)
                    if (t.at(n, 0).is_infinite()) inf = true;
                if (inf) {
                    at.inf_region = true;
                    at.note = "infinite value inside the fit region";
                } else {
                    int w = max_degree + 2;
                    std::vector<std::vector<long long>> diff(static_cast<std::size_t>(w + 1));
                    diff[0].resize(static_cast<std::size_t>(w));
                    for (int u = 0; u < w; ++u) diff[0][static_cast<std::size_t>(u)] = t.at(n0 + u, 0).value();
                    for (int a = 0; a + 1 < w + 1 && static_cast<int>(diff[static_cast<std::size_t>(a)].size()) > 1; ++a) {
                        auto& prev = diff[static_cast<std::size_t>(a)];
                        auto& next = diff[static_cast<std::size_t>(a + 1)];
                        next.resize(prev.size() - 1);
                        for (std::size_t u = 0; u + 1 < prev.size(); ++u) next[u] = prev[u + 1] - prev[u];
                    }
                    bool flat = true;
                    for (long long v : diff[static_cast<std::size_t>(max_degree + 1)])
                        if (v != 0) flat = false;
                    if (!flat) {
                        at.note = "differences of order " + std::to_string(max_degree + 1) +
                                  " do not vanish";
                    } else {
                        IntegerPolynomial poly;
                        poly.n0 = n0;
                        poly.m0 = 0;
                        poly.coeffs.assign(static_cast<std::size_t>(max_degree + 1),
                                           std::vector<long long>(1, 0));
                        for (int a = 0; a <= max_degree; ++a)
                            poly.coeffs[static_cast<std::size_t>(a)][0] = diff[static_cast<std::size_t>(a)][0];
                        long long bad = 0;
                        for (int n = n0; n <= r.n_hi; ++n)
                            if (poly.evaluate(n, 0) != t.at(n, 0).value()) ++bad;
                        at.poly = std::move(poly);
                        at.mismatches = bad;
                        if (bad == 0) {
                            at.ok = true;
                            at.note = "accepted";
                        } else {
                            at.note = "window fit leaves " + std::to_string(bad) + " mismatched cells";
                        }
                    }
                }
            }
        }
        rep.attempts.push_back("onset " + std::to_string(n0) + ": " + at.note);
        if (!at.inf_region) all_inf = false;
        if (at.ok) {
            rep.verdict = FitVerdict::POLYNOMIAL;
            rep.poly = at.poly;
            rep.onset = {n0, 0};
            rep.residual_cells = 0;
            return rep;
        }
        if (at.mismatches >= 0 && (best_bad < 0 || at.mismatches < best_bad)) {
            best_bad = at.mismatches;
            best_onset = n0;
        }
    }
    if (all_inf && !onsets.empty()) {
        rep.verdict = FitVerdict::INFINITE_VALUES;
        return rep;
    }
    rep.verdict = FitVerdict::NO_POLYNOMIAL_FOUND;
    rep.onset = {best_onset, 0};
    rep.residual_cells = best_bad < 0 ? 0 : best_bad;
    return rep;
}

std::string FitReport::str() const {
    std::string s = "fit verdict: " + verdict_name(verdict);
    s += " (degree cap " + std::to_string(max_degree) + ")\n";
    if (poly) {
        s += "  onset (" + std::to_string(onset.first) +
             (univariate ? "" : "," + std::to_string(onset.second)) + ")\n";
        s += "  binomial basis: " + poly->str() + "\n";
        s += "  monomial basis: " + poly->str_monomial() + "\n";
        s += "  total degree: " + std::to_string(poly->total_degree()) + "\n";
    } else if (verdict == FitVerdict::NO_POLYNOMIAL_FOUND) {
        s += "  best onset (" + std::to_string(onset.first) + "," + std::to_string(onset.second) +
             "); no polynomial within the degree cap reproduces the table\n";
    }
    if (region_evidence) {
        const auto& [a, b] = *region_evidence;
        s += "  region fits disagree:\n";
        s += "    rows " + std::to_string(a.block.n_lo) + ".." + std::to_string(a.block.n_hi) +
             " x cols " + std::to_string(a.block.m_lo) + ".." + std::to_string(a.block.m_hi) +
             ": " + a.poly.str_monomial() + "\n";
        s += "    rows " + std::to_string(b.block.n_lo) + ".." + std::to_string(b.block.n_hi) +
             " x cols " + std::to_string(b.block.m_lo) + ".." + std::to_string(b.block.m_hi) +
             ": " + b.poly.str_monomial() + "\n";
    }
    for (const auto& a : attempts) s += "  " + a + "\n";
    return s;
}

namespace {

template <typename Fn>
void run_cells(int total, int threads, Fn fn) {
    if (threads <= 1 || total <= 1) {
        for (int i = 0; i < total; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    int workers = std::min(threads, total);
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= total) break;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

SampleTable empty_table(int i, const GridRange& r) {
    SampleTable t;
    t.index = i;
    t.range = r;
    t.values.assign(static_cast<std::size_t>(r.n_hi - r.n_lo + 1),
                    std::vector<Length>(static_cast<std::size_t>(r.m_hi - r.m_lo + 1)));
    return t;
}

void check_range(const GridRange& r) {
    if (r.n_lo < 0 || r.m_lo < 0 || r.n_hi < r.n_lo || r.m_hi < r.m_lo)
        throw std::invalid_argument("bad grid range");
}

}  // namespace

SampleTable sample_grid(int i, const FPModule& M, const FPModule& N, const Ideal& I,
                        const Ideal& J, const GridRange& range, int threads) {
    check_range(range);
    SampleTable t = empty_table(i, range);
    std::vector<FPModule> mn, nm;
    for (int n = range.n_lo; n <= range.n_hi; ++n) mn.push_back(quotient_by_ideal_power(M, I, n));
    for (int m = range.m_lo; m <= range.m_hi; ++m) nm.push_back(quotient_by_ideal_power(N, J, m));
    int cols = range.m_hi - range.m_lo + 1;
    int total = static_cast<int>(mn.size()) * cols;
    run_cells(total, threads, [&](int idx) {
        int a = idx / cols, b = idx % cols;
        t.values[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            tor(i, mn[static_cast<std::size_t>(a)], nm[static_cast<std::size_t>(b)]).length;
    });
    return t;
}

std::vector<Length> sample_diagonal(int i, const FPModule& M, const FPModule& N, const Ideal& I,
                                    int n_lo, int n_hi, int threads) {
    if (n_lo < 0 || n_hi < n_lo) throw std::invalid_argument("bad diagonal range");
    std::vector<FPModule> mn, nn;
    for (int n = n_lo; n <= n_hi; ++n) {
        mn.push_back(quotient_by_ideal_power(M, I, n));
        nn.push_back(quotient_by_ideal_power(N, I, n));
    }
    std::vector<Length> out(mn.size());
    run_cells(static_cast<int>(out.size()), threads, [&](int idx) {
        out[static_cast<std::size_t>(idx)] =
            tor(i, mn[static_cast<std::size_t>(idx)], nn[static_cast<std::size_t>(idx)]).length;
    });
    return out;
}

SampleTable sample_mixed(int i, const FPModule& M, const FPModule& N, const Ideal& I,
                         const Ideal& J, const GridRange& range, int threads) {
    check_range(range);
    SampleTable t = empty_table(i, range);
    std::vector<FPModule> scaled_m, nm;
    for (int n = range.n_lo; n <= range.n_hi; ++n)
        scaled_m.push_back(scaled_submodule(I, n, M).presented());
    for (int m = range.m_lo; m <= range.m_hi; ++m) nm.push_back(quotient_by_ideal_power(N, J, m));
    int cols = range.m_hi - range.m_lo + 1;
    int total = static_cast<int>(scaled_m.size()) * cols;
    run_cells(total, threads, [&](int idx) {
        int a = idx / cols, b = idx % cols;
        t.values[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            tor(i, scaled_m[static_cast<std::size_t>(a)], nm[static_cast<std::size_t>(b)]).length;
    });
    return t;
}

SampleTable sample_second_scaled(int i, const FPModule& M, const FPModule& N, const Ideal& I,
                                 const Ideal& J, const GridRange& range, int threads) {
    check_range(range);
    SampleTable t = empty_table(i, range);
    std::vector<FPModule> mn;
    std::vector<Subquotient> jm;
    for (int n = range.n_lo; n <= range.n_hi; ++n) mn.push_back(quotient_by_ideal_power(M, I, n));
    for (int m = range.m_lo; m <= range.m_hi; ++m) jm.push_back(scaled_submodule(J, m, N));
    int cols = range.m_hi - range.m_lo + 1;
    int total = static_cast<int>(mn.size()) * cols;
    run_cells(total, threads, [&](int idx) {
        int a = idx / cols, b = idx % cols;
        t.values[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            tor(i, mn[static_cast<std::size_t>(a)], jm[static_cast<std::size_t>(b)]).length;
    });
    return t;
}

std::vector<std::pair<int, int>> default_onsets() {
    std::vector<std::pair<int, int>> out;
    for (int n0 = 1; n0 <= 5; ++n0)
        for (int m0 = 1; m0 <= 5; ++m0) out.emplace_back(n0, m0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first + a.second != b.first + b.second) return a.first + a.second < b.first + b.second;
        return a < b;
    });
    return out;
}

}  // namespace torhilb
