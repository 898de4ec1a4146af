#include "torhilb/modvec.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace torhilb {

ModVec::ModVec(RingPtr ring, int rank) : ring_(std::move(ring)) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    comps_.assign(static_cast<std::size_t>(rank), Polynomial(ring_));
}

ModVec::ModVec(std::vector<Polynomial> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw std::invalid_argument("use ModVec(ring, rank) for rank 0");
    ring_ = comps_.front().ring();
    for (const auto& c : comps_)
        if (c.ring() != ring_) throw std::logic_error("mixed rings in a module vector");
}

bool ModVec::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

void ModVec::set_component(int i, Polynomial p) {
    if (p.ring() != ring_) throw std::logic_error("component from a different ring");
    comps_[static_cast<std::size_t>(i)] = std::move(p);
}

ModVec ModVec::unit(RingPtr ring, int rank, int pos) {
    ModVec v(ring, rank);
    v.set_component(pos, Polynomial::constant(ring, 1));
    return v;
}

ModVec ModVec::embed(const Polynomial& f, int rank, int pos) {
    ModVec v(f.ring(), rank);
    v.set_component(pos, f);
    return v;
}

ModVec::LeadTerm ModVec::leading() const {
    for (int i = 0; i < rank(); ++i) {
        const Polynomial& c = comps_[static_cast<std::size_t>(i)];
        if (!c.is_zero()) return LeadTerm{i, c.leading_term().mono, c.leading_term().coeff};
    }
    throw std::domain_error("leading term of the zero vector");
}

ModVec ModVec::operator+(const ModVec& o) const {
    if (rank() != o.rank()) throw std::logic_error("rank mismatch");
    ModVec out(ring_, rank());
    for (int i = 0; i < rank(); ++i) out.comps_[static_cast<std::size_t>(i)] = (*this)[i] + o[i];
    return out;
}

ModVec ModVec::operator-(const ModVec& o) const {
    if (rank() != o.rank()) throw std::logic_error("rank mismatch");
    ModVec out(ring_, rank());
    for (int i = 0; i < rank(); ++i) out.comps_[static_cast<std::size_t>(i)] = (*this)[i] - o[i];
    return out;
}

ModVec ModVec::scaled(std::int64_t c) const {
    ModVec out(ring_, rank());
    for (int i = 0; i < rank(); ++i) out.comps_[static_cast<std::size_t>(i)] = (*this)[i].scaled(c);
    return out;
}

ModVec ModVec::times_term(const Monomial& m, std::int64_t c) const {
    ModVec out(ring_, rank());
    for (int i = 0; i < rank(); ++i)
        out.comps_[static_cast<std::size_t>(i)] = (*this)[i].times_term(m, c);
    return out;
}

ModVec ModVec::times(const Polynomial& f) const {
    ModVec out(ring_, rank());
    for (int i = 0; i < rank(); ++i) out.comps_[static_cast<std::size_t>(i)] = (*this)[i] * f;
    return out;
}

bool ModVec::operator==(const ModVec& o) const {
    if (rank() != o.rank()) return false;
    for (int i = 0; i < rank(); ++i)
        if ((*this)[i] != o[i]) return false;
    return true;
}

bool ModVec::is_homogeneous(const std::vector<int>& shifts) const {
    int d = -1;
    for (int i = 0; i < rank(); ++i) {
        const Polynomial& c = (*this)[i];
        if (c.is_zero()) continue;
        if (!c.is_homogeneous()) return false;
        int di = c.degree() + shifts[static_cast<std::size_t>(i)];
        if (d >= 0 && di != d) return false;
        d = di;
    }
    return true;
}

int ModVec::internal_degree(const std::vector<int>& shifts) const {
    for (int i = 0; i < rank(); ++i)
        if (!(*this)[i].is_zero()) return (*this)[i].degree() + shifts[static_cast<std::size_t>(i)];
    return -1;
}

std::string ModVec::str() const {
    std::string s = "(";
    for (int i = 0; i < rank(); ++i) {
        if (i) s += ", ";
        s += (*this)[i].str();
    }
    return s + ")";
}

namespace {

// +1 when module term (pa, ma) > (pb, mb)
int term_compare(const MonomialOrder& ord, int pa, const Monomial& ma, int pb, const Monomial& mb) {
    if (pa != pb) return pa < pb ? 1 : -1;
    return ord.compare(ma, mb);
}

ModVec make_monic(const ModVec& v) {
    return v.scaled(v.ring()->field().inv(v.leading().coeff));
}

struct SPair {
    int i, j;
    int pos;
    Monomial lcm;
};

// S-vector of two elements with leading terms in the same position.
ModVec s_vector(const ModVec& f, const ModVec& g, const SPair& p) {
    const PrimeField& F = f.ring()->field();
    auto lf = f.leading();
    auto lg = g.leading();
    ModVec a = f.times_term(Monomial::quotient(p.lcm, lf.mono), F.inv(lf.coeff));
    ModVec b = g.times_term(Monomial::quotient(p.lcm, lg.mono), F.inv(lg.coeff));
    return a - b;
}

}  // namespace

ModVec module_normal_form(ModVec v, const std::vector<ModVec>& basis) {
    if (v.is_zero() || basis.empty()) return v;
    const RingPtr& ring = v.ring();
    const PrimeField& F = ring->field();
    ModVec rem(ring, v.rank());
    while (!v.is_zero()) {
        auto lt = v.leading();
        bool reduced = false;
        for (const auto& b : basis) {
            if (b.is_zero()) continue;
            auto bl = b.leading();
            if (bl.pos == lt.pos && bl.mono.divides(lt.mono)) {
                std::int64_t c = F.div(lt.coeff, bl.coeff);
                v = v - b.times_term(Monomial::quotient(lt.mono, bl.mono), c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            Polynomial t = Polynomial::term(ring, lt.mono, lt.coeff);
            rem.set_component(lt.pos, rem[lt.pos] + t);
            v.set_component(lt.pos, v[lt.pos] - t);
        }
    }
    return rem;
}

bool in_span(const ModVec& v, const std::vector<ModVec>& groebner) {
    return module_normal_form(v, groebner).is_zero();
}

namespace {

// Buchberger loop with the product criterion (valid only for rank one) and
// the chain criterion. Output is not yet interreduced.
std::vector<ModVec> buchberger_raw(std::vector<ModVec> gens) {
    std::vector<ModVec> basis;
    if (gens.empty()) return basis;
    const RingPtr& ring = gens.front().ring();
    const MonomialOrder& ord = ring->order();
    const bool rank_one = gens.front().rank() == 1;

    std::vector<SPair> pending;
    std::set<std::pair<int, int>> treated;
    auto add_pairs = [&](int idx) {
        auto ln = basis[static_cast<std::size_t>(idx)].leading();
        for (int i = 0; i < idx; ++i) {
            auto li = basis[static_cast<std::size_t>(i)].leading();
            if (li.pos != ln.pos) continue;
            pending.push_back(SPair{i, idx, ln.pos, Monomial::lcm(li.mono, ln.mono)});
        }
    };

    for (auto& g : gens) {
        if (g.is_zero()) continue;
        ModVec h = module_normal_form(std::move(g), basis);
        if (h.is_zero()) continue;
        basis.push_back(make_monic(h));
        add_pairs(static_cast<int>(basis.size()) - 1);
    }

    while (!pending.empty()) {
        // normal selection: smallest lcm degree, then order, then indices
        std::size_t best = 0;
        for (std::size_t t = 1; t < pending.size(); ++t) {
            const SPair &a = pending[t], &b = pending[best];
            int c;
            if (a.lcm.deg() != b.lcm.deg())
                c = a.lcm.deg() < b.lcm.deg() ? -1 : 1;
            else if (a.pos != b.pos)
                c = a.pos < b.pos ? -1 : 1;
            else
                c = -ord.compare(a.lcm, b.lcm);
            if (c == 0) c = a.i != b.i ? (a.i < b.i ? -1 : 1) : (a.j < b.j ? -1 : 1);
            if (c < 0) best = t;
        }
        SPair p = pending[best];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
        treated.insert({p.i, p.j});

        const ModVec& f = basis[static_cast<std::size_t>(p.i)];
        const ModVec& g = basis[static_cast<std::size_t>(p.j)];
        auto lf = f.leading();
        auto lg = g.leading();
        if (rank_one && lf.mono.coprime_with(lg.mono)) continue;
        bool chained = false;
        for (int l = 0; l < static_cast<int>(basis.size()) && !chained; ++l) {
            if (l == p.i || l == p.j) continue;
            auto ll = basis[static_cast<std::size_t>(l)].leading();
            if (ll.pos != p.pos || !ll.mono.divides(p.lcm)) continue;
            auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (treated.count(key(p.i, l)) && treated.count(key(p.j, l))) chained = true;
        }
        if (chained) continue;

        ModVec h = module_normal_form(s_vector(f, g, p), basis);
        if (h.is_zero()) continue;
        basis.push_back(make_monic(h));
        add_pairs(static_cast<int>(basis.size()) - 1);
    }
    return basis;
}

std::vector<ModVec> interreduce(std::vector<ModVec> basis) {
    // minimalize: drop elements whose leading term another element's divides
    std::vector<ModVec> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto li = basis[i].leading();
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            auto lj = basis[j].leading();
            if (lj.pos != li.pos || !lj.mono.divides(li.mono)) continue;
            // on equal leading terms keep the earlier element
            if (lj.mono == li.mono && j > i) continue;
            redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // tail-reduce each element against the others (leading terms are stable)
    std::vector<ModVec> out = minimal;
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::vector<ModVec> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        auto lt = out[i].leading();
        Polynomial head = Polynomial::term(out[i].ring(), lt.mono, lt.coeff);
        ModVec tail = out[i];
        tail.set_component(lt.pos, tail[lt.pos] - head);
        ModVec red = module_normal_form(tail, others);
        red.set_component(lt.pos, red[lt.pos] + head);
        out[i] = make_monic(red);
    }
    MonomialOrder ord = out.empty() ? MonomialOrder() : out.front().ring()->order();
    std::sort(out.begin(), out.end(), [&](const ModVec& a, const ModVec& b) {
        auto la = a.leading(), lb = b.leading();
        return term_compare(ord, la.pos, la.mono, lb.pos, lb.mono) > 0;
    });
    return out;
}

}  // namespace

std::vector<ModVec> module_groebner(std::vector<ModVec> gens) {
    return interreduce(buchberger_raw(std::move(gens)));
}

SpanBasis::SpanBasis(RingPtr ring, int ambient_rank, std::vector<ModVec> cols)
    : ring_(std::move(ring)), k_(ambient_rank), cols_(std::move(cols)) {
    int s = static_cast<int>(cols_.size());
    std::vector<ModVec> graph;
    graph.reserve(cols_.size());
    for (int j = 0; j < s; ++j) {
        const ModVec& c = cols_[static_cast<std::size_t>(j)];
        if (c.rank() != k_) throw std::logic_error("column rank mismatch");
        ModVec g(ring_, k_ + s);
        for (int i = 0; i < k_; ++i) g.set_component(i, c[i]);
        g.set_component(k_ + j, Polynomial::constant(ring_, 1));
        graph.push_back(std::move(g));
    }
    graph_gb_ = module_groebner(std::move(graph));
}

std::optional<std::vector<Polynomial>> SpanBasis::lift(const ModVec& v) const {
    if (v.rank() != k_) throw std::logic_error("vector rank mismatch");
    int s = static_cast<int>(cols_.size());
    ModVec ext(ring_, k_ + s);
    for (int i = 0; i < k_; ++i) ext.set_component(i, v[i]);
    ModVec nf = module_normal_form(std::move(ext), graph_gb_);
    for (int i = 0; i < k_; ++i)
        if (!nf[i].is_zero()) return std::nullopt;
    std::vector<Polynomial> coeffs;
    coeffs.reserve(cols_.size());
    for (int j = 0; j < s; ++j) coeffs.push_back(-nf[k_ + j]);
    return coeffs;
}

bool SpanBasis::contains(const ModVec& v) const { return lift(v).has_value(); }

std::vector<ModVec> SpanBasis::syzygies() const {
    int s = static_cast<int>(cols_.size());
    std::vector<ModVec> out;
    for (const auto& g : graph_gb_) {
        bool pure = true;
        for (int i = 0; i < k_ && pure; ++i)
            if (!g[i].is_zero()) pure = false;
        if (!pure) continue;
        ModVec syz(ring_, s);
        for (int j = 0; j < s; ++j) syz.set_component(j, g[k_ + j]);
        out.push_back(std::move(syz));
    }
    return out;
}

std::vector<ModVec> module_syzygies(const RingPtr& ring, int ambient_rank,
                                    const std::vector<ModVec>& cols) {
    return SpanBasis(ring, ambient_rank, cols).syzygies();
}

bool span_equal(const std::vector<ModVec>& gb_a, const std::vector<ModVec>& gb_b) {
    if (gb_a.size() != gb_b.size()) return false;
    for (std::size_t i = 0; i < gb_a.size(); ++i)
        if (gb_a[i] != gb_b[i]) return false;
    return true;
}

}  // namespace torhilb
