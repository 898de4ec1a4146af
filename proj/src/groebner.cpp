#include "torhilb/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace torhilb {

namespace {

std::vector<ModVec> wrap(const std::vector<Polynomial>& polys) {
    std::vector<ModVec> out;
    out.reserve(polys.size());
    for (const auto& f : polys)
        if (!f.is_zero()) out.push_back(ModVec(std::vector<Polynomial>{f}));
    return out;
}

std::vector<Polynomial> unwrap(const std::vector<ModVec>& vecs) {
    std::vector<Polynomial> out;
    out.reserve(vecs.size());
    for (const auto& v : vecs) out.push_back(v[0]);
    return out;
}

}  // namespace

bool GroebnerBasis::is_unit() const {
    for (const auto& f : elements)
        if (!f.is_zero() && f.is_constant()) return true;
    return false;
}

bool GroebnerBasis::contains(const Polynomial& f) const {
    return normal_form(f, *this).is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements.size());
    for (const auto& f : elements) out.push_back(f.leading_term().mono);
    return out;
}

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    for (const auto& f : gens)
        if (!f.is_zero() && f.ring() != ring) throw std::logic_error("generator from a different ring");
    return GroebnerBasis{unwrap(module_groebner(wrap(gens)))};
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    if (f.is_zero() || basis.elements.empty()) return f;
    ModVec nf = module_normal_form(ModVec(std::vector<Polynomial>{f}), wrap(basis.elements));
    return nf[0];
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) {
    state_ = std::make_shared<State>();
    state_->ring = std::move(ring);
    for (auto& f : gens) {
        if (f.is_zero()) continue;
        if (f.ring() != state_->ring) throw std::logic_error("generator from a different ring");
        state_->gens.push_back(std::move(f));
    }
}

Ideal Ideal::unit_ideal(RingPtr ring) {
    Polynomial one = Polynomial::constant(ring, 1);
    return Ideal(std::move(ring), {one});
}

const GroebnerBasis& Ideal::basis() const {
    std::lock_guard<std::mutex> lock(state_->mu);
    if (!state_->gb) state_->gb = buchberger(state_->ring, state_->gens);
    return *state_->gb;
}

std::string Ideal::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < state_->gens.size(); ++i) {
        if (i) s += ", ";
        s += state_->gens[i].str();
    }
    if (state_->gens.empty()) s += "0";
    return s + ")";
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    std::vector<Polynomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    std::vector<Polynomial> gens;
    for (const auto& f : a.basis().elements)
        for (const auto& g : b.basis().elements) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, int n) {
    if (n < 0) throw std::invalid_argument("negative ideal power");
    if (n == 0) return Ideal::unit_ideal(a.ring());
    Ideal acc = a;
    for (int t = 1; t < n; ++t) acc = ideal_product(acc, a);
    return acc;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    const RingPtr& ring = a.ring();
    RingPtr ext = ring->with_elimination_vars({"@t"});
    int tv = ext->var_index("@t");
    Polynomial t = Polynomial::variable(ext, tv);
    Polynomial omt = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.basis().elements) gens.push_back(t * transport(f, ext));
    for (const auto& g : b.basis().elements) gens.push_back(omt * transport(g, ext));
    GroebnerBasis gb = buchberger(ext, gens);
    std::vector<Polynomial> kept;
    for (const auto& h : gb.elements) {
        bool free_of_t = true;
        for (const auto& term : h.terms())
            if (term.mono.exponent(tv) > 0) { free_of_t = false; break; }
        if (free_of_t) kept.push_back(transport(h, ring));
    }
    return Ideal(ring, std::move(kept));
}

namespace {

// f / g for f in the principal ideal (g)
Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    const RingPtr& ring = f.ring();
    Polynomial h = f, q(ring);
    const Term& lg = g.leading_term();
    while (!h.is_zero()) {
        const Term& lh = h.leading_term();
        if (!lg.mono.divides(lh.mono)) throw std::logic_error("inexact polynomial division");
        Monomial m = Monomial::quotient(lh.mono, lg.mono);
        std::int64_t c = ring->field().div(lh.coeff, lg.coeff);
        q = q + Polynomial::term(ring, m, c);
        h = h - g.times_term(m, c);
    }
    return q;
}

}  // namespace

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
    if (b.is_zero_ideal()) return Ideal::unit_ideal(a.ring());
    bool first = true;
    Ideal acc;
    for (const auto& g : b.basis().elements) {
        Ideal meet = ideal_intersect(a, Ideal(a.ring(), {g}));
        std::vector<Polynomial> quots;
        for (const auto& h : meet.basis().elements) quots.push_back(exact_divide(h, g));
        Ideal part(a.ring(), std::move(quots));
        acc = first ? part : ideal_intersect(acc, part);
        first = false;
    }
    return acc;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    const auto& ea = a.basis().elements;
    const auto& eb = b.basis().elements;
    if (ea.size() != eb.size()) return false;
    for (std::size_t i = 0; i < ea.size(); ++i)
        if (ea[i] != eb[i]) return false;
    return true;
}

bool radical_membership(const Polynomial& f, const Ideal& a) {
    if (f.is_zero()) return true;
    const RingPtr& ring = a.ring();
    RingPtr ext = ring->with_elimination_vars({"@z"});
    Polynomial z = Polynomial::variable(ext, ext->var_index("@z"));
    std::vector<Polynomial> gens;
    for (const auto& g : a.generators()) gens.push_back(transport(g, ext));
    gens.push_back(Polynomial::constant(ext, 1) - z * transport(f, ext));
    return buchberger(ext, gens).is_unit();
}

int krull_dimension(const Ideal& a) {
    const GroebnerBasis& gb = a.basis();
    if (gb.is_unit()) return -1;
    std::vector<Monomial> lts = gb.leading_monomials();
    int r = a.ring()->nvars();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& m : lts) {
            bool inside = true;
            for (int v = 0; v < r && inside; ++v)
                if (m.exponent(v) > 0 && !(mask & (1u << v))) inside = false;
            if (inside) { independent = false; break; }
        }
        if (independent) best = size;
    }
    return best;
}

bool is_zero_dimensional(const Ideal& a) {
    return a.is_proper() && krull_dimension(a) == 0;
}

namespace {

long long count_standard_monomials(const std::vector<Monomial>& lts, int nvars) {
    // zero-dimensional: every variable has a pure power among the leading terms
    std::vector<std::int32_t> bound(static_cast<std::size_t>(nvars), -1);
    for (const auto& m : lts) {
        int support = -1;
        bool pure = true;
        for (int v = 0; v < nvars; ++v) {
            if (m.exponent(v) > 0) {
                if (support >= 0) { pure = false; break; }
                support = v;
            }
        }
        if (!pure || support < 0) continue;
        std::int32_t e = m.exponent(support);
        auto& b = bound[static_cast<std::size_t>(support)];
        if (b < 0 || e < b) b = e;
    }
    for (std::int32_t b : bound)
        if (b < 0) throw std::logic_error("standard monomial count on a positive-dimensional ideal");

    long long count = 0;
    std::vector<std::int32_t> e(static_cast<std::size_t>(nvars), 0);
    for (;;) {
        bool divisible = false;
        for (const auto& m : lts) {
            bool div = true;
            for (int v = 0; v < nvars && div; ++v)
                if (m.exponent(v) > e[static_cast<std::size_t>(v)]) div = false;
            if (div) { divisible = true; break; }
        }
        if (!divisible) ++count;
        int v = 0;
        while (v < nvars) {
            if (++e[static_cast<std::size_t>(v)] < bound[static_cast<std::size_t>(v)]) break;
            e[static_cast<std::size_t>(v)] = 0;
            ++v;
        }
        if (v == nvars) break;
    }
    return count;
}

}  // namespace

Length quotient_length(const Ideal& a) {
    if (a.is_unit()) return Length::finite(0);
    if (krull_dimension(a) != 0) return Length::infinite();
    return Length::finite(count_standard_monomials(a.basis().leading_monomials(), a.ring()->nvars()));
}

int analytic_spread(const Ideal& a, const Ideal& ann) {
    if (!a.is_proper()) throw std::invalid_argument("analytic spread of the unit ideal");
    if (!ann.is_proper()) throw std::invalid_argument("annihilator is the unit ideal");
    const RingPtr& ring = a.ring();
    const std::vector<Polynomial>& gens = a.basis().elements;
    int s = static_cast<int>(gens.size());
    if (s == 0) return 0;

    // base ring + map variable @t (dominant, to be eliminated) + fiber variables
    std::vector<std::string> vars = ring->var_names();
    std::vector<int> priority;
    int r = ring->nvars();
    priority.push_back(r);  // @t
    for (int v : ring->order().priority()) priority.push_back(v);
    vars.push_back("@t");
    std::vector<std::string> fiber_names;
    for (int j = 0; j < s; ++j) {
        fiber_names.push_back("@T" + std::to_string(j + 1));
        priority.push_back(r + 1 + j);
        vars.push_back(fiber_names.back());
    }
    RingPtr ext = Ring::make(ring->field().characteristic(), vars, ring->order().kind(),
                             priority, 1);

    Polynomial t = Polynomial::variable(ext, r);
    std::vector<Polynomial> rees;
    for (const auto& g : ann.generators()) rees.push_back(transport(g, ext));
    for (int j = 0; j < s; ++j)
        rees.push_back(Polynomial::variable(ext, r + 1 + j) - t * transport(gens[static_cast<std::size_t>(j)], ext));
    GroebnerBasis gb = buchberger(ext, rees);

    // keep the t-free part, then set the base variables to zero
    std::vector<int> base_vars(static_cast<std::size_t>(r));
    for (int v = 0; v < r; ++v) base_vars[static_cast<std::size_t>(v)] = v;
    RingPtr fiber_ring = Ring::make(ring->field().characteristic(), fiber_names,
                                    ring->order().kind());
    std::vector<Polynomial> fiber_gens;
    for (const auto& h : gb.elements) {
        bool free_of_t = true;
        for (const auto& term : h.terms())
            if (term.mono.exponent(r) > 0) { free_of_t = false; break; }
        if (!free_of_t) continue;
        Polynomial cut = substitute_zero(h, base_vars);
        if (!cut.is_zero()) fiber_gens.push_back(transport(cut, fiber_ring));
    }
    return krull_dimension(Ideal(fiber_ring, std::move(fiber_gens)));
}

}  // namespace torhilb
