#include "torhilb/modules.hpp"

#include <algorithm>
#include <stdexcept>

namespace torhilb {

FreeModule::FreeModule(RingPtr ring, int rank) : ring(std::move(ring)), rank(rank) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    shifts.assign(static_cast<std::size_t>(rank), 0);
}

FreeModule::FreeModule(RingPtr ring, int rank, std::vector<int> shifts)
    : ring(std::move(ring)), rank(rank), shifts(std::move(shifts)) {
    if (rank < 0 || static_cast<int>(this->shifts.size()) != rank)
        throw std::invalid_argument("shift list does not match the rank");
}

ModuleMap::ModuleMap(FreeModule source, FreeModule target, std::vector<ModVec> cols)
    : source_(std::move(source)), target_(std::move(target)), cols_(std::move(cols)) {
    if (static_cast<int>(cols_.size()) != source_.rank)
        throw std::invalid_argument("column count does not match the source rank");
    for (const auto& c : cols_)
        if (c.rank() != target_.rank) throw std::invalid_argument("column rank mismatch");
}

ModuleMap ModuleMap::zero(FreeModule source, FreeModule target) {
    std::vector<ModVec> cols(static_cast<std::size_t>(source.rank),
                             ModVec(target.ring, target.rank));
    return ModuleMap(std::move(source), std::move(target), std::move(cols));
}

bool ModuleMap::is_zero() const {
    for (const auto& c : cols_)
        if (!c.is_zero()) return false;
    return true;
}

ModVec ModuleMap::apply(const ModVec& v) const {
    if (v.rank() != source_.rank) throw std::invalid_argument("vector rank mismatch");
    ModVec out(target_.ring, target_.rank);
    for (int j = 0; j < source_.rank; ++j) {
        if (v[j].is_zero()) continue;
        out = out + cols_[static_cast<std::size_t>(j)].times(v[j]);
    }
    return out;
}

ModuleMap ModuleMap::compose(const ModuleMap& other) const {
    if (other.target_.rank != source_.rank)
        throw std::invalid_argument("composition rank mismatch");
    std::vector<ModVec> cols;
    cols.reserve(other.cols_.size());
    for (const auto& c : other.cols_) cols.push_back(apply(c));
    return ModuleMap(other.source_, target_, std::move(cols));
}

ModuleMap syzygy_map(const ModuleMap& m) {
    std::vector<ModVec> syz =
        module_syzygies(m.target().ring, m.target().rank, m.columns());
    std::vector<int> shifts;
    shifts.reserve(syz.size());
    for (const auto& s : syz) {
        int d = s.is_homogeneous(m.source().shifts) ? s.internal_degree(m.source().shifts) : 0;
        shifts.push_back(std::max(d, 0));
    }
    FreeModule source(m.source().ring, static_cast<int>(syz.size()), std::move(shifts));
    return ModuleMap(std::move(source), m.source(), std::move(syz));
}

FPModule::FPModule(FreeModule cover, std::vector<ModVec> relations) : cover_(std::move(cover)) {
    for (const auto& c : relations)
        if (c.rank() != cover_.rank) throw std::invalid_argument("relation rank mismatch");
    rels_ = module_groebner(std::move(relations));
}

FPModule FPModule::free_module(RingPtr ring, int rank) {
    return FPModule(FreeModule(std::move(ring), rank), {});
}

FPModule FPModule::cyclic_quotient(const Ideal& ideal) {
    std::vector<ModVec> rels;
    for (const auto& f : ideal.basis().elements)
        rels.push_back(ModVec(std::vector<Polynomial>{f}));
    return FPModule(FreeModule(ideal.ring(), 1), std::move(rels));
}

FPModule FPModule::from_columns(RingPtr ring, int rank, std::vector<ModVec> cols) {
    return FPModule(FreeModule(std::move(ring), rank), std::move(cols));
}

ModuleMap FPModule::presentation() const {
    std::vector<int> shifts;
    shifts.reserve(rels_.size());
    for (const auto& c : rels_) {
        int d = c.is_homogeneous(cover_.shifts) ? c.internal_degree(cover_.shifts) : 0;
        shifts.push_back(std::max(d, 0));
    }
    FreeModule source(cover_.ring, static_cast<int>(rels_.size()), std::move(shifts));
    return ModuleMap(std::move(source), cover_, rels_);
}

bool FPModule::is_zero_module() const {
    for (int i = 0; i < cover_.rank; ++i)
        if (!in_span(ModVec::unit(cover_.ring, cover_.rank, i), rels_)) return false;
    return true;
}

std::string FPModule::key() const {
    // ring identity is by pointer, so the key must carry it too
    std::string s = std::to_string(reinterpret_cast<std::uintptr_t>(cover_.ring.get())) + "|" +
                    cover_.ring->signature() + "|rank=" + std::to_string(cover_.rank) + "|";
    for (const auto& c : rels_) { s += c.str(); s += ';'; }
    return s;
}

std::string FPModule::str() const {
    if (rels_.empty()) return "R^" + std::to_string(cover_.rank);
    std::string s = "coker{";
    for (std::size_t i = 0; i < rels_.size(); ++i) {
        if (i) s += ", ";
        s += rels_[i].str();
    }
    return s + "} on R^" + std::to_string(cover_.rank);
}

Subquotient::Subquotient(FreeModule ambient, std::vector<ModVec> num, std::vector<ModVec> den)
    : ambient_(std::move(ambient)) {
    num_ = module_groebner(std::move(num));
    den_ = module_groebner(std::move(den));
    for (const auto& v : den_)
        if (!in_span(v, num_))
            throw std::invalid_argument("denominator is not contained in the numerator");
}

Subquotient Subquotient::of_module(const FPModule& m) {
    std::vector<ModVec> units;
    for (int i = 0; i < m.cover().rank; ++i)
        units.push_back(ModVec::unit(m.ring(), m.cover().rank, i));
    return Subquotient(m.cover(), std::move(units), m.relations());
}

bool Subquotient::is_zero_quotient() const {
    for (const auto& u : num_)
        if (!in_span(u, den_)) return false;
    return true;
}

FPModule Subquotient::presented() const {
    int u = static_cast<int>(num_.size());
    SpanBasis span(ring(), ambient_.rank, num_);
    std::vector<ModVec> rels = span.syzygies();
    for (const auto& v : den_) {
        auto coeffs = span.lift(v);
        if (!coeffs) throw std::logic_error("denominator escaped the numerator span");
        rels.push_back(ModVec(ring(), u));
        for (int j = 0; j < u; ++j) rels.back().set_component(j, (*coeffs)[static_cast<std::size_t>(j)]);
    }
    std::vector<int> shifts;
    shifts.reserve(num_.size());
    for (const auto& g : num_) {
        int d = g.is_homogeneous(ambient_.shifts) ? g.internal_degree(ambient_.shifts) : 0;
        shifts.push_back(std::max(d, 0));
    }
    return FPModule(FreeModule(ring(), u, std::move(shifts)), std::move(rels));
}

Length Subquotient::length_of() const {
    // 0 -> U/V -> R^k/V -> R^k/U -> 0, so when R^k/V has finite length the
    // difference of the two cokernel counts is the answer; otherwise fall
    // back to a presentation of U/V itself.
    Length den_len = cokernel_length(ring(), ambient_.rank, den_);
    if (den_len.is_finite()) {
        Length num_len = cokernel_length(ring(), ambient_.rank, num_);
        if (num_len.is_infinite()) throw std::logic_error("numerator coker infinite under finite denominator coker");
        return Length::finite(den_len.value() - num_len.value());
    }
    FPModule pres = presented();
    return cokernel_length(ring(), pres.cover().rank, pres.relations());
}

Ideal Subquotient::annihilator_ideal() const {
    if (num_.empty()) return Ideal::unit_ideal(ring());
    bool first = true;
    Ideal acc;
    for (const auto& u : num_) {
        Ideal part = submodule_colon(ring(), ambient_.rank, den_, u);
        acc = first ? part : ideal_intersect(acc, part);
        first = false;
        if (acc.is_zero_ideal()) break;
    }
    return acc;
}

std::string Subquotient::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (i) s += ", ";
        s += num_[i].str();
    }
    s += "} / {";
    for (std::size_t i = 0; i < den_.size(); ++i) {
        if (i) s += ", ";
        s += den_[i].str();
    }
    return s + "}";
}

FPModule quotient_by_ideal_power(const FPModule& m, const Ideal& ideal, int n) {
    std::vector<ModVec> rels = m.relations();
    Ideal power = ideal_power(ideal, n);
    for (const auto& f : power.basis().elements)
        for (int i = 0; i < m.cover().rank; ++i)
            rels.push_back(ModVec::embed(f, m.cover().rank, i));
    return FPModule(m.cover(), std::move(rels));
}

Subquotient scaled_submodule(const Ideal& ideal, int n, const FPModule& m) {
    std::vector<ModVec> num;
    Ideal power = ideal_power(ideal, n);
    for (const auto& f : power.basis().elements)
        for (int i = 0; i < m.cover().rank; ++i)
            num.push_back(ModVec::embed(f, m.cover().rank, i));
    for (const auto& r : m.relations()) num.push_back(r);
    return Subquotient(m.cover(), std::move(num), m.relations());
}

std::vector<ModVec> submodule_intersect(const RingPtr& ring, int ambient_rank,
                                        const std::vector<ModVec>& u,
                                        const std::vector<ModVec>& w) {
    std::vector<ModVec> all = u;
    all.insert(all.end(), w.begin(), w.end());
    std::vector<ModVec> syz = module_syzygies(ring, ambient_rank, all);
    std::vector<ModVec> gens;
    for (const auto& s : syz) {
        ModVec v(ring, ambient_rank);
        for (std::size_t j = 0; j < u.size(); ++j)
            v = v + u[j].times(s[static_cast<int>(j)]);
        if (!v.is_zero()) gens.push_back(std::move(v));
    }
    return module_groebner(std::move(gens));
}

Ideal submodule_colon(const RingPtr& ring, int ambient_rank,
                      const std::vector<ModVec>& span_cols, const ModVec& v) {
    std::vector<ModVec> all = span_cols;
    all.push_back(v);
    std::vector<ModVec> syz = module_syzygies(ring, ambient_rank, all);
    std::vector<Polynomial> gens;
    int last = static_cast<int>(span_cols.size());
    for (const auto& s : syz)
        if (!s[last].is_zero()) gens.push_back(s[last]);
    Ideal raw(ring, std::move(gens));
    return Ideal(ring, raw.basis().elements);
}

Ideal annihilator(const FPModule& m) {
    if (m.cover().rank == 0) return Ideal::unit_ideal(m.ring());
    bool first = true;
    Ideal acc;
    for (int i = 0; i < m.cover().rank; ++i) {
        ModVec e = ModVec::unit(m.ring(), m.cover().rank, i);
        Ideal part = submodule_colon(m.ring(), m.cover().rank, m.relations(), e);
        acc = first ? part : ideal_intersect(acc, part);
        first = false;
        if (acc.is_zero_ideal()) break;
    }
    return acc;
}

Length cokernel_length(const RingPtr& ring, int rank, const std::vector<ModVec>& rels_gb) {
    if (rank == 0) return Length::finite(0);
    long long total = 0;
    for (int pos = 0; pos < rank; ++pos) {
        std::vector<Polynomial> lt_gens;
        for (const auto& r : rels_gb) {
            auto lt = r.leading();
            if (lt.pos == pos) lt_gens.push_back(Polynomial::term(ring, lt.mono, 1));
        }
        Length piece = quotient_length(Ideal(ring, std::move(lt_gens)));
        if (piece.is_infinite()) return Length::infinite();
        total += piece.value();
    }
    return Length::finite(total);
}

Length module_length(const Subquotient& s) { return s.length_of(); }

}  // namespace torhilb
