#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torhilb/polynomial.hpp"

namespace torhilb {

// Element of a free module R^k, stored as dense polynomial components.
// Module terms are ordered position-over-term: position 0 is strongest, ties
// broken by the ring's monomial order.
class ModVec {
public:
    ModVec() = default;
    ModVec(RingPtr ring, int rank);
    explicit ModVec(std::vector<Polynomial> comps);

    const RingPtr& ring() const { return ring_; }
    int rank() const { return static_cast<int>(comps_.size()); }
    bool is_zero() const;
    const Polynomial& operator[](int i) const { return comps_[static_cast<std::size_t>(i)]; }
    const std::vector<Polynomial>& components() const { return comps_; }
    void set_component(int i, Polynomial p);

    static ModVec unit(RingPtr ring, int rank, int pos);
    // f placed in component `pos` of a zero vector
    static ModVec embed(const Polynomial& f, int rank, int pos);

    struct LeadTerm {
        int pos = -1;
        Monomial mono;
        std::int64_t coeff = 0;
    };
    LeadTerm leading() const;  // throws on the zero vector

    ModVec operator+(const ModVec& o) const;
    ModVec operator-(const ModVec& o) const;
    ModVec scaled(std::int64_t c) const;
    ModVec times_term(const Monomial& m, std::int64_t c) const;
    ModVec times(const Polynomial& f) const;
    bool operator==(const ModVec& o) const;
    bool operator!=(const ModVec& o) const { return !(*this == o); }

    // true when every component is homogeneous and all component degrees
    // (shifted by the ambient degree shifts) agree
    bool is_homogeneous(const std::vector<int>& shifts) const;
    // shifted degree of a homogeneous vector; -1 for zero
    int internal_degree(const std::vector<int>& shifts) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> comps_;
};

// Reduced Groebner basis of the span of `gens` under position-over-term
// order: monic leading terms, no term of any element divisible by another
// element's leading term, sorted descending by leading term. Unique for a
// fixed span, so deterministic regardless of input order.
std::vector<ModVec> module_groebner(std::vector<ModVec> gens);

// Remainder of full division by a (not necessarily reduced) basis: no term of
// the result is divisible by any basis leading term, and v - result lies in
// the span.
ModVec module_normal_form(ModVec v, const std::vector<ModVec>& basis);

bool in_span(const ModVec& v, const std::vector<ModVec>& groebner);

// Span of a fixed column list, augmented so that membership certificates and
// syzygies come with explicit coefficients.
class SpanBasis {
public:
    SpanBasis(RingPtr ring, int ambient_rank, std::vector<ModVec> cols);

    const std::vector<ModVec>& columns() const { return cols_; }
    int ambient_rank() const { return k_; }

    bool contains(const ModVec& v) const;
    // coefficients c with v = sum c_j * cols_j, when v lies in the span
    std::optional<std::vector<Polynomial>> lift(const ModVec& v) const;
    // generators of { a in R^s : sum a_j * cols_j = 0 }
    std::vector<ModVec> syzygies() const;

private:
    RingPtr ring_;
    int k_ = 0;
    std::vector<ModVec> cols_;
    std::vector<ModVec> graph_gb_;  // basis of { (sum a_j cols_j, a) } in R^(k+s)
};

std::vector<ModVec> module_syzygies(const RingPtr& ring, int ambient_rank,
                                    const std::vector<ModVec>& cols);

// Both arguments must be reduced Groebner bases.
bool span_equal(const std::vector<ModVec>& gb_a, const std::vector<ModVec>& gb_b);

}  // namespace torhilb
