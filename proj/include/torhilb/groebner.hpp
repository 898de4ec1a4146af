#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "torhilb/length.hpp"
#include "torhilb/modvec.hpp"
#include "torhilb/polynomial.hpp"

namespace torhilb {

// Reduced Groebner basis of an ideal: monic, interreduced, descending leading
// terms. Unique for a fixed ideal and order.
struct GroebnerBasis {
    std::vector<Polynomial> elements;

    bool is_unit() const;
    bool contains(const Polynomial& f) const;
    std::vector<Monomial> leading_monomials() const;
};

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

// Ideal of a polynomial ring; a cheap value handle. The reduced Groebner
// basis is computed on first use and cached (thread safe).
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);
    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit_ideal(RingPtr ring);

    const RingPtr& ring() const { return state_->ring; }
    const std::vector<Polynomial>& generators() const { return state_->gens; }
    const GroebnerBasis& basis() const;
    bool contains(const Polynomial& f) const { return basis().contains(f); }
    bool is_zero_ideal() const { return basis().elements.empty(); }
    bool is_unit() const { return basis().is_unit(); }
    bool is_proper() const { return !is_unit(); }
    std::string str() const;

private:
    struct State {
        RingPtr ring;
        std::vector<Polynomial> gens;
        mutable std::mutex mu;
        mutable std::optional<GroebnerBasis> gb;
    };
    std::shared_ptr<State> state_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
// all n-fold products of generators; the 0-th power is the unit ideal
Ideal ideal_power(const Ideal& a, int n);
// via elimination of an auxiliary variable t from t*a + (1-t)*b
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
// (a : b) = { f : f*b in a }
Ideal ideal_colon(const Ideal& a, const Ideal& b);
bool ideal_equal(const Ideal& a, const Ideal& b);

// f in rad(a), decided by adjoining z with 1 - z*f
bool radical_membership(const Polynomial& f, const Ideal& a);

// Krull dimension of R/a from independent variable sets modulo the leading
// term ideal; the unit ideal gives -1.
int krull_dimension(const Ideal& a);

// proper with dim R/a = 0; for homogeneous ideals this says rad(a) is the
// irrelevant maximal ideal (x_1, ..., x_r)
bool is_zero_dimensional(const Ideal& a);

// number of standard monomials of R/a, or the infinite sentinel
Length quotient_length(const Ideal& a);

// Dimension of the fiber cone of the image of `a` in R/ann: the defining
// ideal of the blowup algebra is computed by eliminating the auxiliary map
// variable, then the base variables are set to zero.
int analytic_spread(const Ideal& a, const Ideal& ann);

}  // namespace torhilb
