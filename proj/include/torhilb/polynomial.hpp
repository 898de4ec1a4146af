#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "torhilb/ring.hpp"

namespace torhilb {

struct Term {
    Monomial mono;
    std::int64_t coeff = 0;
};

// Multivariate polynomial over F_p in canonical form: terms strictly
// descending in the ring's monomial order, no zero coefficients. The zero
// polynomial has an empty term list.
class Polynomial {
public:
    Polynomial() = default;  // detached zero; usable only as a placeholder
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    static Polynomial constant(RingPtr ring, std::int64_t c);
    static Polynomial variable(RingPtr ring, int var, std::int32_t exp = 1);
    static Polynomial term(RingPtr ring, Monomial m, std::int64_t c);
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }
    const Term& leading_term() const;
    std::int64_t leading_coeff() const { return leading_term().coeff; }
    int degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    Polynomial operator-() const;
    Polynomial scaled(std::int64_t c) const;
    Polynomial times_term(const Monomial& m, std::int64_t c) const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position(position) {}
    std::size_t position;
};

// Text form: integer coefficients, `^` for exponents, `*` optional between
// factors, e.g. "x^2*y + 3y^3 - 2".
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

// Rewrites f over `target`, matching variables by name; every variable that
// occurs in f must exist in the target ring.
Polynomial transport(const Polynomial& f, const RingPtr& target);

// f with the listed variables set to zero (terms containing them dropped).
Polynomial substitute_zero(const Polynomial& f, const std::vector<int>& vars);

void require_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace torhilb
