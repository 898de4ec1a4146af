#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "torhilb/field.hpp"
#include "torhilb/monomial.hpp"

namespace torhilb {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Coefficient field, variable names and monomial order of a polynomial ring.
// Rings are immutable; polynomials keep a shared handle to theirs.
class Ring {
public:
    static RingPtr make(std::int64_t p, std::vector<std::string> vars,
                        OrderKind kind = OrderKind::DegRevLex,
                        std::vector<int> priority = {}, int elim_block = 0);

    const PrimeField& field() const { return field_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const std::string& var_name(int i) const { return vars_[static_cast<std::size_t>(i)]; }
    const MonomialOrder& order() const { return order_; }
    int var_index(std::string_view name) const;

    // New ring with the extra variables appended; they form a dominant block
    // so Groebner bases under the new order eliminate them.
    RingPtr with_elimination_vars(const std::vector<std::string>& extra) const;

    // "p=...;vars=...;order=..." — stable identity string for cache keys.
    std::string signature() const;

private:
    Ring(PrimeField f, std::vector<std::string> vars, MonomialOrder order);

    PrimeField field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

}  // namespace torhilb
