#pragma once

#include <string>
#include <vector>

#include "torhilb/groebner.hpp"
#include "torhilb/length.hpp"
#include "torhilb/modvec.hpp"

namespace torhilb {

// Free module R^rank with degree shifts on the basis vectors. Shifts are
// carried for diagnostics; no computation below depends on them.
struct FreeModule {
    RingPtr ring;
    int rank = 0;
    std::vector<int> shifts;

    FreeModule() = default;
    FreeModule(RingPtr ring, int rank);
    FreeModule(RingPtr ring, int rank, std::vector<int> shifts);
};

// Map of free modules, stored as columns (images of the source basis).
class ModuleMap {
public:
    ModuleMap(FreeModule source, FreeModule target, std::vector<ModVec> cols);
    static ModuleMap zero(FreeModule source, FreeModule target);

    const FreeModule& source() const { return source_; }
    const FreeModule& target() const { return target_; }
    const std::vector<ModVec>& columns() const { return cols_; }
    bool is_zero() const;

    ModVec apply(const ModVec& v) const;
    // this(other(...)): other's target must match this source
    ModuleMap compose(const ModuleMap& other) const;

private:
    FreeModule source_, target_;
    std::vector<ModVec> cols_;
};

// Map whose image is the kernel of m; certified by m(column) == 0 for every
// column. Source shifts are the internal degrees of the syzygies.
ModuleMap syzygy_map(const ModuleMap& m);

// Finitely presented module: the cokernel of a relations submodule inside a
// free cover. Relations are normalized to the reduced module Groebner basis,
// so equal modules have identical representations.
class FPModule {
public:
    FPModule() = default;  // detached placeholder
    FPModule(FreeModule cover, std::vector<ModVec> relations);
    static FPModule free_module(RingPtr ring, int rank);
    static FPModule cyclic_quotient(const Ideal& ideal);  // R / ideal
    static FPModule from_columns(RingPtr ring, int rank, std::vector<ModVec> cols);

    const FreeModule& cover() const { return cover_; }
    const RingPtr& ring() const { return cover_.ring; }
    const std::vector<ModVec>& relations() const { return rels_; }
    ModuleMap presentation() const;
    bool is_zero_module() const;

    // stable identity string (ring, rank, relations); cache key material
    std::string key() const;
    std::string str() const;

private:
    FreeModule cover_;
    std::vector<ModVec> rels_;  // reduced basis
};

// Subquotient U/V of a free module; V ⊆ U is certified on construction and
// both parts are kept as reduced bases.
class Subquotient {
public:
    Subquotient() = default;  // detached placeholder
    Subquotient(FreeModule ambient, std::vector<ModVec> num, std::vector<ModVec> den);
    static Subquotient of_module(const FPModule& m);

    const FreeModule& ambient() const { return ambient_; }
    const RingPtr& ring() const { return ambient_.ring; }
    const std::vector<ModVec>& numerator() const { return num_; }     // reduced basis of U
    const std::vector<ModVec>& denominator() const { return den_; }   // reduced basis of V
    bool is_zero_quotient() const;                                    // U ⊆ V

    // cokernel presentation on the numerator generators
    FPModule presented() const;
    Length length_of() const;
    // { f : f * U ⊆ V }
    Ideal annihilator_ideal() const;
    std::string str() const;

private:
    FreeModule ambient_;
    std::vector<ModVec> num_, den_;
};

// M / (I^n M) as a finitely presented module on M's cover.
FPModule quotient_by_ideal_power(const FPModule& m, const Ideal& ideal, int n);

// I^n M as a subquotient of M's cover: (I^n * cover + relations) / relations.
Subquotient scaled_submodule(const Ideal& ideal, int n, const FPModule& m);

// Intersection of two column spans inside a common ambient free module,
// computed from the syzygies of the concatenated generator list.
std::vector<ModVec> submodule_intersect(const RingPtr& ring, int ambient_rank,
                                        const std::vector<ModVec>& u,
                                        const std::vector<ModVec>& w);

// { f : f * v ∈ span }
Ideal submodule_colon(const RingPtr& ring, int ambient_rank,
                      const std::vector<ModVec>& span_cols, const ModVec& v);

Ideal annihilator(const FPModule& m);

// Length of the cokernel of a reduced relations basis in R^rank: the number
// of module monomials outside the leading terms, or infinite when some
// position is positive dimensional.
Length cokernel_length(const RingPtr& ring, int rank, const std::vector<ModVec>& rels_gb);

Length module_length(const Subquotient& s);

}  // namespace torhilb
