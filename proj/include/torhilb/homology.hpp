#pragma once

#include <memory>
#include <string>
#include <vector>

#include "torhilb/modules.hpp"

namespace torhilb {

// Chain of free modules resolving `target`:
//   modules[len] -> ... -> modules[1] -> modules[0] ->> target,
// with maps[j]: modules[j+1] -> modules[j]; maps[0] is the presentation and
// each later map is the syzygy map of the previous one, so consecutive
// compositions vanish and the interior homology is zero by construction.
struct Resolution {
    std::vector<FreeModule> modules;
    std::vector<ModuleMap> maps;
    FPModule target;

    int length() const { return static_cast<int>(maps.size()); }
};

Resolution free_resolution(const FPModule& m, int length);

// Shared cache keyed by the module's canonical presentation; safe for
// concurrent use. A cached resolution is reused when it is long enough.
std::shared_ptr<const Resolution> free_resolution_cached(const FPModule& m, int length);

bool resolution_composes_to_zero(const Resolution& r);

// Value of a derived tensor functor in slot `index`, carried as a subquotient
// in free coordinates over the second argument's ambient module.
struct TorResult {
    int index = 0;
    Subquotient value;
    Length length;
};

// Homology of a free resolution tensored with a subquotient, at one spot.
// `kernel_gens` span the cycles (inside the numerator of the tensored slot),
// `boundary_gens` the boundaries together with the slot's denominator.
struct TensorHomology {
    FreeModule ambient;
    std::vector<ModVec> kernel_gens;
    std::vector<ModVec> boundary_gens;  // reduced basis
};

TensorHomology tensor_homology(const Resolution& res, int i, const Subquotient& s);

// Always resolves the first argument and tensors with the second.
TorResult tor(int i, const FPModule& a, const Subquotient& b);
TorResult tor(int i, const FPModule& a, const FPModule& b);
TorResult tor(int i, const Subquotient& a, const Subquotient& b);
TorResult tor(int i, const Subquotient& a, const FPModule& b);

// Balance cross-check: lengths agree when the two arguments are swapped.
bool tor_symmetric_check(int i, const FPModule& a, const FPModule& b);

// Image of a map of derived-functor values, in the target's coordinates.
struct InducedTorMap {
    TorResult target;
    std::vector<ModVec> image_gens;           // generators, in target ambient coordinates
    std::vector<ModVec> image_numerator_gb;   // reduced basis of (image + boundaries)
    bool image_is_zero = false;
    Length image_length;
};

// Image of the map induced by the inclusion I^n M ⊆ M on the i-th derived
// functor against one fixed resolution of N.
InducedTorMap induced_image_A(int i, const Ideal& I, int n, const FPModule& M,
                              const FPModule& N);

// Image of the map induced by the projection N ->> N/J^m N on the i-th
// derived functor against one fixed resolution of M.
InducedTorMap induced_image_B(int i, const Ideal& J, int m, const FPModule& M,
                              const FPModule& N);

// Smallest k <= budget such that image(n+1) equals I * image(n), as reduced
// bases, for every n in [k, k + budget].
struct StabilizationResult {
    int k = -1;
    bool verified = false;
    std::string diagnostics;
};

StabilizationResult image_stabilization(int i, const Ideal& I, const FPModule& M,
                                        const FPModule& N, int budget);

}  // namespace torhilb
