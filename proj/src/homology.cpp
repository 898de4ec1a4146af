#include "torhilb/homology.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace torhilb {

Resolution free_resolution(const FPModule& m, int length) {
    if (length < 1) throw std::invalid_argument("resolution length must be at least 1");
    Resolution res;
    res.target = m;
    res.modules.push_back(m.cover());
    ModuleMap step = m.presentation();
    res.modules.push_back(step.source());
    res.maps.push_back(step);
    for (int j = 1; j < length; ++j) {
        step = syzygy_map(res.maps.back());
        res.modules.push_back(step.source());
        res.maps.push_back(step);
    }
    return res;
}

namespace {
std::mutex g_res_mutex;
std::map<std::string, std::shared_ptr<const Resolution>> g_res_cache;
constexpr std::size_t kResolutionCacheCap = 512;
}  // namespace

std::shared_ptr<const Resolution> free_resolution_cached(const FPModule& m, int length) {
    std::string key = m.key();
    {
        std::lock_guard<std::mutex> lock(g_res_mutex);
        auto it = g_res_cache.find(key);
        if (it != g_res_cache.end() && it->second->length() >= length) return it->second;
    }
    auto res = std::make_shared<const Resolution>(free_resolution(m, length));
    {
        std::lock_guard<std::mutex> lock(g_res_mutex);
        if (g_res_cache.size() >= kResolutionCacheCap) g_res_cache.clear();
        auto it = g_res_cache.find(key);
        if (it == g_res_cache.end() || it->second->length() < length) g_res_cache[key] = res;
        return g_res_cache[key];
    }
}

bool resolution_composes_to_zero(const Resolution& r) {
    for (std::size_t j = 0; j + 1 < r.maps.size(); ++j)
        if (!r.maps[j].compose(r.maps[j + 1]).is_zero()) return false;
    return true;
}

namespace {

// w in R^(src_rank * k), block kappa holds the coordinates over slot kappa;
// applies (map ⊗ 1) to land in R^(tgt_rank * k).
ModVec tensor_apply(const ModuleMap& map, int k, const ModVec& w) {
    const RingPtr& ring = map.target().ring;
    ModVec out(ring, map.target().rank * k);
    for (int kappa = 0; kappa < map.source().rank; ++kappa) {
        const ModVec& col = map.columns()[static_cast<std::size_t>(kappa)];
        for (int kp = 0; kp < map.target().rank; ++kp) {
            const Polynomial& entry = col[kp];
            if (entry.is_zero()) continue;
            for (int pos = 0; pos < k; ++pos) {
                const Polynomial& c = w[kappa * k + pos];
                if (c.is_zero()) continue;
                out.set_component(kp * k + pos, out[kp * k + pos] + entry * c);
            }
        }
    }
    return out;
}

// generators of s^(⊕ slots) inside R^(slots * k): the given vectors embedded
// block-diagonally in every slot
std::vector<ModVec> block_gens(const std::vector<ModVec>& gens, int slots, int k,
                               const RingPtr& ring) {
    std::vector<ModVec> out;
    out.reserve(gens.size() * static_cast<std::size_t>(slots));
    for (int kappa = 0; kappa < slots; ++kappa) {
        for (const auto& g : gens) {
            ModVec v(ring, slots * k);
            for (int pos = 0; pos < k; ++pos)
                if (!g[pos].is_zero()) v.set_component(kappa * k + pos, g[pos]);
            out.push_back(std::move(v));
        }
    }
    return out;
}

FreeModule tensor_ambient(const FreeModule& slot_module, const FreeModule& s_ambient) {
    int k = s_ambient.rank;
    std::vector<int> shifts(static_cast<std::size_t>(slot_module.rank * k), 0);
    for (int kappa = 0; kappa < slot_module.rank; ++kappa)
        for (int pos = 0; pos < k; ++pos)
            shifts[static_cast<std::size_t>(kappa * k + pos)] =
                slot_module.shifts[static_cast<std::size_t>(kappa)] +
                s_ambient.shifts[static_cast<std::size_t>(pos)];
    return FreeModule(s_ambient.ring, slot_module.rank * k, std::move(shifts));
}

}  // namespace

TensorHomology tensor_homology(const Resolution& res, int i, const Subquotient& s) {
    if (i < 0 || i >= res.length())
        throw std::invalid_argument("spot outside the resolved range");
    const RingPtr& ring = s.ring();
    int k = s.ambient().rank;
    int r_i = res.modules[static_cast<std::size_t>(i)].rank;

    TensorHomology th;
    th.ambient = tensor_ambient(res.modules[static_cast<std::size_t>(i)], s.ambient());

    std::vector<ModVec> u_i = block_gens(s.numerator(), r_i, k, ring);
    std::vector<ModVec> v_i = block_gens(s.denominator(), r_i, k, ring);

    if (i == 0) {
        th.kernel_gens = u_i;
    } else {
        const ModuleMap& d_i = res.maps[static_cast<std::size_t>(i - 1)];
        int r_prev = res.modules[static_cast<std::size_t>(i - 1)].rank;
        std::vector<ModVec> cols;
        cols.reserve(u_i.size() + s.denominator().size() * static_cast<std::size_t>(r_prev));
        for (const auto& u : u_i) cols.push_back(tensor_apply(d_i, k, u));
        std::vector<ModVec> v_prev = block_gens(s.denominator(), r_prev, k, ring);
        for (const auto& v : v_prev) cols.push_back(v);
        std::vector<ModVec> syz = module_syzygies(ring, r_prev * k, cols);
        for (const auto& a : syz) {
            ModVec gen(ring, r_i * k);
            bool touched = false;
            for (std::size_t j = 0; j < u_i.size(); ++j) {
                if (a[static_cast<int>(j)].is_zero()) continue;
                gen = gen + u_i[j].times(a[static_cast<int>(j)]);
                touched = true;
            }
            if (touched && !gen.is_zero()) th.kernel_gens.push_back(std::move(gen));
        }
    }

    std::vector<ModVec> boundaries = v_i;
    if (i < res.length()) {
        const ModuleMap& d_next = res.maps[static_cast<std::size_t>(i)];
        std::vector<ModVec> u_next = block_gens(s.numerator(), d_next.source().rank, k, ring);
        for (const auto& u : u_next) boundaries.push_back(tensor_apply(d_next, k, u));
    }
    th.boundary_gens = module_groebner(std::move(boundaries));
    return th;
}

namespace {

TorResult zero_tor(int i, const RingPtr& ring) {
    Subquotient value(FreeModule(ring, 0), {}, {});
    return TorResult{i, value, Length::finite(0)};
}

TorResult tor_from_homology(int i, const TensorHomology& th) {
    std::vector<ModVec> num = th.kernel_gens;
    num.insert(num.end(), th.boundary_gens.begin(), th.boundary_gens.end());
    Subquotient value(th.ambient, std::move(num), th.boundary_gens);
    Length len = value.length_of();
    return TorResult{i, std::move(value), len};
}

}  // namespace

TorResult tor(int i, const FPModule& a, const Subquotient& b) {
    if (i < 0) return zero_tor(i, a.ring());
    auto res = free_resolution_cached(a, i + 1);
    return tor_from_homology(i, tensor_homology(*res, i, b));
}

TorResult tor(int i, const FPModule& a, const FPModule& b) {
    return tor(i, a, Subquotient::of_module(b));
}

TorResult tor(int i, const Subquotient& a, const Subquotient& b) {
    if (i < 0) return zero_tor(i, a.ring());
    return tor(i, a.presented(), b);
}

TorResult tor(int i, const Subquotient& a, const FPModule& b) {
    return tor(i, a, Subquotient::of_module(b));
}

bool tor_symmetric_check(int i, const FPModule& a, const FPModule& b) {
    return tor(i, a, b).length == tor(i, b, a).length;
}

namespace {

InducedTorMap induced_from(const TensorHomology& target_th,
                           const std::vector<ModVec>& source_kernel, int i) {
    InducedTorMap out;
    out.target = tor_from_homology(i, target_th);
    out.image_gens = source_kernel;
    for (const auto& g : out.image_gens)
        if (!in_span(g, out.target.value.numerator()))
            throw std::logic_error("induced image escaped the target cycles");
    std::vector<ModVec> num = source_kernel;
    num.insert(num.end(), target_th.boundary_gens.begin(), target_th.boundary_gens.end());
    out.image_numerator_gb = module_groebner(num);
    out.image_is_zero = span_equal(out.image_numerator_gb, target_th.boundary_gens);
    Subquotient image(target_th.ambient, out.image_numerator_gb, target_th.boundary_gens);
    out.image_length = image.length_of();
    return out;
}

}  // namespace

InducedTorMap induced_image_A(int i, const Ideal& I, int n, const FPModule& M,
                              const FPModule& N) {
    if (i < 0) throw std::invalid_argument("negative spot");
    auto res = free_resolution_cached(N, i + 1);
    TensorHomology th_m = tensor_homology(*res, i, Subquotient::of_module(M));
    TensorHomology th_n = tensor_homology(*res, i, scaled_submodule(I, n, M));
    return induced_from(th_m, th_n.kernel_gens, i);
}

InducedTorMap induced_image_B(int i, const Ideal& J, int m, const FPModule& M,
                              const FPModule& N) {
    if (i < 0) throw std::invalid_argument("negative spot");
    auto res = free_resolution_cached(M, i + 1);
    TensorHomology th = tensor_homology(*res, i, Subquotient::of_module(N));
    TensorHomology th_m =
        tensor_homology(*res, i, Subquotient::of_module(quotient_by_ideal_power(N, J, m)));
    return induced_from(th_m, th.kernel_gens, i);
}

StabilizationResult image_stabilization(int i, const Ideal& I, const FPModule& M,
                                        const FPModule& N, int budget) {
    if (budget < 2) throw std::invalid_argument("stabilization budget must be at least 2");
    auto res = free_resolution_cached(N, i + 1);
    TensorHomology th_m = tensor_homology(*res, i, Subquotient::of_module(M));

    int top = 2 * budget + 1;
    std::vector<std::vector<ModVec>> image_gb;  // reduced basis of image + boundaries, per n
    std::vector<std::vector<ModVec>> kernel;    // raw cycle generators, per n
    image_gb.reserve(static_cast<std::size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) {
        TensorHomology th_n = tensor_homology(*res, i, scaled_submodule(I, n, M));
        std::vector<ModVec> num = th_n.kernel_gens;
        num.insert(num.end(), th_m.boundary_gens.begin(), th_m.boundary_gens.end());
        image_gb.push_back(module_groebner(num));
        kernel.push_back(th_n.kernel_gens);
    }

    auto scaled_image_gb = [&](int n) {
        std::vector<ModVec> num;
        for (const auto& f : I.basis().elements)
            for (const auto& g : kernel[static_cast<std::size_t>(n)]) num.push_back(g.times(f));
        num.insert(num.end(), th_m.boundary_gens.begin(), th_m.boundary_gens.end());
        return module_groebner(num);
    };

    std::vector<std::vector<ModVec>> scaled;  // I * image(n) + boundaries, per n
    for (int n = 0; n <= top; ++n) scaled.push_back(scaled_image_gb(n));

    for (int k = 0; k <= budget; ++k) {
        bool ok = true;
        for (int n = k; n <= k + budget && ok; ++n)
            if (!span_equal(image_gb[static_cast<std::size_t>(n + 1)], scaled[static_cast<std::size_t>(n)]))
                ok = false;
        if (ok) return StabilizationResult{k, true, ""};
    }
    std::string diag = "no onset within budget " + std::to_string(budget) +
                       "; image spans kept moving through n = " + std::to_string(top);
    return StabilizationResult{-1, false, diag};
}

}  // namespace torhilb
