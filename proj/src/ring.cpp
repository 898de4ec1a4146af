#include "torhilb/ring.hpp"

#include <numeric>
#include <stdexcept>

namespace torhilb {

Ring::Ring(PrimeField f, std::vector<std::string> vars, MonomialOrder order)
    : field_(f), vars_(std::move(vars)), order_(std::move(order)) {}

RingPtr Ring::make(std::int64_t p, std::vector<std::string> vars, OrderKind kind,
                   std::vector<int> priority, int elim_block) {
    if (vars.empty()) throw std::invalid_argument("a ring needs at least one variable");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw std::invalid_argument("duplicate variable name: " + vars[i]);
    if (priority.empty()) {
        priority.resize(vars.size());
        std::iota(priority.begin(), priority.end(), 0);
    }
    if (priority.size() != vars.size()) throw std::invalid_argument("priority list size mismatch");
    MonomialOrder order(kind, std::move(priority), elim_block);
    return RingPtr(new Ring(PrimeField(p), std::move(vars), std::move(order)));
}

int Ring::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr Ring::with_elimination_vars(const std::vector<std::string>& extra) const {
    std::vector<std::string> vars = vars_;
    std::vector<int> priority;
    // appended variables first (the elimination block), then the old priority
    for (std::size_t i = 0; i < extra.size(); ++i) {
        if (var_index(extra[i]) >= 0) throw std::invalid_argument("variable already present: " + extra[i]);
        priority.push_back(static_cast<int>(vars.size()));
        vars.push_back(extra[i]);
    }
    for (int v : order_.priority()) priority.push_back(v);
    return make(field_.characteristic(), std::move(vars), order_.kind(), std::move(priority),
                static_cast<int>(extra.size()));
}

std::string Ring::signature() const {
    std::string s = "p=" + std::to_string(field_.characteristic()) + ";vars=";
    for (const auto& v : vars_) { s += v; s += ','; }
    s += ";order=";
    s += order_.kind() == OrderKind::DegRevLex ? "degrevlex" : "deglex";
    s += ";prio=";
    for (int v : order_.priority()) { s += std::to_string(v); s += ','; }
    s += ";elim=" + std::to_string(order_.elim_block());
    return s;
}

}  // namespace torhilb
