#include "torhilb/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace torhilb {

namespace {
constexpr std::int32_t kMaxExponent = 1 << 24;
}

Monomial::Monomial(std::vector<std::int32_t> exps) : e_(std::move(exps)) {
    std::int64_t d = 0;
    for (std::int32_t x : e_) {
        if (x < 0) throw std::invalid_argument("negative exponent");
        d += x;
    }
    if (d > kMaxExponent) throw std::overflow_error("monomial degree exceeds the supported bound");
    deg_ = static_cast<std::int32_t>(d);
}

Monomial Monomial::one(int nvars) {
    return Monomial(std::vector<std::int32_t>(static_cast<std::size_t>(nvars), 0));
}

Monomial Monomial::variable(int nvars, int var, std::int32_t exp) {
    std::vector<std::int32_t> e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(var)) = exp;
    return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::logic_error("monomial arity mismatch");
    std::vector<std::int32_t> e(a.e_.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::int64_t s = std::int64_t(a.e_[i]) + b.e_[i];
        if (s > kMaxExponent) throw std::overflow_error("monomial exponent exceeds the supported bound");
        e[i] = static_cast<std::int32_t>(s);
    }
    return Monomial(std::move(e));
}

Monomial Monomial::quotient(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::logic_error("monomial arity mismatch");
    std::vector<std::int32_t> e(a.e_.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (a.e_[i] < b.e_[i]) throw std::domain_error("monomial quotient is not exact");
        e[i] = a.e_[i] - b.e_[i];
    }
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::logic_error("monomial arity mismatch");
    std::vector<std::int32_t> e(a.e_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& m) const {
    if (nvars() != m.nvars()) throw std::logic_error("monomial arity mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > m.e_[i]) return false;
    return true;
}

bool Monomial::coprime_with(const Monomial& m) const {
    if (nvars() != m.nvars()) throw std::logic_error("monomial arity mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && m.e_[i] > 0) return false;
    return true;
}

MonomialOrder::MonomialOrder(OrderKind kind, int nvars) : kind_(kind) {
    priority_.resize(static_cast<std::size_t>(nvars));
    std::iota(priority_.begin(), priority_.end(), 0);
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<int> priority, int elim_block)
    : kind_(kind), priority_(std::move(priority)), elim_(elim_block) {
    if (elim_ < 0 || elim_ > nvars()) throw std::invalid_argument("bad elimination block size");
    std::vector<bool> seen(priority_.size(), false);
    for (int v : priority_) {
        if (v < 0 || v >= nvars() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("priority list is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

int MonomialOrder::compare_block(const Monomial& a, const Monomial& b, int lo, int hi) const {
    std::int64_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.exponent(priority_[static_cast<std::size_t>(i)]);
        db += b.exponent(priority_[static_cast<std::size_t>(i)]);
    }
    if (da != db) return da > db ? 1 : -1;
    if (kind_ == OrderKind::DegRevLex) {
        for (int i = hi - 1; i >= lo; --i) {
            int v = priority_[static_cast<std::size_t>(i)];
            if (a.exponent(v) != b.exponent(v)) return a.exponent(v) < b.exponent(v) ? 1 : -1;
        }
    } else {
        for (int i = lo; i < hi; ++i) {
            int v = priority_[static_cast<std::size_t>(i)];
            if (a.exponent(v) != b.exponent(v)) return a.exponent(v) > b.exponent(v) ? 1 : -1;
        }
    }
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != nvars() || b.nvars() != nvars())
        throw std::logic_error("monomial does not belong to this order's ring");
    if (elim_ > 0) {
        int c = compare_block(a, b, 0, elim_);
        if (c != 0) return c;
        return compare_block(a, b, elim_, nvars());
    }
    return compare_block(a, b, 0, nvars());
}

}  // namespace torhilb
