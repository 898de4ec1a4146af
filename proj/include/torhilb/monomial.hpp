#pragma once

#include <cstdint>
#include <vector>

namespace torhilb {

// Exponent vector of a monomial, with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::int32_t> exps);
    static Monomial one(int nvars);
    static Monomial variable(int nvars, int var, std::int32_t exp = 1);

    int nvars() const { return static_cast<int>(e_.size()); }
    std::int32_t deg() const { return deg_; }
    std::int32_t exponent(int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int32_t>& exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    // a / b; requires b | a
    static Monomial quotient(const Monomial& a, const Monomial& b);
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool divides(const Monomial& m) const;
    bool coprime_with(const Monomial& m) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<std::int32_t> e_;
    std::int32_t deg_ = 0;
};

enum class OrderKind { DegRevLex, DegLex };

// Graded total order on monomials of a fixed ring. `priority` lists variable
// indices from highest to lowest precedence; the first `elim_block` entries
// form a dominant block, making the order an elimination order for them.
class MonomialOrder {
public:
    MonomialOrder() = default;
    MonomialOrder(OrderKind kind, int nvars);
    MonomialOrder(OrderKind kind, std::vector<int> priority, int elim_block = 0);

    OrderKind kind() const { return kind_; }
    int nvars() const { return static_cast<int>(priority_.size()); }
    const std::vector<int>& priority() const { return priority_; }
    int elim_block() const { return elim_; }

    // +1 when a > b, 0 on equality, -1 when a < b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    int compare_block(const Monomial& a, const Monomial& b, int lo, int hi) const;

    OrderKind kind_ = OrderKind::DegRevLex;
    std::vector<int> priority_;
    int elim_ = 0;
};

}  // namespace torhilb
