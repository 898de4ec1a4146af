#pragma once

#include <cstdint>

namespace torhilb {

// Arithmetic in the prime field F_p, 2 <= p < 2^31. Element values are
// residues in [0, p); every operation returns a fully reduced value.
class PrimeField {
public:
    explicit PrimeField(std::int64_t p);

    std::int64_t characteristic() const { return p_; }

    // Maps an arbitrary machine integer to its residue in [0, p).
    std::int64_t reduce(std::int64_t a) const {
        std::int64_t r = a % p_;
        return r < 0 ? r + p_ : r;
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::int64_t sub(std::int64_t a, std::int64_t b) const {
        std::int64_t s = a - b;
        return s < 0 ? s + p_ : s;
    }
    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p_; }

    // Multiplicative inverse; rejects a == 0.
    std::int64_t inv(std::int64_t a) const;
    std::int64_t div(std::int64_t a, std::int64_t b) const { return mul(a, inv(b)); }
    std::int64_t pow(std::int64_t a, std::int64_t e) const;

    static bool is_prime(std::int64_t n);

private:
    std::int64_t p_;
};

}  // namespace torhilb
