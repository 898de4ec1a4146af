#include "torhilb/field.hpp"

#include <stdexcept>
#include <string>

namespace torhilb {

PrimeField::PrimeField(std::int64_t p) : p_(p) {
    if (p < 2 || p >= (std::int64_t(1) << 31))
        throw std::invalid_argument("characteristic out of range: " + std::to_string(p));
    if (!is_prime(p))
        throw std::invalid_argument("characteristic is not prime: " + std::to_string(p));
}

std::int64_t PrimeField::inv(std::int64_t a) const {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    // extended Euclid on (a, p)
    std::int64_t r0 = a, r1 = p_, s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return reduce(s0);
}

std::int64_t PrimeField::pow(std::int64_t a, std::int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    std::int64_t base = reduce(a), acc = 1;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool PrimeField::is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace torhilb
