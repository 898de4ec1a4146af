#pragma once

#include <stdexcept>
#include <string>

namespace torhilb {

// Length of a module: a non-negative integer or the explicit infinite
// sentinel. Arithmetic on lengths must branch on finiteness; only addition
// (where infinity absorbs) is provided directly.
class Length {
public:
    Length() = default;  // zero
    static Length finite(long long v) {
        if (v < 0) throw std::invalid_argument("negative length");
        Length l;
        l.value_ = v;
        return l;
    }
    static Length infinite() {
        Length l;
        l.finite_ = false;
        return l;
    }

    bool is_finite() const { return finite_; }
    bool is_infinite() const { return !finite_; }
    long long value() const {
        if (!finite_) throw std::domain_error("value() on an infinite length");
        return value_;
    }

    friend Length operator+(const Length& a, const Length& b) {
        if (a.is_infinite() || b.is_infinite()) return infinite();
        return finite(a.value_ + b.value_);
    }
    friend bool operator==(const Length& a, const Length& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const Length& a, const Length& b) { return !(a == b); }

    std::string str() const { return finite_ ? std::to_string(value_) : "INF"; }

private:
    bool finite_ = true;
    long long value_ = 0;
};

}  // namespace torhilb
