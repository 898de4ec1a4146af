#include "torhilb/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace torhilb {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.ring() != b.ring()) throw std::logic_error("polynomials from different rings");
}

namespace {

// sort descending, merge equal monomials, drop zeros
std::vector<Term> normalize(const Ring& ring, std::vector<Term> terms) {
    for (auto& t : terms) t.coeff = ring.field().reduce(t.coeff);
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ring.order().greater(a.mono, b.mono);
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff = ring.field().add(out.back().coeff, t.coeff);
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    return out;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
    Monomial one = Monomial::one(ring->nvars());
    return term(std::move(ring), std::move(one), c);
}

Polynomial Polynomial::variable(RingPtr ring, int var, std::int32_t exp) {
    Monomial m = Monomial::variable(ring->nvars(), var, exp);
    return term(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, std::int64_t c) {
    Polynomial f(ring);
    c = ring->field().reduce(c);
    if (c != 0) f.terms_.push_back(Term{std::move(m), c});
    return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial f(ring);
    f.terms_ = normalize(*ring, std::move(terms));
    return f;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.deg()));
    return d;
}

bool Polynomial::is_homogeneous() const {
    for (const auto& t : terms_)
        if (t.mono.deg() != terms_.front().mono.deg()) return false;
    return true;
}

Polynomial Polynomial::operator-() const {
    Polynomial f(ring_);
    f.terms_ = terms_;
    for (auto& t : f.terms_) t.coeff = ring_->field().neg(t.coeff);
    return f;
}

Polynomial Polynomial::scaled(std::int64_t c) const {
    c = ring_->field().reduce(c);
    Polynomial f(ring_);
    if (c == 0) return f;
    f.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::int64_t v = ring_->field().mul(t.coeff, c);
        if (v != 0) f.terms_.push_back(Term{t.mono, v});
    }
    return f;
}

Polynomial Polynomial::times_term(const Monomial& m, std::int64_t c) const {
    c = ring_->field().reduce(c);
    Polynomial f(ring_);
    if (c == 0) return f;
    f.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::int64_t v = ring_->field().mul(t.coeff, c);
        if (v != 0) f.terms_.push_back(Term{t.mono * m, v});
    }
    return f;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ == nullptr) return b;
    if (b.ring_ == nullptr) return a;
    require_same_ring(a, b);
    const Ring& ring = *a.ring_;
    Polynomial out(a.ring_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = ring.order().compare(a.terms_[i].mono, b.terms_[j].mono);
        if (c > 0) {
            out.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(b.terms_[j++]);
        } else {
            std::int64_t v = ring.field().add(a.terms_[i].coeff, b.terms_[j].coeff);
            if (v != 0) out.terms_.push_back(Term{a.terms_[i].mono, v});
            ++i, ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b);
    std::vector<Term> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_)
            prods.push_back(Term{s.mono * t.mono, a.ring_->field().mul(s.coeff, t.coeff)});
    return Polynomial::from_terms(a.ring_, std::move(prods));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (ring_ != o.ring_) {
        if (is_zero() && o.is_zero()) return true;
        throw std::logic_error("comparing polynomials from different rings");
    }
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono) return false;
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        if (i > 0) s += " + ";
        std::string ts;
        if (t.coeff != 1 || t.mono.is_one()) ts = std::to_string(t.coeff);
        for (int v = 0; v < t.mono.nvars(); ++v) {
            std::int32_t e = t.mono.exponent(v);
            if (e == 0) continue;
            if (!ts.empty()) ts += "*";
            ts += ring_->var_name(v);
            if (e > 1) ts += "^" + std::to_string(e);
        }
        s += ts;
    }
    return s;
}

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }
    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos;
        std::int64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > (std::int64_t(1) << 60)) throw ParseError("integer literal too large", start);
            ++pos;
        }
        if (pos == start) throw ParseError("expected an integer", pos);
        return v;
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() &&
            (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                         text[pos] == '_'))
                ++pos;
        }
        if (pos == start) throw ParseError("expected an identifier", pos);
        return std::string(text.substr(start, pos - start));
    }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
    Lexer lx{text};
    std::vector<Term> terms;
    bool first = true;
    while (!lx.eof()) {
        std::int64_t sign = 1;
        if (lx.accept('+')) {
            // explicit plus
        } else if (lx.accept('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", lx.pos);
        }
        while (lx.accept('-')) sign = -sign;
        first = false;

        // a term is a product of integer and variable-power factors
        std::int64_t coeff = ring->field().reduce(sign);
        Monomial mono = Monomial::one(ring->nvars());
        bool any_factor = false;
        for (;;) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff = ring->field().mul(coeff, ring->field().reduce(lx.integer()));
                any_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t at = lx.pos;
                std::string name = lx.identifier();
                int var = ring->var_index(name);
                if (var < 0) throw ParseError("unknown variable '" + name + "'", at);
                std::int64_t exp = 1;
                if (lx.accept('^')) exp = lx.integer();
                if (exp < 0 || exp > (1 << 20)) throw ParseError("exponent out of range", at);
                mono = mono * Monomial::variable(ring->nvars(), var, static_cast<std::int32_t>(exp));
                any_factor = true;
            } else {
                break;
            }
            lx.accept('*');
        }
        if (!any_factor) throw ParseError("expected a term", lx.pos);
        terms.push_back(Term{std::move(mono), coeff});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial transport(const Polynomial& f, const RingPtr& target) {
    if (f.ring() == target) return f;
    const Ring& src = *f.ring();
    std::vector<int> map(static_cast<std::size_t>(src.nvars()), -1);
    for (int v = 0; v < src.nvars(); ++v) map[static_cast<std::size_t>(v)] = target->var_index(src.var_name(v));
    std::vector<Term> terms;
    terms.reserve(f.nterms());
    for (const auto& t : f.terms()) {
        std::vector<std::int32_t> e(static_cast<std::size_t>(target->nvars()), 0);
        for (int v = 0; v < src.nvars(); ++v) {
            std::int32_t x = t.mono.exponent(v);
            if (x == 0) continue;
            int w = map[static_cast<std::size_t>(v)];
            if (w < 0)
                throw std::invalid_argument("variable '" + src.var_name(v) +
                                            "' does not exist in the target ring");
            e[static_cast<std::size_t>(w)] = x;
        }
        terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

Polynomial substitute_zero(const Polynomial& f, const std::vector<int>& vars) {
    std::vector<Term> keep;
    for (const auto& t : f.terms()) {
        bool dies = false;
        for (int v : vars)
            if (t.mono.exponent(v) > 0) { dies = true; break; }
        if (!dies) keep.push_back(t);
    }
    return Polynomial::from_terms(f.ring(), std::move(keep));
}

}  // namespace torhilb
