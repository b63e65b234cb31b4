#pragma once

#include "disjcalc/rational.hpp"

#include <map>

namespace disjcalc {

/// Exact linear combination over an ordered basis type.  Zero coefficients
/// are never stored, so equality of combos is equality of maps.
template <typename B>
class LinearCombo {
public:
    using Terms = std::map<B, Rational>;

    LinearCombo() = default;
    LinearCombo(const B& b, Rational c = 1) { add(b, c); }

    void add(const B& b, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, fresh] = terms_.try_emplace(b, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    void add(const LinearCombo& other, const Rational& c = 1)
    {
        for (const auto& [b, x] : other.terms_)
            add(b, x * c);
    }

    LinearCombo& operator+=(const LinearCombo& o) { add(o); return *this; }
    LinearCombo& operator-=(const LinearCombo& o) { add(o, -1); return *this; }
    LinearCombo operator-() const
    {
        LinearCombo r;
        r.add(*this, -1);
        return r;
    }
    friend LinearCombo operator+(LinearCombo a, const LinearCombo& b) { a += b; return a; }
    friend LinearCombo operator-(LinearCombo a, const LinearCombo& b) { a -= b; return a; }

    LinearCombo scaled(const Rational& c) const
    {
        LinearCombo r;
        r.add(*this, c);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    Rational coeff(const B& b) const
    {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool operator==(const LinearCombo&) const = default;

private:
    Terms terms_;
};

} // namespace disjcalc
