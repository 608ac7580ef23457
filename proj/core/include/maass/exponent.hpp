#pragma once

#include <string>

#include "maass/rational.hpp"

namespace maass {

// Exponent of a monomial prefactor of the form x^(base + kcoef*k).  Every
// series in this codebase is (single monomial prefactor) * (integer-exponent
// Laurent series), so exponent arithmetic stays exact and coefficient
// indexing stays integral.
struct SymbolicExponent {
    Rational base{0};
    Rational kcoef{0};

    SymbolicExponent() = default;
    SymbolicExponent(Rational b, Rational kc) : base(std::move(b)), kcoef(std::move(kc)) {}
    static SymbolicExponent constant(const Rational& b) { return {b, Rational(0)}; }

    bool operator==(const SymbolicExponent& o) const {
        return base == o.base && kcoef == o.kcoef;
    }
    SymbolicExponent operator+(const SymbolicExponent& o) const {
        return {base + o.base, kcoef + o.kcoef};
    }
    SymbolicExponent operator-(const SymbolicExponent& o) const {
        return {base - o.base, kcoef - o.kcoef};
    }
    bool is_zero() const { return base == 0 && kcoef == 0; }

    Rational eval(const Rational& k) const { return base + kcoef * k; }

    std::string str() const {
        std::string s = to_string(base);
        if (kcoef != 0) s += " + (" + to_string(kcoef) + ")k";
        return s;
    }
};

}  // namespace maass
