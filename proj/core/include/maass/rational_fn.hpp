#pragma once

#include <string>

#include "maass/poly.hpp"

namespace maass {

// Rational function in the formal weight parameter k.  Normal form: monic
// denominator, gcd(num, den) = 1, zero represented as 0/1.
class RationalK {
  public:
    RationalK() : num_(), den_(Rational(1)) {}
    RationalK(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
    RationalK(long c) : num_(Rational(c)), den_(Rational(1)) {}   // NOLINT
    RationalK(PolyK p) : num_(std::move(p)), den_(Rational(1)) {} // NOLINT
    RationalK(PolyK num, PolyK den);

    static RationalK k() { return RationalK(PolyK::variable()); }
    static RationalK affine(const Rational& a, const Rational& b) {
        return RationalK(PolyK::affine(a, b));
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    const PolyK& num() const { return num_; }
    const PolyK& den() const { return den_; }

    // Exact evaluation at a rational value of k; throws if the denominator
    // vanishes there.
    Rational eval(const Rational& k) const;

    RationalK operator-() const;
    RationalK operator+(const RationalK& o) const;
    RationalK operator-(const RationalK& o) const;
    RationalK operator*(const RationalK& o) const;
    RationalK operator/(const RationalK& o) const;
    RationalK& operator+=(const RationalK& o) { return *this = *this + o; }
    RationalK& operator-=(const RationalK& o) { return *this = *this - o; }
    RationalK& operator*=(const RationalK& o) { return *this = *this * o; }
    RationalK& operator/=(const RationalK& o) { return *this = *this / o; }
    bool operator==(const RationalK& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str() const;

  private:
    void normalize();
    PolyK num_, den_;
};

inline RationalK operator*(const Rational& s, const RationalK& f) { return RationalK(s) * f; }

}  // namespace maass
