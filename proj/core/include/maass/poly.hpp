#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "maass/rational.hpp"

namespace maass {

// Univariate polynomial in the formal weight parameter k, exact rational
// coefficients, stored in ascending degree with no trailing zeros.
class PolyK {
  public:
    PolyK() = default;
    PolyK(const Rational& c);  // NOLINT: implicit constant embedding is intended
    PolyK(long c) : PolyK(Rational(c)) {}
    explicit PolyK(std::vector<Rational> coeffs);

    static PolyK variable();                                   // k
    static PolyK affine(const Rational& a, const Rational& b); // a + b*k

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rational& coeff(int i) const;
    const Rational& leading() const;
    bool is_constant() const { return c_.size() <= 1; }

    Rational eval(const Rational& k) const;

    PolyK operator-() const;
    PolyK operator+(const PolyK& o) const;
    PolyK operator-(const PolyK& o) const;
    PolyK operator*(const PolyK& o) const;
    bool operator==(const PolyK& o) const { return c_ == o.c_; }

    PolyK scaled(const Rational& s) const;
    PolyK monic() const;

    // Euclidean division: *this = q*d + r with deg r < deg d.
    static void divmod(const PolyK& a, const PolyK& d, PolyK& q, PolyK& r);
    static PolyK gcd(PolyK a, PolyK b);  // monic gcd

    std::string str(const std::string& var = "k") const;

  private:
    void normalize();
    std::vector<Rational> c_;
};

}  // namespace maass
