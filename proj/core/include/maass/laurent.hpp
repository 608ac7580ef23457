#pragma once

#include <string>
#include <vector>

#include "maass/exponent.hpp"
#include "maass/rational_fn.hpp"

namespace maass {

// Truncated Laurent series in one formal variable over RationalK, carried as
//
//   x^(pre) * sum_{i >= first} c_i x^i
//
// where pre is a single monomial prefactor exponent (possibly k-linear) and
// the inner sum has integer exponents.  Coefficients below `first` are exactly
// zero.  An `exact` series has all coefficients beyond the stored window
// exactly zero (a Laurent polynomial); otherwise coefficients are known
// precisely for relative exponents <= known_order() and unknown beyond.
// Arithmetic never extends the known window (min rule).
class LaurentSeries {
  public:
    LaurentSeries() : var_('u'), first_(0), exact_(true), known_(-1) {}

    static LaurentSeries zero(char var);
    static LaurentSeries zero_truncated(char var, long known);
    // exact monomial coeff * x^(pre + shift)
    static LaurentSeries monomial(char var, SymbolicExponent pre, long shift = 0,
                                  RationalK coeff = RationalK(1));
    static LaurentSeries from_coeffs(char var, SymbolicExponent pre, long first,
                                     std::vector<RationalK> coeffs, bool exact, long known = 0);

    char var() const { return var_; }
    const SymbolicExponent& prefactor() const { return pre_; }
    bool exact() const { return exact_; }
    // Largest relative exponent with a known coefficient (meaningful when !exact()).
    long known_order() const { return known_; }
    long first() const { return first_; }
    long last_stored() const { return first_ + static_cast<long>(c_.size()) - 1; }
    size_t term_count() const { return c_.size(); }

    bool is_zero() const { return c_.empty(); }
    // Coefficient of x^(pre + rel).  Throws when rel lies beyond the known window.
    const RationalK& coeff(long rel) const;

    LaurentSeries operator-() const;
    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries scaled(const RationalK& s) const;
    // multiply by s * x^dexp (integer exponent shift)
    LaurentSeries shifted(long dexp, const RationalK& s = RationalK(1)) const;
    // multiply by x^(d) for a symbolic exponent d (prefactor absorbs it)
    LaurentSeries prefactor_shifted(const SymbolicExponent& d) const;

    static LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);

    // d/dx, including the prefactor exponent: d/dx x^(pre+i) = (pre+i) x^(pre+i-1).
    LaurentSeries derivative() const;

    // Restrict the known window (no-op for exact series unless forced).
    LaurentSeries truncated(long new_known) const;

    // Substitute a rational value for k in coefficients and prefactor.
    LaurentSeries specialized(const Rational& kval) const;

    double eval_double(double x, const Rational& kval) const;

    std::string str(int max_terms = 12) const;

  private:
    void normalize();
    void check_var(const LaurentSeries& o) const;
    long rebase_delta(const LaurentSeries& o) const;

    char var_;
    SymbolicExponent pre_;
    long first_;
    std::vector<RationalK> c_;
    bool exact_;
    long known_;
};

inline LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) {
    return LaurentSeries::mul(a, b);
}
inline LaurentSeries series_diff(const LaurentSeries& a) { return a.derivative(); }

}  // namespace maass
