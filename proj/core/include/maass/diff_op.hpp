#pragma once

#include <map>
#include <string>
#include <vector>

#include "maass/hypergeometric.hpp"
#include "maass/laurent.hpp"

namespace maass {

// Linear differential operator sum_d c_d(x, k) d^d/dx^d with coefficients that
// are polynomials in the series variable x over Q(k) (finitely many Laurent
// monomials are tolerated in intermediate computations, but the finite-check
// window arithmetic assumes plain polynomial coefficients).
class LinearDiffOp {
  public:
    struct Term {
        std::vector<RationalK> coeff;  // ascending powers of the series variable
        int order;                     // derivative order d >= 0
    };

    LinearDiffOp() : var_('v') {}
    explicit LinearDiffOp(char var) : var_(var) {}

    // add c * x^vdeg * d^order
    void add_monomial(int order, long vdeg, RationalK c);
    void add_term(int order, std::vector<RationalK> coeff);

    char var() const { return var_; }
    int order() const;                 // D = max derivative order
    int max_var_degree() const;        // m_v, recomputed from stored coefficients
    const std::vector<Term>& terms() const { return terms_; }

    LaurentSeries apply(const LaurentSeries& f) const;

    std::string str() const;

  private:
    char var_;
    std::vector<Term> terms_;
};

inline LaurentSeries apply_op(const LinearDiffOp& op, const LaurentSeries& f) {
    return op.apply(f);
}

// Result of the finite verification of D(x^l pFq) = 0: either every window
// coefficient vanishes identically in k, or the first failing window index is
// reported together with the offending coefficient.
struct FiniteCheckResult {
    bool verified{false};
    long window_lo{0}, window_hi{0};
    long failed_index{0};            // relative exponent of the first nonzero coefficient
    std::string residual;            // its value as a function of k
    std::vector<long> vacuous;       // window indices that were zero for structural reasons
};

// The finite-check window: with D = op.order() and m_v = op.max_var_degree(),
// annihilation of x^l pFq(a;b;x) is equivalent to the vanishing (as rational
// functions of k) of the coefficients with relative exponent t in
// [-D, D + m_v] about the prefactor l.  The series is generated to relative
// order 2D + m_v so every window coefficient is provably exact.
FiniteCheckResult finite_check(const LinearDiffOp& op, const HypergeometricSpec& spec);

// Same check for an explicitly given series (must carry a known window of at
// least 2*op.order() + op.max_var_degree()).
FiniteCheckResult finite_check_series(const LinearDiffOp& op, const LaurentSeries& f);

}  // namespace maass
