#pragma once

#include <string>
#include <vector>

#include "maass/laurent.hpp"

namespace maass {

// Rising factorial (a)_n = a(a+1)...(a+n-1) over the exact field.
RationalK pochhammer(const RationalK& a, unsigned n);

// Generalized hypergeometric series pFq(a1..ap; b1..bq; sigma * x) attached to
// a monomial prefactor x^prefactor.  The argument scale sigma is kept as
// rational * pi^pi_power; formal expansion requires pi_power == 0 so that all
// coefficients stay in Q(k).
struct HypergeometricSpec {
    std::vector<RationalK> upper;
    std::vector<RationalK> lower;
    Rational scale{1};
    int pi_power{0};
    SymbolicExponent prefactor{};
    char var{'v'};

    std::string str() const;
};

// Checks the lower-parameter hypothesis: each constant lower parameter must
// not be a nonpositive integer; k-dependent lower parameters are nonintegral
// for generic k.  Throws std::domain_error on violation.
void check_lower_parameters(const HypergeometricSpec& spec);

// Formal truncated expansion with coefficients c_n = prod(a_i)_n /
// (prod(b_j)_n n!) * scale^n for n <= order, carrying the prefactor.
LaurentSeries pfq_formal(const HypergeometricSpec& spec, long order);

// As above but every coefficient specialized at a rational k.
LaurentSeries pfq_formal_at(const HypergeometricSpec& spec, long order, const Rational& kval);

// Contiguous shift a -> a+1, b -> b+1 (used by the contiguous-relation and
// derivative-relation property checks).
HypergeometricSpec shifted_parameters(const HypergeometricSpec& spec);

// Numeric evaluation at real argument z (parameters already numeric, i.e.
// constant in k).  Requires a convergent regime: p <= q always converges;
// p == q+1 requires |z| < 1 unless the series terminates.
double pfq_numeric(const std::vector<double>& upper, const std::vector<double>& lower, double z,
                   double rel_tol = 1e-15);

}  // namespace maass
