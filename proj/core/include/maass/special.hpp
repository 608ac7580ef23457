#pragma once

#include <string>

namespace maass {

// Numeric evaluation policy shared by the special-function routines.
struct NumericPrecision {
    double rel_tol{1e-9};        // target relative accuracy of series/CF evaluation
    long series_cutoff{100000};  // term budget for series summation
    double asym_ratio_tol{5e-2}; // tolerance for asymptotic-ratio checks
};

// Upper incomplete gamma Gamma(a, y) = int_y^inf e^-w w^(a-1) dw for real a
// (including a <= 0) and y > 0.
double incomplete_gamma(double a, double y, const NumericPrecision& prec = {});

// Whittaker functions.  whittaker_m uses the confluent series; whittaker_w the
// Euler integral representation, which requires mu - nu + 1/2 > 0 after the
// mu -> |mu| symmetry; parameter sets outside that range are rejected.
double whittaker_m(double nu, double mu, double y, const NumericPrecision& prec = {});
double whittaker_w(double nu, double mu, double y, const NumericPrecision& prec = {});

enum class WhittakerKind { M, W };
double whittaker(WhittakerKind kind, double nu, double mu, double y,
                 const NumericPrecision& prec = {});

// d/dy of the Whittaker functions (series differentiation for M, the shifted
// integral representation for W).
double whittaker_m_prime(double nu, double mu, double y, const NumericPrecision& prec = {});
double whittaker_w_prime(double nu, double mu, double y, const NumericPrecision& prec = {});

// H(w) = e^-w Gamma(3/2 - k, -2w) for w < 0 (all integer k); the defining
// integral for w > 0 needs the continuation in k that is out of scope here,
// so positive arguments are rejected.
double h_function(double w, long k, const NumericPrecision& prec = {});

// Residual of the Whittaker ODE f'' + (-1/4 + nu/y + (1/4 - mu^2)/y^2) f = 0
// under numeric second differences at y (diagnostic used by tests/suites).
double whittaker_ode_residual(WhittakerKind kind, double nu, double mu, double y, double h = 1e-3);

}  // namespace maass
