#pragma once

#include <string>
#include <vector>

#include "maass/hypergeometric.hpp"
#include "maass/laurent.hpp"

namespace maass {

// One step of the positive-definite recursion
//   4(n+1)^2 u g_{n+1} + u g_n'' + 2(2n+a+b) g_n' + (2(a-b) - u) g_n = 0.
LaurentSeries g_step(const LaurentSeries& g_n, long n, const RationalK& alpha,
                     const RationalK& beta);

// Residual of a consecutive pair under that recursion (zero series iff the
// pair satisfies it).
LaurentSeries g_recursion_residual(const LaurentSeries& g_n, const LaurentSeries& g_np1, long n,
                                   const RationalK& alpha, const RationalK& beta);

// One step of the indefinite recursion
//   (n+2)(n+1) h_{n+2} + 4 v h_n'' + 4(a+b+n) h_n' - h_n = 0.
LaurentSeries h_step(const LaurentSeries& h_n, long n, const RationalK& alpha,
                     const RationalK& beta);

LaurentSeries h_recursion_residual(const LaurentSeries& h_n, const LaurentSeries& h_np2, long n,
                                   const RationalK& alpha, const RationalK& beta);

// (b - a) h_0 = 2 v h_1' + (a + b) h_1; requires a != b.
LaurentSeries h0_from_h1(const LaurentSeries& h_1, const RationalK& alpha, const RationalK& beta);

// Companion third-order relation residual:
//   (a-b) h_1 - [8 v^2 h_0''' + 4(2+3a+3b) v h_0''
//                + (4(a+b)^2 + 2(a+b-1) - 2v) h_0' - (a+b) h_0].
LaurentSeries h1_companion_residual(const LaurentSeries& h_0, const LaurentSeries& h_1,
                                    const RationalK& alpha, const RationalK& beta);

enum class TowerCase { positive_definite, indefinite };

struct RecursionTower {
    TowerCase kind{TowerCase::positive_definite};
    RationalK alpha, beta;
    std::vector<LaurentSeries> rungs;  // g_0..g_N or h_0..h_N
    std::string seed_name;

    size_t depth() const { return rungs.size(); }
};

// Tower generation from seeds.
RecursionTower build_g_tower(const LaurentSeries& g0, long depth, const RationalK& alpha,
                             const RationalK& beta, std::string seed_name);
RecursionTower build_h_tower(const LaurentSeries& h0, const LaurentSeries& h1, long depth,
                             const RationalK& alpha, const RationalK& beta, std::string seed_name);

// Exact residual verification of every consecutive rung; returns the first
// failing index or -1 when all residuals vanish.
long tower_residual_check(const RecursionTower& tower);

// Numeric partial sum  sum_n rung_n(x) * w^n  after substituting a rational k.
// Enforces the domain constraint |w| < x^2 (positive definite) or x^2 < w
// (indefinite).
double partial_sum(const RecursionTower& tower, double x, double w, long terms,
                   const Rational& kval);

// The four indefinite-index fundamental solutions for h_1 at the scale-free
// normalization (argument v/4), as hypergeometric specs in v.
std::vector<HypergeometricSpec> indefinite_h1_seeds();

}  // namespace maass
