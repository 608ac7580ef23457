#pragma once

#include <string>
#include <vector>

#include "maass/rational.hpp"
#include "maass/towers.hpp"

namespace maass {

enum class GrowthSeed { zero, laurent_poly, m_integral, w_integral };

std::string growth_seed_name(GrowthSeed s);

// Empirical growth classification of sum_n g_n(u) (u/kappa)^n along a u-grid.
// Two rapid-growth detectors feed the verdict:
//   (1) partial sums exceed the envelope u^(|1-k|+4) at a majority of the
//       top-half grid points (catches exponential-type seeds at desk scale);
//   (2) for Laurent-polynomial towers, the exact total-series coefficients of
//       u^j for j > deg g_0 are all positive for some kappa in a doubling
//       ladder -- the coefficient-positivity route to super-polynomial growth,
//       checked in exact arithmetic (polynomially bounded partial sums on a
//       finite grid cannot witness it directly).
struct GrowthReport {
    GrowthSeed seed{GrowthSeed::zero};
    long k{0};
    long depth{0};
    double kappa{0};             // the kappa used for the partial sums (= 2b)
    double coeff_bound{0};       // observed coefficient growth bound b
    long envelope_exponent{0};   // |1-k| + 4
    std::vector<double> grid;
    std::vector<double> partial_sums;
    std::vector<double> envelope;
    bool envelope_exceeded{false};   // majority rule on the top half
    bool positivity_checked{false};  // Laurent-polynomial route attempted
    bool positivity_holds{false};
    std::string positivity_kappa;    // exact kappa witnessing positivity, if any
    std::vector<double> window_coefficients;  // the checked total coefficients
    std::string verdict;             // "rapid" | "moderate"
};

GrowthReport growth_diagnostic(GrowthSeed seed, long k, long depth,
                               const std::vector<double>& ugrid);

// Exact ratio of the v^n coefficients (by position in each series' own
// exponent lattice) of
//   (v/4)^(3/2-k)  2F3(1, 2-k; 5/2-k, 2-k/2, (5-k)/2; v/4)   and
//   (v/4)^(-k/2)   1F2((1-k)/2; 1/2, 1-k/2; v/4)
// for integer k < 0.
struct RatioDecayReport {
    long k{0};
    long terms{0};
    std::vector<Rational> ratios;
    long monotone_from{-1};        // smallest index from which the ratios decrease
    bool tail_positive_a{false};   // numerator-series coefficients positive for large n
    bool tail_positive_b{false};
    Rational final_ratio{0};
};

RatioDecayReport coeff_ratio_decay(long k, long terms);

}  // namespace maass
