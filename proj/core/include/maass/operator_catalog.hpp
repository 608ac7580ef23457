#pragma once

#include <string>
#include <vector>

#include "maass/diff_op.hpp"

namespace maass {

// Named differential-operator instances, addressable from the CLI.
//
// quartic-h1: the order-4 operator annihilating the h_1 component of
// indefinite-index Fourier coefficients,
//   -16 v^3 d^4 - 32(k+2) v^2 d^3 - 4(5k^2+15k+7-v) v d^2
//   - 2(2k^3+5k^2+k-2-2kv-2v) d + (2k-1).
LinearDiffOp quartic_h1_operator();
LinearDiffOp quartic_h1_operator_at(const Rational& kval);

// confluent-phi: u f'' + (3-a-b) f' + (a-b-u) f          (rank-1 phi equation)
// confluent-psi: u f'' + (a+b) f' + (a-b-u) f            (rank-1 psi equation)
LinearDiffOp confluent_phi_operator(const RationalK& alpha, const RationalK& beta);
LinearDiffOp confluent_psi_operator(const RationalK& alpha, const RationalK& beta);

// whittaker-phi: u^2 f'' - (u^2 + 2(b-a) u + (a+b-1)(a+b-2)) f
// (the rank-2 phi equation with denominators cleared).
LinearDiffOp whittaker_phi_operator(const RationalK& alpha, const RationalK& beta);

struct CatalogEntry {
    std::string name;
    std::string description;
};
const std::vector<CatalogEntry>& operator_catalog();

// Build a catalog operator by name (at the standard type (1/2, k-1/2) for the
// confluent/whittaker families).  Throws on unknown names.
LinearDiffOp operator_by_name(const std::string& name);

enum class ConfluentKind { phi, psi };

struct OdeCheckResult {
    bool verified{false};
    std::string detail;
};

// Exact zero check of the named ODE on a series, up to its known window.
OdeCheckResult confluent_ode_check(ConfluentKind kind, const RationalK& alpha,
                                   const RationalK& beta, const LaurentSeries& f);
OdeCheckResult phi_whittaker_ode_check(const LaurentSeries& f, const RationalK& alpha,
                                       const RationalK& beta);

}  // namespace maass
