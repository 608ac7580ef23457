#include "maass/operator_catalog.hpp"

#include <stdexcept>

namespace maass {

namespace {
RationalK K() { return RationalK::k(); }
RationalK C(long n, long d = 1) { return RationalK(rat(n, d)); }
}  // namespace

LinearDiffOp quartic_h1_operator() {
    LinearDiffOp op('v');
    RationalK k = K();
    op.add_monomial(4, 3, C(-16));
    op.add_monomial(3, 2, C(-32) * (k + C(2)));
    // -4(5k^2+15k+7-v) v d^2 = -4(5k^2+15k+7) v d^2 + 4 v^2 d^2
    op.add_monomial(2, 1, C(-4) * (C(5) * k * k + C(15) * k + C(7)));
    op.add_monomial(2, 2, C(4));
    // -2(2k^3+5k^2+k-2-2kv-2v) d = -2(2k^3+5k^2+k-2) d + (4k+4) v d
    op.add_monomial(1, 0, C(-2) * (C(2) * k * k * k + C(5) * k * k + k - C(2)));
    op.add_monomial(1, 1, C(4) * k + C(4));
    op.add_monomial(0, 0, C(2) * k - C(1));
    return op;
}

LinearDiffOp quartic_h1_operator_at(const Rational& kval) {
    LinearDiffOp formal = quartic_h1_operator();
    LinearDiffOp op('v');
    for (const auto& t : formal.terms())
        for (long j = 0; j < static_cast<long>(t.coeff.size()); ++j) {
            const RationalK& c = t.coeff[static_cast<size_t>(j)];
            if (!c.is_zero()) op.add_monomial(t.order, j, RationalK(c.eval(kval)));
        }
    return op;
}

LinearDiffOp confluent_phi_operator(const RationalK& alpha, const RationalK& beta) {
    LinearDiffOp op('u');
    op.add_monomial(2, 1, C(1));
    op.add_monomial(1, 0, C(3) - alpha - beta);
    op.add_monomial(0, 0, alpha - beta);
    op.add_monomial(0, 1, C(-1));
    return op;
}

LinearDiffOp confluent_psi_operator(const RationalK& alpha, const RationalK& beta) {
    LinearDiffOp op('u');
    op.add_monomial(2, 1, C(1));
    op.add_monomial(1, 0, alpha + beta);
    op.add_monomial(0, 0, alpha - beta);
    op.add_monomial(0, 1, C(-1));
    return op;
}

LinearDiffOp whittaker_phi_operator(const RationalK& alpha, const RationalK& beta) {
    LinearDiffOp op('u');
    op.add_monomial(2, 2, C(1));
    op.add_monomial(0, 2, C(-1));
    op.add_monomial(0, 1, C(-2) * (beta - alpha));
    op.add_monomial(0, 0, C(-1) * (alpha + beta - C(1)) * (alpha + beta - C(2)));
    return op;
}

const std::vector<CatalogEntry>& operator_catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"quartic-h1", "order-4 annihilator of the indefinite-index h_1 solutions"},
        {"confluent-phi", "rank-1 phi equation at type (1/2, k-1/2)"},
        {"confluent-psi", "rank-1 psi equation at type (1/2, k-1/2)"},
        {"whittaker-phi", "rank-2 phi equation (Whittaker form) at type (1/2, k-1/2)"},
    };
    return entries;
}

LinearDiffOp operator_by_name(const std::string& name) {
    RationalK alpha = RationalK(rat(1, 2));
    RationalK beta = K() - RationalK(rat(1, 2));
    if (name == "quartic-h1") return quartic_h1_operator();
    if (name == "confluent-phi") return confluent_phi_operator(alpha, beta);
    if (name == "confluent-psi") return confluent_psi_operator(alpha, beta);
    if (name == "whittaker-phi") return whittaker_phi_operator(alpha, beta);
    throw std::invalid_argument("unknown operator: " + name);
}

namespace {
OdeCheckResult zero_check(const LinearDiffOp& op, const LaurentSeries& f) {
    LaurentSeries r = op.apply(f);
    OdeCheckResult res;
    if (r.is_zero()) {
        res.verified = true;
        res.detail = r.exact() ? "identically zero" : "zero through order " + std::to_string(r.known_order());
    } else {
        res.verified = false;
        res.detail = "first nonzero coefficient at relative exponent " + std::to_string(r.first()) +
                     ": " + r.coeff(r.first()).str();
    }
    return res;
}
}  // namespace

OdeCheckResult confluent_ode_check(ConfluentKind kind, const RationalK& alpha,
                                   const RationalK& beta, const LaurentSeries& f) {
    LinearDiffOp op = kind == ConfluentKind::phi ? confluent_phi_operator(alpha, beta)
                                                 : confluent_psi_operator(alpha, beta);
    return zero_check(op, f);
}

OdeCheckResult phi_whittaker_ode_check(const LaurentSeries& f, const RationalK& alpha,
                                       const RationalK& beta) {
    return zero_check(whittaker_phi_operator(alpha, beta), f);
}

}  // namespace maass
