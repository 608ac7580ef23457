#include "maass/diff_op.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace maass {

void LinearDiffOp::add_monomial(int order, long vdeg, RationalK c) {
    if (order < 0) throw std::invalid_argument("negative derivative order");
    if (vdeg < 0) throw std::invalid_argument("operator coefficients must be polynomial");
    for (auto& t : terms_) {
        if (t.order == order) {
            if (static_cast<long>(t.coeff.size()) <= vdeg) t.coeff.resize(vdeg + 1);
            t.coeff[static_cast<size_t>(vdeg)] += std::move(c);
            return;
        }
    }
    Term t;
    t.order = order;
    t.coeff.resize(static_cast<size_t>(vdeg) + 1);
    t.coeff[static_cast<size_t>(vdeg)] = std::move(c);
    terms_.push_back(std::move(t));
}

void LinearDiffOp::add_term(int order, std::vector<RationalK> coeff) {
    for (long j = 0; j < static_cast<long>(coeff.size()); ++j)
        if (!coeff[static_cast<size_t>(j)].is_zero())
            add_monomial(order, j, coeff[static_cast<size_t>(j)]);
}

int LinearDiffOp::order() const {
    int d = 0;
    for (const auto& t : terms_)
        for (const auto& c : t.coeff)
            if (!c.is_zero()) {
                d = std::max(d, t.order);
                break;
            }
    return d;
}

int LinearDiffOp::max_var_degree() const {
    int m = 0;
    for (const auto& t : terms_)
        for (long j = static_cast<long>(t.coeff.size()) - 1; j >= 0; --j)
            if (!t.coeff[static_cast<size_t>(j)].is_zero()) {
                m = std::max(m, static_cast<int>(j));
                break;
            }
    return m;
}

LaurentSeries LinearDiffOp::apply(const LaurentSeries& f) const {
    if (f.var() != var_)
        throw std::invalid_argument(std::string("operator variable ") + var_ +
                                    " does not match series variable " + f.var());
    LaurentSeries acc = LaurentSeries::zero(var_);
    for (const auto& t : terms_) {
        LaurentSeries d = f;
        for (int i = 0; i < t.order; ++i) d = d.derivative();
        for (long j = 0; j < static_cast<long>(t.coeff.size()); ++j) {
            const RationalK& c = t.coeff[static_cast<size_t>(j)];
            if (c.is_zero()) continue;
            acc = acc + d.shifted(j, c);
        }
    }
    return acc;
}

std::string LinearDiffOp::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        for (long j = 0; j < static_cast<long>(t.coeff.size()); ++j) {
            const RationalK& c = t.coeff[static_cast<size_t>(j)];
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            if (j > 0) os << var_ << "^" << j;
            if (t.order > 0) os << " d" << var_ << "^" << t.order;
        }
    }
    if (first) os << "0";
    return os.str();
}

namespace {

FiniteCheckResult run_window_check(const LinearDiffOp& op, const LaurentSeries& f) {
    const int D = op.order();
    const int mv = op.max_var_degree();
    FiniteCheckResult res;
    res.window_lo = -D;
    res.window_hi = D + mv;
    // Exponents the operator can reach at all: every term (d, j) maps input
    // exponent e to e - d + j, so nothing lands below f.first + min(j - d).
    long min_shift = 0;
    bool any = false;
    for (const auto& t : op.terms())
        for (long j = 0; j < static_cast<long>(t.coeff.size()); ++j)
            if (!t.coeff[static_cast<size_t>(j)].is_zero()) {
                long sh = j - t.order;
                min_shift = any ? std::min(min_shift, sh) : sh;
                any = true;
            }
    const long reach_lo = f.first() + (any ? min_shift : 0);
    LaurentSeries g = op.apply(f);
    if (!g.exact() && g.known_order() < res.window_hi)
        throw std::invalid_argument("series window too short for the finite check");
    for (long t = res.window_lo; t <= res.window_hi; ++t) {
        const RationalK& c = g.coeff(t);
        if (!c.is_zero()) {
            res.verified = false;
            res.failed_index = t;
            res.residual = c.str();
            return res;
        }
        if (t < reach_lo) res.vacuous.push_back(t);
    }
    res.verified = true;
    return res;
}

}  // namespace

FiniteCheckResult finite_check(const LinearDiffOp& op, const HypergeometricSpec& spec) {
    check_lower_parameters(spec);
    const long order = 2L * op.order() + op.max_var_degree() + 1;
    LaurentSeries f = pfq_formal(spec, order);
    return run_window_check(op, f);
}

FiniteCheckResult finite_check_series(const LinearDiffOp& op, const LaurentSeries& f) {
    if (!f.exact() && f.known_order() < 2L * op.order() + op.max_var_degree())
        throw std::invalid_argument("series window too short for the finite check");
    return run_window_check(op, f);
}

}  // namespace maass
