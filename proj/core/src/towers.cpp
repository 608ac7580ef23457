#include "maass/towers.hpp"

#include <cmath>
#include <stdexcept>

namespace maass {

namespace {
RationalK C(long n, long d = 1) { return RationalK(rat(n, d)); }
}  // namespace

LaurentSeries g_recursion_residual(const LaurentSeries& g_n, const LaurentSeries& g_np1, long n,
                                   const RationalK& alpha, const RationalK& beta) {
    LaurentSeries d1 = g_n.derivative();
    LaurentSeries d2 = d1.derivative();
    LaurentSeries r = g_np1.shifted(1, C(4 * (n + 1) * (n + 1)));
    r = r + d2.shifted(1);
    r = r + d1.scaled(C(2) * (C(2 * n) + alpha + beta));
    r = r + g_n.scaled(C(2) * (alpha - beta)) - g_n.shifted(1);
    return r;
}

LaurentSeries g_step(const LaurentSeries& g_n, long n, const RationalK& alpha,
                     const RationalK& beta) {
    LaurentSeries d1 = g_n.derivative();
    LaurentSeries d2 = d1.derivative();
    LaurentSeries num = d2.shifted(1) + d1.scaled(C(2) * (C(2 * n) + alpha + beta)) +
                        g_n.scaled(C(2) * (alpha - beta)) - g_n.shifted(1);
    return num.shifted(-1, C(-1, 4 * (n + 1) * (n + 1)));
}

LaurentSeries h_recursion_residual(const LaurentSeries& h_n, const LaurentSeries& h_np2, long n,
                                   const RationalK& alpha, const RationalK& beta) {
    LaurentSeries d1 = h_n.derivative();
    LaurentSeries d2 = d1.derivative();
    LaurentSeries r = h_np2.scaled(C((n + 2) * (n + 1)));
    r = r + d2.shifted(1, C(4));
    r = r + d1.scaled(C(4) * (alpha + beta + C(n)));
    r = r - h_n;
    return r;
}

LaurentSeries h_step(const LaurentSeries& h_n, long n, const RationalK& alpha,
                     const RationalK& beta) {
    LaurentSeries d1 = h_n.derivative();
    LaurentSeries d2 = d1.derivative();
    LaurentSeries num = h_n - d2.shifted(1, C(4)) - d1.scaled(C(4) * (alpha + beta + C(n)));
    return num.scaled(C(1, (n + 2) * (n + 1)));
}

LaurentSeries h0_from_h1(const LaurentSeries& h_1, const RationalK& alpha, const RationalK& beta) {
    RationalK denom = beta - alpha;
    if (denom.is_zero())
        throw std::domain_error("h0 from h1 requires alpha != beta as rational functions");
    LaurentSeries num = h_1.derivative().shifted(1, C(2)) + h_1.scaled(alpha + beta);
    return num.scaled(C(1) / denom);
}

LaurentSeries h1_companion_residual(const LaurentSeries& h_0, const LaurentSeries& h_1,
                                    const RationalK& alpha, const RationalK& beta) {
    LaurentSeries d1 = h_0.derivative();
    LaurentSeries d2 = d1.derivative();
    LaurentSeries d3 = d2.derivative();
    RationalK ab = alpha + beta;
    LaurentSeries rhs = d3.shifted(2, C(8));
    rhs = rhs + d2.shifted(1, C(4) * (C(2) + C(3) * ab));
    rhs = rhs + d1.scaled(C(4) * ab * ab + C(2) * (ab - C(1))) - d1.shifted(1, C(2));
    rhs = rhs - h_0.scaled(ab);
    return h_1.scaled(alpha - beta) - rhs;
}

RecursionTower build_g_tower(const LaurentSeries& g0, long depth, const RationalK& alpha,
                             const RationalK& beta, std::string seed_name) {
    RecursionTower t;
    t.kind = TowerCase::positive_definite;
    t.alpha = alpha;
    t.beta = beta;
    t.seed_name = std::move(seed_name);
    t.rungs.push_back(g0);
    for (long n = 0; n + 1 <= depth; ++n) t.rungs.push_back(g_step(t.rungs.back(), n, alpha, beta));
    return t;
}

RecursionTower build_h_tower(const LaurentSeries& h0, const LaurentSeries& h1, long depth,
                             const RationalK& alpha, const RationalK& beta, std::string seed_name) {
    RecursionTower t;
    t.kind = TowerCase::indefinite;
    t.alpha = alpha;
    t.beta = beta;
    t.seed_name = std::move(seed_name);
    t.rungs.push_back(h0);
    if (depth >= 1) t.rungs.push_back(h1);
    for (long n = 0; n + 2 <= depth; ++n)
        t.rungs.push_back(h_step(t.rungs[static_cast<size_t>(n)], n, alpha, beta));
    return t;
}

long tower_residual_check(const RecursionTower& tower) {
    if (tower.kind == TowerCase::positive_definite) {
        for (size_t n = 0; n + 1 < tower.rungs.size(); ++n) {
            LaurentSeries r = g_recursion_residual(tower.rungs[n], tower.rungs[n + 1],
                                                   static_cast<long>(n), tower.alpha, tower.beta);
            if (!r.is_zero()) return static_cast<long>(n);
        }
    } else {
        for (size_t n = 0; n + 2 < tower.rungs.size(); ++n) {
            LaurentSeries r = h_recursion_residual(tower.rungs[n], tower.rungs[n + 2],
                                                   static_cast<long>(n), tower.alpha, tower.beta);
            if (!r.is_zero()) return static_cast<long>(n);
        }
    }
    return -1;
}

double partial_sum(const RecursionTower& tower, double x, double w, long terms,
                   const Rational& kval) {
    if (tower.kind == TowerCase::positive_definite) {
        if (!(std::fabs(w) < x * x))
            throw std::domain_error("positive-definite expansion requires |second| < first^2");
    } else {
        if (!(x * x < w))
            throw std::domain_error("indefinite expansion requires first^2 < second");
    }
    double acc = 0.0;
    double wp = 1.0;
    long N = std::min<long>(terms, static_cast<long>(tower.rungs.size()) - 1);
    for (long n = 0; n <= N; ++n) {
        acc += tower.rungs[static_cast<size_t>(n)].eval_double(x, kval) * wp;
        wp *= w;
    }
    return acc;
}

std::vector<HypergeometricSpec> indefinite_h1_seeds() {
    RationalK k = RationalK::k();
    RationalK half = RationalK(rat(1, 2));
    std::vector<HypergeometricSpec> out(4);

    out[0].upper = {half};
    out[0].lower = {(C(1) + k) / C(2), C(1) + k / C(2)};
    out[0].scale = rat(1, 4);
    out[0].prefactor = SymbolicExponent{rat(0), rat(0)};
    out[0].var = 'v';

    out[1].upper = {(C(1) - k) / C(2)};
    out[1].lower = {half, C(1) - k / C(2)};
    out[1].scale = rat(1, 4);
    out[1].prefactor = SymbolicExponent{rat(0), rat(-1, 2)};
    out[1].var = 'v';

    out[2].upper = {C(1) - k / C(2)};
    out[2].lower = {RationalK(rat(3, 2)), (C(3) - k) / C(2)};
    out[2].scale = rat(1, 4);
    out[2].prefactor = SymbolicExponent{rat(1, 2), rat(-1, 2)};
    out[2].var = 'v';

    out[3].upper = {C(1), C(2) - k};
    out[3].lower = {C(5, 2) - k, C(2) - k / C(2), (C(5) - k) / C(2)};
    out[3].scale = rat(1, 4);
    out[3].prefactor = SymbolicExponent{rat(3, 2), rat(-1)};
    out[3].var = 'v';

    return out;
}

}  // namespace maass
