#include "maass/growth.hpp"

#include <cmath>
#include <stdexcept>

#include "maass/quadrature.hpp"
#include "maass/special.hpp"

namespace maass {

std::string growth_seed_name(GrowthSeed s) {
    switch (s) {
        case GrowthSeed::zero: return "zero";
        case GrowthSeed::laurent_poly: return "laurent-poly";
        case GrowthSeed::m_integral: return "m-integral";
        case GrowthSeed::w_integral: return "w-integral";
    }
    return "?";
}

namespace {

double max_abs_coeff(const LaurentSeries& s, const Rational& kval) {
    double m = 0.0;
    for (long j = s.first(); j <= s.last_stored(); ++j)
        m = std::max(m, std::fabs(to_double(s.coeff(j).eval(kval))));
    return m;
}

// Every rung of a Whittaker-seeded tower is P psi + Q phi + R phi' with
// psi' = phi/u and phi'' = q(u) phi; the (P, Q, R) evolution stays exact.
struct Triple {
    LaurentSeries P, Q, R;
};

Triple triple_derivative(const Triple& a, const LaurentSeries& q) {
    Triple r;
    r.P = a.P.derivative();
    r.Q = a.Q.derivative() + a.P.shifted(-1) + series_mul(a.R, q);
    r.R = a.R.derivative() + a.Q;
    return r;
}

}  // namespace

GrowthReport growth_diagnostic(GrowthSeed seed, long k, long depth,
                               const std::vector<double>& ugrid) {
    if (ugrid.empty()) throw std::invalid_argument("growth diagnostic needs a u-grid");
    GrowthReport rep;
    rep.seed = seed;
    rep.k = k;
    rep.depth = depth;
    rep.grid = ugrid;
    rep.envelope_exponent = std::labs(1 - k) + 4;
    for (double u : ugrid)
        rep.envelope.push_back(std::pow(u, static_cast<double>(rep.envelope_exponent)));

    const Rational kval = rat(k);
    const RationalK alpha = RationalK(rat(1, 2));
    const RationalK beta = RationalK(kval) - RationalK(rat(1, 2));

    if (seed == GrowthSeed::zero) {
        rep.partial_sums.assign(ugrid.size(), 0.0);
        rep.kappa = 2.0;
        rep.verdict = "moderate";
        return rep;
    }

    if (seed == GrowthSeed::laurent_poly) {
        auto g0 = LaurentSeries::monomial('u', {}, 1 - k);
        auto tower = build_g_tower(g0, depth, alpha, beta, "laurent-poly");
        double b = 1.0;
        for (size_t n = 1; n < tower.rungs.size(); ++n)
            b = std::max(b, std::pow(max_abs_coeff(tower.rungs[n], kval),
                                     1.0 / static_cast<double>(n)));
        rep.coeff_bound = b;
        rep.kappa = 2.0 * b;
        for (double u : ugrid)
            rep.partial_sums.push_back(partial_sum(tower, u, u / rep.kappa, depth, kval));

        // exact positivity of the total coefficients of u^j for j > deg g_0,
        // over a doubling kappa ladder
        rep.positivity_checked = true;
        const long deg0 = 1 - k;
        Rational kappa0(2);
        while (to_double(kappa0) < rep.kappa) kappa0 *= 2;
        for (int t = 0; t < 24 && !rep.positivity_holds; ++t, kappa0 *= 2) {
            bool allpos = true;
            std::vector<double> window;
            for (long j = deg0 + 1; j <= deg0 + depth && allpos; ++j) {
                Rational c(0), kp(1);
                for (long n = 0; n <= depth; ++n) {
                    if (n) kp *= kappa0;
                    const auto& rung = tower.rungs[static_cast<size_t>(n)];
                    long abs_exp = j - n;  // coefficient of u^{j-n} in g_n
                    if (abs_exp >= rung.first() && abs_exp <= rung.last_stored())
                        c += rung.coeff(abs_exp).eval(kval) / kp;
                }
                window.push_back(to_double(c));
                if (c <= 0) allpos = false;
            }
            if (allpos) {
                rep.positivity_holds = true;
                rep.positivity_kappa = to_string(kappa0);
                rep.window_coefficients = window;
            }
        }
    } else {
        // q(u) = 1 + 2(k-1)/u + (k-1)(k-2)/u^2
        auto q = LaurentSeries::from_coeffs(
            'u', {}, -2,
            {RationalK(rat((k - 1) * (k - 2))), RationalK(rat(2 * (k - 1))), RationalK(1)}, true);
        Triple cur{LaurentSeries::monomial('u', {}, 1 - k), LaurentSeries::zero('u'),
                   LaurentSeries::zero('u')};
        std::vector<Triple> rungs{cur};
        for (long n = 0; n < depth; ++n) {
            Triple d1 = triple_derivative(cur, q);
            Triple d2 = triple_derivative(d1, q);
            RationalK lin = RationalK(rat(2)) * (RationalK(rat(2 * n)) + RationalK(kval));
            RationalK con = RationalK(rat(2)) * RationalK(1 - kval);
            RationalK scale = RationalK(rat(-1, 4 * (n + 1) * (n + 1)));
            Triple next;
            next.P = (d2.P.shifted(1) + d1.P.scaled(lin) + cur.P.scaled(con) - cur.P.shifted(1))
                         .shifted(-1)
                         .scaled(scale);
            next.Q = (d2.Q.shifted(1) + d1.Q.scaled(lin) + cur.Q.scaled(con) - cur.Q.shifted(1))
                         .shifted(-1)
                         .scaled(scale);
            next.R = (d2.R.shifted(1) + d1.R.scaled(lin) + cur.R.scaled(con) - cur.R.shifted(1))
                         .shifted(-1)
                         .scaled(scale);
            rungs.push_back(next);
            cur = next;
        }
        double b = 1.0;
        for (size_t n = 1; n < rungs.size(); ++n) {
            double m = std::max({max_abs_coeff(rungs[n].P, kval), max_abs_coeff(rungs[n].Q, kval),
                                 max_abs_coeff(rungs[n].R, kval)});
            if (m > 0) b = std::max(b, std::pow(m, 1.0 / static_cast<double>(n)));
        }
        rep.coeff_bound = b;
        rep.kappa = 2.0 * b;

        // numeric seed values on the grid
        double nu = 1.0 - static_cast<double>(k);
        double mu = std::fabs(static_cast<double>(k) - 1.5);
        NumericPrecision prec;
        prec.rel_tol = 1e-9;
        for (double u : ugrid) {
            double psi, phi, phip;
            if (seed == GrowthSeed::w_integral) {
                phi = -whittaker_w(nu, mu, 2.0 * u, prec);
                phip = -2.0 * whittaker_w_prime(nu, mu, 2.0 * u, prec);
                psi = integrate_to_inf(
                    [&](double t) { return whittaker_w(nu, mu, 2.0 * t, prec) / t; }, u, 1e-8);
            } else {
                phi = whittaker_m(nu, mu, 2.0 * u, prec);
                phip = 2.0 * whittaker_m_prime(nu, mu, 2.0 * u, prec);
                double uref = ugrid.front();
                psi = (u == uref)
                          ? 0.0
                          : integrate(
                                [&](double t) { return whittaker_m(nu, mu, 2.0 * t, prec) / t; },
                                uref, u, 1e-9);
            }
            double acc = 0.0, wp = 1.0;
            for (long n = 0; n <= depth; ++n) {
                const Triple& tr = rungs[static_cast<size_t>(n)];
                double gn = tr.P.eval_double(u, kval) * psi + tr.Q.eval_double(u, kval) * phi +
                            tr.R.eval_double(u, kval) * phip;
                acc += gn * wp;
                wp *= u / rep.kappa;
            }
            rep.partial_sums.push_back(acc);
        }
    }

    size_t half = ugrid.size() / 2;
    size_t exceed = 0, top = ugrid.size() - half;
    for (size_t i = half; i < ugrid.size(); ++i)
        if (std::fabs(rep.partial_sums[i]) > rep.envelope[i]) ++exceed;
    rep.envelope_exceeded = 2 * exceed > top;

    rep.verdict = (rep.envelope_exceeded || rep.positivity_holds) ? "rapid" : "moderate";
    return rep;
}

RatioDecayReport coeff_ratio_decay(long k, long terms) {
    if (k >= 0) throw std::invalid_argument("ratio decay is defined for integer k < 0");
    RatioDecayReport rep;
    rep.k = k;
    rep.terms = terms;

    auto run_series = [&](const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                          std::vector<Rational>& out) {
        Rational c(1);
        out.push_back(c);
        for (long n = 0; n < terms; ++n) {
            Rational f(1, 4);
            for (const auto& a : upper) f *= a + n;
            for (const auto& b : lower) f /= b + n;
            f /= Rational(n + 1);
            c *= f;
            out.push_back(c);
        }
    };
    std::vector<Rational> ca, cb;
    run_series({rat(1), rat(2 - k)}, {rat(5 - 2 * k, 2), rat(4 - k, 2), rat(5 - k, 2)}, ca);
    run_series({rat(1 - k, 2)}, {rat(1, 2), rat(2 - k, 2)}, cb);

    rep.ratios.reserve(static_cast<size_t>(terms) + 1);
    for (long n = 0; n <= terms; ++n) {
        if (cb[static_cast<size_t>(n)] == 0)
            throw std::runtime_error("denominator coefficient vanished in the ratio sequence");
        rep.ratios.push_back(ca[static_cast<size_t>(n)] / cb[static_cast<size_t>(n)]);
    }
    rep.final_ratio = rep.ratios.back();

    long from = -1;
    for (long n = terms; n >= 1; --n) {
        Rational cur = abs(rep.ratios[static_cast<size_t>(n)]);
        Rational prev = abs(rep.ratios[static_cast<size_t>(n - 1)]);
        if (prev > cur)
            from = n - 1;
        else
            break;
    }
    rep.monotone_from = from;

    auto tail_positive = [&](const std::vector<Rational>& c) {
        long start = std::max<long>(1, terms / 4);
        for (long n = start; n <= terms; ++n)
            if (c[static_cast<size_t>(n)] <= 0) return false;
        return true;
    };
    rep.tail_positive_a = tail_positive(ca);
    rep.tail_positive_b = tail_positive(cb);
    return rep;
}

}  // namespace maass
