#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "maass/quadrature.hpp"
#include "maass/special.hpp"

using namespace maass;

TEST_CASE("incomplete gamma closed forms") {
    // Gamma(1, y) = e^-y
    for (double y : {0.3, 1.0, 2.5, 10.0})
        CHECK(incomplete_gamma(1.0, y) == doctest::Approx(std::exp(-y)).epsilon(1e-12));
    // Gamma(2, 1) = 2/e (integration by parts: Gamma(2,y) = (y+1)e^-y)
    CHECK(incomplete_gamma(2.0, 1.0) == doctest::Approx(2.0 / std::exp(1.0)).epsilon(1e-12));
    for (double y : {0.5, 3.0})
        CHECK(incomplete_gamma(2.0, y) == doctest::Approx((y + 1) * std::exp(-y)).epsilon(1e-12));
    CHECK_THROWS_AS(incomplete_gamma(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(incomplete_gamma(1.0, -2.0), std::domain_error);
}

TEST_CASE("incomplete gamma against quadrature for negative and fractional a") {
    for (double a : {-3.0, -2.0, -0.5, 0.0, 1.5, 2.5, 4.5}) {
        for (double y : {0.4, 0.9, 1.5, 2.0, 6.0}) {
            double oracle =
                integrate_to_inf([a](double w) { return std::exp(-w + (a - 1) * std::log(w)); }, y,
                                 1e-14);
            CHECK(incomplete_gamma(a, y) == doctest::Approx(oracle).epsilon(2e-10));
        }
    }
}

TEST_CASE("incomplete gamma large-argument asymptotic ratio") {
    // Gamma(a, y) ~ y^(a-1) e^-y; by y = 40 the catalog parameter sets
    // a in {1, 3/2, 5/2} sit inside the 5% band.
    for (double a : {1.0, 1.5, 2.5}) {
        double y = 40.0;
        double ratio = incomplete_gamma(a, y) / std::exp(-y + (a - 1) * std::log(y));
        CHECK(std::fabs(ratio - 1.0) < 5e-2);
    }
    // a = -2: the first-order correction (a-1)/y puts the ratio at ~0.944
    // at y = 50, outside the 5% band; the band is reached by y = 150.
    double r50 = incomplete_gamma(-2.0, 50.0) / std::exp(-50.0 + (-3.0) * std::log(50.0));
    CHECK(r50 == doctest::Approx(0.9434).epsilon(2e-3));
    double r150 = incomplete_gamma(-2.0, 150.0) / std::exp(-150.0 + (-3.0) * std::log(150.0));
    CHECK(std::fabs(r150 - 1.0) < 5e-2);
}

TEST_CASE("whittaker M closed form") {
    // M_{0,1/2}(y) = 2 sinh(y/2)
    CHECK(whittaker_m(0.0, 0.5, 2.0) == doctest::Approx(2.0 * std::sinh(1.0)).epsilon(1e-12));
    // independent oracle: defining series via 1F1 summed directly
    double y = 3.7, nu = -1.0, mu = 1.5;
    double a = mu - nu + 0.5, b = 1 + 2 * mu;
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < 200; ++n) {
        term *= (a + n) / ((b + n) * (n + 1.0)) * y;
        sum += term;
    }
    double oracle = std::exp(-0.5 * y) * std::pow(y, mu + 0.5) * sum;
    CHECK(whittaker_m(nu, mu, y) == doctest::Approx(oracle).epsilon(1e-12));
    CHECK_THROWS_AS(whittaker_m(1.0, -0.5, 2.0), std::domain_error);  // 1+2mu = 0
}

TEST_CASE("whittaker W against direct quadrature of the integral representation") {
    for (double y : {2.0, 8.0, 30.0}) {
        double nu = -0.5, mu = 0.0;
        double a = mu - nu + 0.5, c = mu + nu - 0.5;
        double integral = integrate_to_inf(
            [&](double s) { return std::exp(-s + (a - 1) * std::log(s) + c * std::log1p(s / y)); },
            1e-12, 1e-13);
        double oracle = std::exp(-0.5 * y) * std::pow(y, mu + 0.5) * std::pow(y, -a) * integral /
                        std::tgamma(a);
        CHECK(whittaker_w(nu, mu, y) == doctest::Approx(oracle).epsilon(1e-9));
    }
}

TEST_CASE("whittaker W elementary family W_{mu+1/2, mu}(y) = e^{-y/2} y^{mu+1/2}") {
    for (double y : {1.0, 5.0, 17.0}) {
        for (double mu : {0.25, 1.0, 3.0}) {
            double expect = std::exp(-0.5 * y) * std::pow(y, mu + 0.5);
            CHECK(whittaker_w(mu + 0.5, mu, y) == doctest::Approx(expect).epsilon(1e-10));
        }
    }
}

TEST_CASE("whittaker asymptotics") {
    // W_{nu,mu}(y) ~ y^nu e^{-y/2}: within 5% by y = 40 for (nu, mu) = (-1, 1/2)
    double nu = -1.0, mu = 0.5, y = 40.0;
    double ratio = whittaker_w(nu, mu, y) / (std::pow(y, nu) * std::exp(-0.5 * y));
    CHECK(std::fabs(ratio - 1.0) < 5e-2);
    // M_{nu,mu}(y) ~ Gamma(1+2mu)/Gamma(mu-nu+1/2) y^{-nu} e^{y/2}
    double m_ratio = whittaker_m(nu, mu, y) /
                     (std::tgamma(1 + 2 * mu) / std::tgamma(mu - nu + 0.5) * std::pow(y, -nu) *
                      std::exp(0.5 * y));
    CHECK(std::fabs(m_ratio - 1.0) < 5e-2);
}

TEST_CASE("whittaker ODE residual under numeric second differences") {
    CHECK(whittaker_ode_residual(WhittakerKind::M, 0.0, 0.5, 3.0) < 1e-7);
    CHECK(whittaker_ode_residual(WhittakerKind::W, -1.0, 0.5, 3.0) < 1e-6);
    CHECK(whittaker_ode_residual(WhittakerKind::W, -4.0, 3.5, 12.0) < 1e-6);
    CHECK(whittaker_ode_residual(WhittakerKind::M, 6.0, 6.5, 5.0) < 1e-6);
}

TEST_CASE("whittaker degenerate parameters rejected") {
    CHECK_THROWS_AS(whittaker_w(2.0, 0.5, 3.0), std::domain_error);  // a = -1 <= 0
}

TEST_CASE("H function identity and quadrature oracle") {
    // H(-1), k = -1  ->  e * Gamma(5/2, 2)
    CHECK(h_function(-1.0, -1) ==
          doctest::Approx(std::exp(1.0) * incomplete_gamma(2.5, 2.0)).epsilon(1e-12));
    // H(-1/2), k = 0  ->  e^{1/2} Gamma(3/2, 1)
    CHECK(h_function(-0.5, 0) ==
          doctest::Approx(std::exp(0.5) * incomplete_gamma(1.5, 1.0)).epsilon(1e-12));
    // quadrature of the defining integral at (k, w) = (-3, -2)
    long k = -3;
    double w = -2.0;
    double oracle = std::exp(-w) * integrate_to_inf([&](double t) {
                        return std::exp(-t + (0.5 - k) * std::log(t));
                    }, -2.0 * w, 1e-14);
    CHECK(h_function(w, k) == doctest::Approx(oracle).epsilon(1e-10));
    CHECK_THROWS_AS(h_function(0.0, 0), std::domain_error);
    CHECK_THROWS_AS(h_function(1.0, 0), std::domain_error);
}

TEST_CASE("periodic trapezoid extracts Fourier modes") {
    auto f = [](double x) { return 1.5 + std::cos(2 * M_PI * 3 * x); };
    CHECK(periodic_trapezoid(f, 16) == doctest::Approx(1.5).epsilon(1e-13));
}
