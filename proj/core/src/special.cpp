#include "maass/special.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "maass/quadrature.hpp"

namespace maass {

namespace {

// Lower regularized series: gamma(a, y) = y^a e^-y sum y^n / (a (a+1)...(a+n)).
double lower_gamma_series(double a, double y, const NumericPrecision& prec) {
    double term = 1.0 / a;
    double sum = term;
    for (long n = 1; n < prec.series_cutoff; ++n) {
        term *= y / (a + n);
        sum += term;
        if (std::fabs(term) < prec.rel_tol * 1e-4 * std::fabs(sum))
            return sum * std::exp(-y + a * std::log(y));
    }
    throw std::runtime_error("lower incomplete gamma series did not converge");
}

// Legendre continued fraction for Gamma(a, y), stable for y >= ~1 and y > a.
double upper_gamma_cf(double a, double y, const NumericPrecision& prec) {
    const double tiny = 1e-300;
    double b = y + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (long i = 1; i < prec.series_cutoff; ++i) {
        double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < prec.rel_tol * 1e-5)
            return h * std::exp(-y + a * std::log(y));
    }
    throw std::runtime_error("incomplete gamma continued fraction did not converge");
}

}  // namespace

double incomplete_gamma(double a, double y, const NumericPrecision& prec) {
    if (!(y > 0.0)) throw std::domain_error("incomplete gamma requires y > 0");
    if (a > 0.0) {
        if (y < a + 1.0) return std::tgamma(a) - lower_gamma_series(a, y, prec);
        return upper_gamma_cf(a, y, prec);
    }
    if (y >= 1.0) return upper_gamma_cf(a, y, prec);
    // a <= 0 with small y: start from a parameter in (0, 1] (or from the
    // exponential integral at a = 0) and descend via
    // Gamma(a, y) = (Gamma(a+1, y) - y^a e^-y) / a.
    double g, ah;
    if (a == std::floor(a)) {
        // E_1(y) = -gamma - ln y + sum (-1)^(n+1) y^n / (n n!)
        double s = 0.0, t = 1.0;
        for (long n = 1; n < prec.series_cutoff; ++n) {
            t *= -y / n;
            double add = -t / n;
            s += add;
            if (std::fabs(add) < 1e-17 * std::max(1.0, std::fabs(s))) break;
        }
        constexpr double euler_gamma = 0.5772156649015328606;
        g = -euler_gamma - std::log(y) + s;  // Gamma(0, y)
        ah = 0.0;
    } else {
        int climb = static_cast<int>(std::ceil(-a));
        ah = a + climb;  // in (0, 1)
        g = std::tgamma(ah) - lower_gamma_series(ah, y, prec);
    }
    for (double aj = ah - 1.0; aj >= a - 0.5; aj -= 1.0) {
        g = (g - std::exp(-y + aj * std::log(y))) / aj;
    }
    return g;
}

namespace {

void check_whittaker_params(double nu, double mu, double& mu_out, double& a_out, double& b_out) {
    mu_out = std::fabs(mu);  // W and the checks here are even in mu
    a_out = mu_out - nu + 0.5;
    b_out = 1.0 + 2.0 * mu_out;
}

}  // namespace

double whittaker_m(double nu, double mu, double y, const NumericPrecision& prec) {
    if (!(y > 0.0)) throw std::domain_error("whittaker_m requires y > 0");
    double b = 1.0 + 2.0 * mu;
    if (b <= 0.0 && b == std::floor(b))
        throw std::domain_error("whittaker_m degenerate: 1 + 2 mu is a nonpositive integer");
    double a = mu - nu + 0.5;
    // e^{-y/2} y^{mu+1/2} 1F1(a; b; y), summed directly
    double term = 1.0, sum = 1.0;
    for (long n = 0; n < prec.series_cutoff; ++n) {
        term *= (a + n) / ((b + n) * (n + 1.0)) * y;
        sum += term;
        if (std::fabs(term) < prec.rel_tol * 1e-4 * std::fabs(sum) && n > 2)
            return std::exp(-0.5 * y + (mu + 0.5) * std::log(y)) * sum;
    }
    throw std::runtime_error("whittaker_m series did not converge");
}

namespace {

// int_0^inf e^{-s} s^{a-1} (1 + s/y)^c ds for a > 0, y > 0: truncated series
// near zero plus adaptive quadrature of the smooth remainder.
double laplace_power_integral(double a, double c, double y, const NumericPrecision& prec) {
    double eps = std::min(1.0, 0.5 * y);
    const int J = 40;
    std::vector<double> binom(J + 1), expo(J + 1), g(J + 1, 0.0);
    binom[0] = 1.0;
    for (int j = 1; j <= J; ++j) binom[j] = binom[j - 1] * (c - (j - 1)) / (j * y);
    expo[0] = 1.0;
    for (int j = 1; j <= J; ++j) expo[j] = expo[j - 1] * (-1.0) / j;
    for (int j = 0; j <= J; ++j)
        for (int i = 0; i <= j; ++i) g[j] += expo[i] * binom[j - i];
    double head = 0.0;
    for (int j = 0; j <= J; ++j) head += g[j] * std::pow(eps, a + j) / (a + j);
    auto integrand = [&](double s) {
        return std::exp((a - 1.0) * std::log(s) - s + c * std::log1p(s / y));
    };
    double tail = integrate_to_inf(integrand, eps, prec.rel_tol * 1e-2);
    return head + tail;
}

}  // namespace

double whittaker_w(double nu, double mu, double y, const NumericPrecision& prec) {
    if (!(y > 0.0)) throw std::domain_error("whittaker_w requires y > 0");
    double am, a, b;
    check_whittaker_params(nu, mu, am, a, b);
    if (a <= 0.0)
        throw std::domain_error(
            "whittaker_w parameter obstruction: |mu| - nu + 1/2 <= 0 is outside the integral "
            "representation");
    double c = b - a - 1.0;  // = mu + nu - 1/2
    // W = e^{-y/2} y^{mu+1/2} / Gamma(a) * int_0^inf e^{-yt} t^{a-1} (1+t)^c dt
    // with t = s / y:  y^{-a} int_0^inf e^{-s} s^{a-1} (1 + s/y)^c ds.
    double integral = laplace_power_integral(a, c, y, prec);
    double log_pref = -0.5 * y + (am + 0.5) * std::log(y) - a * std::log(y) - std::lgamma(a);
    return std::exp(log_pref) * integral;
}

double whittaker_w_prime(double nu, double mu, double y, const NumericPrecision& prec) {
    double am, a, b;
    check_whittaker_params(nu, mu, am, a, b);
    if (a <= 0.0)
        throw std::domain_error("whittaker_w_prime: parameter outside the integral representation");
    double c = b - a - 1.0;
    double w = whittaker_w(nu, mu, y, prec);
    double outer = (-0.5 + (am + 0.5 - a) / y) * w;
    if (c == 0.0) return outer;
    double shifted = laplace_power_integral(a + 1.0, c - 1.0, y, prec);
    double log_pref = -0.5 * y + (am + 0.5 - a) * std::log(y) - std::lgamma(a);
    return outer - std::exp(log_pref) * c / (y * y) * shifted;
}

double whittaker_m_prime(double nu, double mu, double y, const NumericPrecision& prec) {
    if (!(y > 0.0)) throw std::domain_error("whittaker_m_prime requires y > 0");
    double b = 1.0 + 2.0 * mu;
    if (b <= 0.0 && b == std::floor(b))
        throw std::domain_error("whittaker_m degenerate: 1 + 2 mu is a nonpositive integer");
    double a = mu - nu + 0.5;
    double term = 1.0, sum = 1.0, dsum = 0.0;
    for (long n = 0; n < prec.series_cutoff; ++n) {
        double next = term * (a + n) / ((b + n) * (n + 1.0)) * y;
        dsum += term * (a + n) / ((b + n) * (n + 1.0)) * (n + 1.0);
        sum += next;
        if (std::fabs(next) < prec.rel_tol * 1e-4 * std::fabs(sum) && n > 2) {
            double pref = std::exp(-0.5 * y + (mu + 0.5) * std::log(y));
            return pref * (dsum + ((mu + 0.5) / y - 0.5) * sum);
        }
        term = next;
    }
    throw std::runtime_error("whittaker_m_prime series did not converge");
}

double whittaker(WhittakerKind kind, double nu, double mu, double y,
                 const NumericPrecision& prec) {
    return kind == WhittakerKind::M ? whittaker_m(nu, mu, y, prec) : whittaker_w(nu, mu, y, prec);
}

double h_function(double w, long k, const NumericPrecision& prec) {
    if (w == 0.0) throw std::domain_error("H(w) is undefined at w = 0");
    if (w > 0.0)
        throw std::domain_error(
            "H(w) for w > 0 needs the continuation in k beyond the integral representation; only "
            "w < 0 occurs in the coefficient checks");
    return std::exp(-w) * incomplete_gamma(1.5 - static_cast<double>(k), -2.0 * w, prec);
}

double whittaker_ode_residual(WhittakerKind kind, double nu, double mu, double y, double h) {
    auto f = [&](double t) { return whittaker(kind, nu, mu, t); };
    double d2 = (-f(y + 2 * h) + 16 * f(y + h) - 30 * f(y) + 16 * f(y - h) - f(y - 2 * h)) /
                (12.0 * h * h);
    double val = f(y);
    double coeff = -0.25 + nu / y + (0.25 - mu * mu) / (y * y);
    double resid = d2 + coeff * val;
    double scale = std::max({std::fabs(d2), std::fabs(coeff * val), 1e-300});
    return std::fabs(resid) / scale;
}

}  // namespace maass
