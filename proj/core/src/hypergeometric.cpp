#include "maass/hypergeometric.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace maass {

RationalK pochhammer(const RationalK& a, unsigned n) {
    RationalK r(1);
    for (unsigned i = 0; i < n; ++i) r *= a + RationalK(Rational(static_cast<long>(i)));
    return r;
}

std::string HypergeometricSpec::str() const {
    std::ostringstream os;
    os << upper.size() << "F" << lower.size() << "(";
    for (size_t i = 0; i < upper.size(); ++i) os << (i ? "," : "") << upper[i].str();
    os << "; ";
    for (size_t i = 0; i < lower.size(); ++i) os << (i ? "," : "") << lower[i].str();
    os << "; (" << to_string(scale);
    if (pi_power != 0) os << "*pi^" << pi_power;
    os << ")" << var << ")";
    if (!prefactor.is_zero()) os << " with prefactor " << var << "^(" << prefactor.str() << ")";
    return os.str();
}

void check_lower_parameters(const HypergeometricSpec& spec) {
    for (const auto& b : spec.lower) {
        if (!b.is_constant()) continue;  // nonintegral as a function of k
        if (b.den().degree() != 0) continue;
        Rational c = b.num().is_zero() ? Rational(0) : b.num().coeff(0) / b.den().coeff(0);
        if (is_integer(c) && c <= 0)
            throw std::domain_error("lower parameter " + to_string(c) +
                                    " is a nonpositive integer");
    }
}

LaurentSeries pfq_formal(const HypergeometricSpec& spec, long order) {
    if (spec.pi_power != 0)
        throw std::domain_error("formal expansion requires a pi-free argument scale");
    if (order < 0) throw std::invalid_argument("negative expansion order");
    check_lower_parameters(spec);
    std::vector<RationalK> coeffs;
    coeffs.reserve(static_cast<size_t>(order) + 1);
    RationalK c(1);
    coeffs.push_back(c);
    for (long n = 0; n < order; ++n) {
        RationalK factor(Rational(spec.scale));
        for (const auto& a : spec.upper) factor *= a + RationalK(Rational(n));
        for (const auto& b : spec.lower) factor /= b + RationalK(Rational(n));
        factor /= RationalK(Rational(n + 1));
        c *= factor;
        coeffs.push_back(c);
    }
    return LaurentSeries::from_coeffs(spec.var, spec.prefactor, 0, std::move(coeffs), false, order);
}

LaurentSeries pfq_formal_at(const HypergeometricSpec& spec, long order, const Rational& kval) {
    return pfq_formal(spec, order).specialized(kval);
}

HypergeometricSpec shifted_parameters(const HypergeometricSpec& spec) {
    HypergeometricSpec s = spec;
    for (auto& a : s.upper) a += RationalK(1);
    for (auto& b : s.lower) b += RationalK(1);
    return s;
}

double pfq_numeric(const std::vector<double>& upper, const std::vector<double>& lower, double z,
                   double rel_tol) {
    for (double b : lower) {
        if (b <= 0.0 && b == std::floor(b))
            throw std::domain_error("numeric pFq lower parameter is a nonpositive integer");
    }
    bool terminates = false;
    double nmax_term = 0;
    for (double a : upper) {
        if (a <= 0.0 && a == std::floor(a)) {
            terminates = true;
            nmax_term = std::max(nmax_term, -a);
        }
    }
    if (upper.size() > lower.size() + 1 && !terminates)
        throw std::domain_error("nonconvergent pFq parameter regime (p > q+1)");
    if (upper.size() == lower.size() + 1 && !terminates && std::fabs(z) >= 1.0)
        throw std::domain_error("pFq with p = q+1 requires |z| < 1");

    double term = 1.0, sum = 1.0;
    const long max_terms = terminates ? static_cast<long>(nmax_term) + 1 : 100000;
    for (long n = 0; n < max_terms; ++n) {
        double f = z / (n + 1.0);
        for (double a : upper) f *= a + n;
        for (double b : lower) f /= b + n;
        term *= f;
        sum += term;
        if (!terminates && std::fabs(term) < rel_tol * std::fabs(sum) && n > 2) return sum;
    }
    if (terminates) return sum;
    throw std::runtime_error("pFq series did not converge within the term budget");
}

}  // namespace maass
