#include "maass/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace maass {

namespace {

double simpson(double fa, double fm, double fb, double h) { return h / 6.0 * (fa + 4.0 * fm + fb); }

double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(fa, flm, fm, m - a);
    double right = simpson(fm, frm, fb, b - m);
    double err = left + right - whole;
    if (depth <= 0 || std::fabs(err) < 15.0 * tol) return left + right + err / 15.0;
    return adapt(f, a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 int max_depth) {
    if (a == b) return 0.0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = simpson(fa, fm, fb, b - a);
    double scale = std::max(std::fabs(whole), 1e-300);
    return adapt(f, a, b, fa, fm, fb, whole, std::max(tol * scale, 1e-305), max_depth);
}

double integrate_to_inf(const std::function<double(double)>& f, double a, double tol,
                        double first_window) {
    double acc = 0.0;
    double lo = a, len = first_window;
    for (int i = 0; i < 60; ++i) {
        double piece = integrate(f, lo, lo + len, tol * 0.1);
        acc += piece;
        if (std::fabs(piece) < tol * std::max(std::fabs(acc), 1e-300) && i > 0) return acc;
        lo += len;
        len *= 2.0;
    }
    throw std::runtime_error("tail integral did not settle within the window budget");
}

double periodic_trapezoid(const std::function<double(double)>& f, int n) {
    if (n <= 0) throw std::invalid_argument("trapezoid rule needs a positive node count");
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += f(static_cast<double>(j) / n);
    return acc / n;
}

}  // namespace maass
