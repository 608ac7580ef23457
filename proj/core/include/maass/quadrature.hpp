#pragma once

#include <functional>

namespace maass {

// Adaptive Simpson on [a, b] to the given absolute/relative tolerance.
double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-12,
                 int max_depth = 52);

// Integral over [a, infinity) of an eventually exponentially decaying
// integrand: windows of doubling length are added until a window contributes
// less than tol * |accumulated|.
double integrate_to_inf(const std::function<double(double)>& f, double a, double tol = 1e-12,
                        double first_window = 8.0);

// N-point periodic trapezoid rule of f over one period [0, 1) (spectrally
// accurate for smooth periodic integrands).
double periodic_trapezoid(const std::function<double(double)>& f, int n);

}  // namespace maass
