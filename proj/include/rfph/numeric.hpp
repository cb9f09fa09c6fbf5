#pragma once

#include <string>
#include <vector>

namespace rfph {

// Uniform grid on [a, b]. The fraction i/(n-1) is formed before scaling so
// that doubling the resolution (n -> 2n-1) reproduces shared points bit-exactly.
std::vector<double> linspace(double a, double b, int n);

// Uniform grid on [-c, c] with exact antisymmetry: x[n-1-i] == -x[i] bitwise,
// and an exact 0.0 at the centre when n is odd. Nested under n -> 2n-1.
std::vector<double> symmetric_linspace(double c, int n);

// Shortest decimal form that round-trips the double exactly (17 significant digits).
std::string format17(double v);

double parse_double(const std::string& s);

// Second-order one-sided first derivative at the left end of a uniform grid;
// negate the mirrored call for the right end to keep stencils sign-symmetric.
inline double onesided_first(double f0, double f1, double f2, double h) {
    return (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h);
}

// Second-order one-sided second derivative at the left end of a uniform grid.
inline double onesided_second(double f0, double f1, double f2, double f3, double h) {
    return (2.0 * f0 - 5.0 * f1 + 4.0 * f2 - f3) / (h * h);
}

// Symmetric central stencils: (f_{i+1} + f_{i-1}) is grouped first so mirrored
// data produces bitwise-mirrored results.
inline double central_first(double fm, double fp, double h) {
    return (fp - fm) / (2.0 * h);
}

inline double central_second(double fm, double f0, double fp, double h) {
    return ((fp + fm) - 2.0 * f0) / (h * h);
}

} // namespace rfph
