#pragma once

#include <complex>

namespace gkz {

// Gamma(z) for complex z via the Lanczos approximation (g = 7, 9 terms),
// reflection formula for Re z < 0.5. Relative accuracy around 1e-13 away
// from the poles at z = 0, -1, -2, ...
std::complex<double> complex_gamma(std::complex<double> z);

// log Gamma(z), principal value of the Lanczos expression (continuous on the
// right half plane; used where Gamma itself would overflow).
std::complex<double> complex_log_gamma(std::complex<double> z);

// true if z is within tol of a pole of Gamma
bool near_gamma_pole(std::complex<double> z, double tol = 1e-12);

} // namespace gkz
