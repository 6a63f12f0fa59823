#include "gkz/complex_gamma.hpp"

#include <cmath>

namespace gkz {

namespace {

// Lanczos coefficients, g = 7, n = 9 (Godfrey's table).
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogSqrtTwoPi = 0.91893853320467274178;

std::complex<double> lanczos_series(std::complex<double> z) {
    std::complex<double> s(kLanczos[0], 0.0);
    for (int i = 1; i < 9; ++i) s += kLanczos[i] / (z + static_cast<double>(i - 1));
    return s;
}

} // namespace

std::complex<double> complex_gamma(std::complex<double> z) {
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return kPi / (std::sin(kPi * z) * complex_gamma(1.0 - z));
    }
    z -= 1.0;
    std::complex<double> base = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(base, z + 0.5) * std::exp(-base) * lanczos_series(z + 1.0);
}

std::complex<double> complex_log_gamma(std::complex<double> z) {
    if (z.real() < 0.5) {
        return std::log(kPi) - std::log(std::sin(kPi * z)) - complex_log_gamma(1.0 - z);
    }
    z -= 1.0;
    std::complex<double> base = z + 7.5;
    return kLogSqrtTwoPi + (z + 0.5) * std::log(base) - base + std::log(lanczos_series(z + 1.0));
}

bool near_gamma_pole(std::complex<double> z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

} // namespace gkz
