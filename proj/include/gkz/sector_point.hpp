#pragma once

#include <cmath>
#include <complex>

#include "gkz/errors.hpp"

namespace gkz {

// Complex number stored as (modulus, continuous argument). The argument is
// NOT reduced mod 2*pi: it fixes the branch of every non-integer power that
// touches this point.
struct SectorPoint {
    double modulus = 0.0;
    double argument = 0.0;

    SectorPoint() = default;
    SectorPoint(double m, double arg) : modulus(m), argument(arg) {
        if (m < 0) throw ValidationError("NegativeModulus", "SectorPoint modulus must be >= 0");
    }

    bool is_zero() const { return modulus == 0.0; }

    std::complex<double> value() const {
        return std::polar(modulus, argument);
    }

    // z^c = exp(c (log modulus + i argument)) with this point's branch
    std::complex<double> pow(std::complex<double> c) const {
        if (is_zero()) {
            if (c == std::complex<double>(0.0, 0.0)) return {1.0, 0.0};
            throw ZeroBaseWithFractionalExponent("power of zero SectorPoint");
        }
        return std::exp(c * std::complex<double>(std::log(modulus), argument));
    }
};

} // namespace gkz
