#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>

#include "gkz/errors.hpp"
#include "gkz/rational.hpp"

namespace gkz {

using Complex = std::complex<double>;

// Coefficient-field helpers. Series, operators and restriction maps are
// generic over the scalar: Complex for the default floating mode, Rational
// for the exact mode used by coefficient-exact tests (real rational beta).
template <class C>
struct ScalarOps;

template <>
struct ScalarOps<Complex> {
    static constexpr bool exact = false;
    static Complex from_long(long long v) { return Complex(static_cast<double>(v), 0.0); }
    static Complex from_ratio(long long p, long long q) {
        return Complex(static_cast<double>(p) / static_cast<double>(q), 0.0);
    }
    static bool is_zero(const Complex& c) { return c.real() == 0.0 && c.imag() == 0.0; }
    static double abs_value(const Complex& c) { return std::abs(c); }
    static std::optional<long long> as_integer(const Complex& c, double tol = 1e-9) {
        if (std::abs(c.imag()) > tol) return std::nullopt;
        double r = std::round(c.real());
        if (std::abs(c.real() - r) > tol) return std::nullopt;
        return static_cast<long long>(r);
    }
};

// Extended-precision variant: the float-mode annihilation residuals are
// measured in this type because plain double leaves ~1e-11 cancellation
// noise at (a,b) = (3,5), N = 15 under the largest-input-coefficient scaling.
using LongComplex = std::complex<long double>;

template <>
struct ScalarOps<LongComplex> {
    static constexpr bool exact = false;
    static LongComplex from_long(long long v) { return LongComplex(static_cast<long double>(v), 0.0L); }
    static LongComplex from_ratio(long long p, long long q) {
        return LongComplex(static_cast<long double>(p) / static_cast<long double>(q), 0.0L);
    }
    static bool is_zero(const LongComplex& c) { return c.real() == 0.0L && c.imag() == 0.0L; }
    static double abs_value(const LongComplex& c) { return static_cast<double>(std::abs(c)); }
    static std::optional<long long> as_integer(const LongComplex& c, double tol = 1e-9) {
        if (std::abs(c.imag()) > static_cast<long double>(tol)) return std::nullopt;
        long double r = std::round(c.real());
        if (std::abs(c.real() - r) > static_cast<long double>(tol)) return std::nullopt;
        return static_cast<long long>(r);
    }
};

template <>
struct ScalarOps<Rational> {
    static constexpr bool exact = true;
    static Rational from_long(long long v) { return Rational(v); }
    static Rational from_ratio(long long p, long long q) { return Rational(p, q); }
    static bool is_zero(const Rational& c) { return c.is_zero(); }
    static double abs_value(const Rational& c) { return std::abs(c.to_double()); }
    static std::optional<long long> as_integer(const Rational& c, double = 0.0) {
        if (!c.is_integer()) return std::nullopt;
        return static_cast<long long>(c.num().to_double());
    }
};

// 64-bit lattice arithmetic with overflow checks.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw IntegerOverflow();
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw IntegerOverflow();
    return r;
}

inline long long gcd_ll(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// ceil(num/den) for den > 0, exact for negative numerators
inline long long ceil_div(long long num, long long den) {
    long long q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

inline long long floor_mod(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

// modular inverse for gcd(v, m) = 1
inline long long mod_inverse(long long v, long long m) {
    long long t = 0, newt = 1, r = m, newr = floor_mod(v, m);
    while (newr) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw ValidationError("NoModularInverse", "arguments not coprime");
    return floor_mod(t, m);
}

} // namespace gkz
