#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gkz {

// Arbitrary-precision signed integer, sign-magnitude with base 2^32 limbs.
// Sized for exact Gamma-series coefficients (a few hundred decimal digits),
// not for cryptographic workloads: schoolbook multiplication throughout.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v); // NOLINT: implicit by design

    static BigInt from_uint64(std::uint64_t v);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_one() const;

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncated division: quotient rounds toward zero, remainder has the
    // dividend's sign. Divisor must be nonzero.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);

    static BigInt gcd(BigInt a, BigInt b);

    double to_double() const;
    // Natural log of |x|; -inf for zero.
    double log_abs() const;
    std::string to_string() const;

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_; // little-endian, no leading zero limbs

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
    void trim();
};

// Exact rational number, always normalized: gcd(num, den) = 1, den > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {} // NOLINT: implicit by design
    Rational(long long num, long long den);
    Rational(BigInt num, BigInt den);

    static Rational factorial(unsigned n);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    double to_double() const;
    std::string to_string() const;

private:
    BigInt num_, den_;
    void normalize();
};

} // namespace gkz
