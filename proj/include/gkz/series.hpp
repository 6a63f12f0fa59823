#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "gkz/errors.hpp"
#include "gkz/lattice.hpp"
#include "gkz/scalar.hpp"
#include "gkz/sector_point.hpp"

namespace gkz {

enum class SeriesVariant { psi2, phiGeneral, phiRestricted };

struct SeriesLabel {
    std::vector<long long> A;
    Complex beta{0.0, 0.0};
    int j = 0;
    SeriesVariant variant = SeriesVariant::psi2;
};

// Truncated fractional-exponent series: each monomial is
//   prod_i x_i^(base_exponents[i] + offsets[i])
// with integer offsets. Truncation lives in the summation-index grading
// (weight per offset slot plus a constant shift), not in monomial degree.
template <class C>
struct SeriesT {
    int nvars = 0;
    std::vector<C> base_exponents;
    std::map<std::vector<int>, C> terms;
    long long truncation = -1;
    std::vector<int> grading_weights;
    long long grading_shift = 0;
    bool polynomial = false;

    bool is_zero() const { return terms.empty(); }

    long long grading(const std::vector<int>& offsets) const {
        long long g = grading_shift;
        for (int i = 0; i < nvars; ++i)
            g += static_cast<long long>(grading_weights[static_cast<size_t>(i)]) *
                 offsets[static_cast<size_t>(i)];
        return g;
    }

    void insert_term(const std::vector<int>& offsets, const C& coeff) {
        if (ScalarOps<C>::is_zero(coeff)) return;
        terms[offsets] = coeff;
    }

    const C* coefficient(const std::vector<int>& offsets) const {
        auto it = terms.find(offsets);
        return it == terms.end() ? nullptr : &it->second;
    }

    double max_abs_coefficient() const {
        double m = 0;
        for (const auto& [off, c] : terms) m = std::max(m, ScalarOps<C>::abs_value(c));
        return m;
    }
};

using FractionalSeries = SeriesT<Complex>;
using RationalSeries = SeriesT<Rational>;

namespace detail {

template <class C>
C factorial_c(long long n) {
    if constexpr (ScalarOps<C>::exact) {
        return Rational::factorial(static_cast<unsigned>(n));
    } else if constexpr (std::is_same_v<C, LongComplex>) {
        return LongComplex(std::tgamma(static_cast<long double>(n) + 1.0L), 0.0L);
    } else {
        return Complex(std::tgamma(static_cast<double>(n) + 1.0), 0.0);
    }
}

// Bezout grading weights for the psi index: w such that a*w2 - b*w1 = 1,
// giving grading(-bm, am+j) + shift = m.
inline std::pair<std::vector<int>, long long> psi_grading(long long a, long long b, long long j) {
    long long w2 = mod_inverse(a % b, b);
    long long w1 = (a * w2 - 1) / b;
    return {{static_cast<int>(w1), static_cast<int>(w2)}, -j * w2};
}

} // namespace detail

// psi^(j) for A = (a, b): base exponents ((beta - j b)/a, 0), m-th term has
// offsets (-b m, a m + j) and coefficient [ (beta-jb)/a ]_{bm} / [am+j]_{am}.
template <class C>
SeriesT<C> psi_series_t(long long a, long long b, const C& beta, long long j, long long N) {
    if (!(1 <= a && a < b) || gcd_ll(a, b) != 1)
        throw BadMatrix("psi_series requires 1 <= a < b coprime");
    if (j < 0 || j >= a) throw IndexOutOfRange("psi_series: need 0 <= j < a");
    if (N < 0) throw ValidationError("BadTruncation", "psi_series: N >= 0");

    SeriesT<C> s;
    s.nvars = 2;
    C z = (beta - ScalarOps<C>::from_long(j * b)) / ScalarOps<C>::from_long(a);
    s.base_exponents = {z, ScalarOps<C>::from_long(0)};
    auto [w, shift] = detail::psi_grading(a, b, j);
    s.grading_weights = w;
    s.grading_shift = shift;
    s.truncation = N;
    auto zint = ScalarOps<C>::as_integer(z);
    s.polynomial = zint.has_value() && *zint >= 0;

    for (long long m = 0; m <= N; ++m) {
        C num = pochhammer_t<C>(z, b * m);
        if (ScalarOps<C>::is_zero(num)) continue;
        C den = pochhammer_t<C>(ScalarOps<C>::from_long(a * m + j), a * m);
        std::vector<int> off = {static_cast<int>(-b * m), static_cast<int>(a * m + j)};
        s.insert_term(off, num / den);
    }
    return s;
}

// phi^(j) for A' = (1, a_2, ..., a_n) in the A' variables (slot 0 carries the
// leading 1). Index tuple m = (m_1, ..., m_{n-1}) with the slot-0 exponent
//   off_0 = j + a_{n-1} m_{n-2} - sum_{i != n-2} a_i m_i >= 0,
// coefficient [h]_{m_{n-2}} j! / (off_0! prod_{i != n-2} m_i!) with
// h = (beta - j)/a_{n-1}. When h is a natural number the summation caps at
// m_{n-2} <= h and the series is a polynomial.
template <class C>
SeriesT<C> phi_series_t(const OneRowMatrix& Aprime, const C& beta, long long j, long long N,
                        bool restricted = false) {
    if (Aprime[0] != 1) throw NotLeadingOne("phi_series requires a_1 = 1");
    const int n = Aprime.size();
    if (n < 3) throw BadMatrix("phi_series requires n >= 3");
    const long long an1 = Aprime[n - 2];
    if (j < 0 || j >= an1) throw IndexOutOfRange("phi_series: need 0 <= j < a_{n-1}");
    if (N < 0) throw ValidationError("BadTruncation", "phi_series: N >= 0");

    C h = (beta - ScalarOps<C>::from_long(j)) / ScalarOps<C>::from_long(an1);
    auto hint = ScalarOps<C>::as_integer(h);
    std::optional<long long> cap;
    if (hint && *hint >= 0) cap = *hint;

    SeriesT<C> s;
    s.nvars = restricted ? n - 1 : n;
    s.base_exponents.assign(static_cast<size_t>(s.nvars), ScalarOps<C>::from_long(0));
    s.grading_weights.assign(static_cast<size_t>(s.nvars), 1);
    const int hslot = restricted ? n - 3 : n - 2; // slot of x_{n-1} in the output
    s.base_exponents[static_cast<size_t>(hslot)] = h;
    s.grading_weights[static_cast<size_t>(hslot)] = -1;
    if (!restricted) s.grading_weights[0] = 0;
    s.grading_shift = 0;
    s.truncation = N;
    s.polynomial = cap.has_value();

    // incremental caches: [h]_t and t! are shared across the whole index set
    std::vector<C> poch_h(static_cast<size_t>(N) + 1);
    poch_h[0] = ScalarOps<C>::from_long(1);
    for (long long t = 1; t <= N; ++t)
        poch_h[static_cast<size_t>(t)] =
            poch_h[static_cast<size_t>(t - 1)] * (h - ScalarOps<C>::from_long(t - 1));
    const long long max_fact = std::max<long long>(j + an1 * N, N) + 1;
    std::vector<C> fact(static_cast<size_t>(max_fact) + 1);
    fact[0] = ScalarOps<C>::from_long(1);
    for (long long t = 1; t <= max_fact; ++t)
        fact[static_cast<size_t>(t)] =
            fact[static_cast<size_t>(t - 1)] * ScalarOps<C>::from_long(t);

    const C jfact = fact[static_cast<size_t>(j)];
    std::vector<long long> m(static_cast<size_t>(n - 1), 0); // indices for vars 1..n-1

    std::function<void(int, long long)> rec = [&](int level, long long used) {
        if (level == n - 1) {
            long long off0 = j;
            for (int i = 1; i <= n - 1; ++i) {
                long long mi = m[static_cast<size_t>(i - 1)];
                if (i == n - 2)
                    off0 += an1 * mi;
                else
                    off0 -= Aprime[i] * mi;
            }
            if (off0 < 0) return;
            if (restricted && off0 != 0) return;
            long long mh = m[static_cast<size_t>(n - 3)]; // m_{n-2}, index of x_{n-1}
            const C& num = poch_h[static_cast<size_t>(mh)];
            if (ScalarOps<C>::is_zero(num)) return;
            C den = fact[static_cast<size_t>(off0)];
            for (int i = 1; i <= n - 1; ++i) {
                if (i == n - 2) continue;
                den = den * fact[static_cast<size_t>(m[static_cast<size_t>(i - 1)])];
            }
            std::vector<int> off(static_cast<size_t>(s.nvars), 0);
            if (!restricted) off[0] = static_cast<int>(off0);
            for (int i = 1; i <= n - 1; ++i) {
                int slot = restricted ? i - 1 : i;
                long long mi = m[static_cast<size_t>(i - 1)];
                off[static_cast<size_t>(slot)] = static_cast<int>(i == n - 2 ? -mi : mi);
            }
            s.insert_term(off, num * jfact / den);
            return;
        }
        long long limit = N - used;
        if (level == n - 3 && cap) limit = std::min(limit, *cap);
        for (long long v = 0; v <= limit; ++v) {
            m[static_cast<size_t>(level)] = v;
            rec(level + 1, used + v);
        }
        m[static_cast<size_t>(level)] = 0;
    };
    rec(0, 0);
    return s;
}

// phi^(j)(0, x): the slot-0 = 0 part of phi^(j), expressed in the tail
// variables x_1, ..., x_n (matrix A = tail of A').
template <class C>
SeriesT<C> phi_restricted_t(const OneRowMatrix& Aprime, const C& beta, long long j, long long N) {
    return phi_series_t<C>(Aprime, beta, j, N, true);
}

// ell-th x_0-derivative at x_0 = 0: keeps slot-0 offset == ell, multiplies by
// ell!, drops the variable. Requires slot-0 base exponent 0 and nonnegative
// slot-0 offsets.
template <class C>
SeriesT<C> x0_derivative_restrict_t(const SeriesT<C>& s, long long ell) {
    if (s.nvars < 2) throw ValidationError("SizeMismatch", "x0_derivative_restrict needs >= 2 vars");
    if (!ScalarOps<C>::is_zero(s.base_exponents[0]))
        throw NonIntegralX0Exponent("x_0 base exponent must be 0");
    if (ell < 0) throw IndexOutOfRange("derivative order must be >= 0");
    if (s.grading_weights[0] != 0)
        throw ValidationError("GradingWeighted", "x_0 must carry grading weight 0");
    SeriesT<C> out;
    out.nvars = s.nvars - 1;
    out.base_exponents.assign(s.base_exponents.begin() + 1, s.base_exponents.end());
    out.grading_weights.assign(s.grading_weights.begin() + 1, s.grading_weights.end());
    out.grading_shift = s.grading_shift;
    out.truncation = s.truncation;
    out.polynomial = s.polynomial;
    const C lfact = detail::factorial_c<C>(ell);
    for (const auto& [off, c] : s.terms) {
        if (off[0] < 0) throw NonIntegralX0Exponent("negative x_0 offset");
        if (off[0] != static_cast<int>(ell)) continue;
        std::vector<int> tail(off.begin() + 1, off.end());
        out.insert_term(tail, c * lfact);
    }
    return out;
}

// Sets x_2 = ... = x_{n-2} = 0 (slots 1 .. nvars-3): keeps terms with zero
// offsets there and drops those variables, leaving slots (0, n-2, n-1).
template <class C>
SeriesT<C> restrict_middle_variables_t(const SeriesT<C>& s) {
    if (s.nvars < 4) throw ValidationError("SizeMismatch", "restrict_middle needs >= 4 vars");
    const int keep[3] = {0, s.nvars - 2, s.nvars - 1};
    SeriesT<C> out;
    out.nvars = 3;
    for (int i : keep) {
        out.base_exponents.push_back(s.base_exponents[static_cast<size_t>(i)]);
        out.grading_weights.push_back(s.grading_weights[static_cast<size_t>(i)]);
    }
    out.grading_shift = s.grading_shift;
    out.truncation = s.truncation;
    out.polynomial = s.polynomial;
    for (const auto& [off, c] : s.terms) {
        bool middle = false;
        for (int i = 1; i <= s.nvars - 3; ++i)
            if (off[static_cast<size_t>(i)] != 0) middle = true;
        if (middle) continue;
        std::vector<int> kept;
        for (int i : keep) kept.push_back(off[static_cast<size_t>(i)]);
        out.insert_term(kept, c);
    }
    return out;
}

// Partial sum at a point with explicit branches.
Complex evaluate(const FractionalSeries& s, const std::vector<SectorPoint>& x);

// s1 + lambda * s2, requiring identical variable counts and base exponents.
template <class C>
SeriesT<C> series_add_scaled(const SeriesT<C>& s1, const SeriesT<C>& s2, const C& lambda) {
    if (s1.nvars != s2.nvars) throw ValidationError("SizeMismatch", "series_add: nvars differ");
    for (size_t i = 0; i < s1.base_exponents.size(); ++i) {
        if constexpr (ScalarOps<C>::exact) {
            if (!(s1.base_exponents[i] == s2.base_exponents[i]))
                throw ValidationError("BaseMismatch", "series_add: base exponents differ");
        } else {
            if (ScalarOps<C>::abs_value(s1.base_exponents[i] - s2.base_exponents[i]) > 1e-12)
                throw ValidationError("BaseMismatch", "series_add: base exponents differ");
        }
    }
    SeriesT<C> out = s1;
    out.truncation = std::min(s1.truncation, s2.truncation);
    for (const auto& [off, c] : s2.terms) {
        auto it = out.terms.find(off);
        C v = (it == out.terms.end()) ? lambda * c : it->second + lambda * c;
        if (ScalarOps<C>::is_zero(v)) {
            if (it != out.terms.end()) out.terms.erase(it);
        } else {
            out.terms[off] = v;
        }
    }
    return out;
}

template <class C>
SeriesT<C> series_scale(const SeriesT<C>& s, const C& lambda) {
    SeriesT<C> out = s;
    out.terms.clear();
    for (const auto& [off, c] : s.terms) out.insert_term(off, c * lambda);
    return out;
}

// Maximum relative coefficient difference between two series whose base
// exponents differ by integers (offsets are shifted accordingly). Terms
// beyond either truncation are ignored; a term missing on one side counts
// with coefficient zero.
struct SeriesDiff {
    bool alignable = true;
    double max_abs = 0.0;
    double max_rel = 0.0;
    bool exact_equal = true;
};

template <class C>
SeriesDiff series_compare_aligned(const SeriesT<C>& s1, const SeriesT<C>& s2) {
    SeriesDiff d;
    if (s1.nvars != s2.nvars) {
        d.alignable = false;
        return d;
    }
    std::vector<int> shift(static_cast<size_t>(s1.nvars), 0);
    for (int i = 0; i < s1.nvars; ++i) {
        C diff = s1.base_exponents[static_cast<size_t>(i)] - s2.base_exponents[static_cast<size_t>(i)];
        auto n = ScalarOps<C>::as_integer(diff);
        if (!n) {
            d.alignable = false;
            return d;
        }
        shift[static_cast<size_t>(i)] = static_cast<int>(*n);
    }
    double scale = std::max(s1.max_abs_coefficient(), s2.max_abs_coefficient());
    auto account = [&](const C& c1, const C& c2) {
        if constexpr (ScalarOps<C>::exact) {
            if (!(c1 == c2)) d.exact_equal = false;
        }
        double ad = ScalarOps<C>::abs_value(c1 - c2);
        d.max_abs = std::max(d.max_abs, ad);
        if (scale > 0) d.max_rel = std::max(d.max_rel, ad / scale);
    };
    // s1 terms against s2 (offsets of s1 map to offsets + shift in s2 frame)
    for (const auto& [off, c] : s1.terms) {
        std::vector<int> o2 = off;
        for (int i = 0; i < s1.nvars; ++i) o2[static_cast<size_t>(i)] += shift[static_cast<size_t>(i)];
        const C* c2 = s2.coefficient(o2);
        account(c, c2 ? *c2 : ScalarOps<C>::from_long(0));
    }
    for (const auto& [off, c] : s2.terms) {
        std::vector<int> o1 = off;
        for (int i = 0; i < s1.nvars; ++i) o1[static_cast<size_t>(i)] -= shift[static_cast<size_t>(i)];
        if (s1.coefficient(o1)) continue; // already compared
        account(ScalarOps<C>::from_long(0), c);
    }
    return d;
}

// Convenience aliases for the default floating mode.
FractionalSeries psi_series(long long a, long long b, Complex beta, long long j, long long N);
FractionalSeries phi_series(const OneRowMatrix& Aprime, Complex beta, long long j, long long N);
FractionalSeries phi_restricted(const OneRowMatrix& Aprime, Complex beta, long long j, long long N);
FractionalSeries x0_derivative_restrict(const FractionalSeries& s, long long ell);
FractionalSeries restrict_middle_variables(const FractionalSeries& s);

} // namespace gkz
