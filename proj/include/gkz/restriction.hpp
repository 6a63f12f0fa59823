#pragma once

#include <vector>

#include "gkz/contour.hpp"
#include "gkz/scalar.hpp"
#include "gkz/series.hpp"

namespace gkz {

// Index bookkeeping of the restriction morphism for A' = (1, ka, kb):
// j = kq + r with 0 <= r < k, and p_j the unique residue with
// b p_j = q (mod a).
struct RestrictionIndex {
    long long j = 0;
    long long q = 0;
    long long r = 0;
    long long p_j = 0;
};

RestrictionIndex p_of_j(long long a, long long b, long long k, long long j);

// The constant lambda_j with d^r phi^(j) / dx_0^r |_{x_0=0} = lambda_j psi^{(p(j))}:
//   lambda_j = (j! / p(j)!) prod_{i=0}^{c-1} (z + i),
// z = (beta-r)/(ka) - p(j) b / a + 1 and c = (b p(j) - q)/a >= 0. The product
// vanishes exactly in the degenerate case beta in r0 + k (N \ NA).
template <class C>
struct LambdaQuotient {
    C value;
    bool zero_lambda = false;
    RestrictionIndex index;
};

template <class C>
LambdaQuotient<C> lambda_quotient_t(long long a, long long b, long long k, const C& beta,
                                    long long j) {
    RestrictionIndex idx = p_of_j(a, b, k, j);
    long long c = (b * idx.p_j - idx.q) / a;
    C z = (beta - ScalarOps<C>::from_long(idx.r)) / ScalarOps<C>::from_long(k * a) -
          ScalarOps<C>::from_ratio(idx.p_j * b, a) + ScalarOps<C>::from_long(1);
    C fact = ScalarOps<C>::from_long(1);
    for (long long i = 0; i < c; ++i) fact = fact * (z + ScalarOps<C>::from_long(i));
    C jf = ScalarOps<C>::from_long(1);
    for (long long i = idx.p_j + 1; i <= j; ++i) jf = jf * ScalarOps<C>::from_long(i);
    // j! / p(j)!: j >= p(j) need not hold, handle both directions
    if (idx.p_j > j) {
        C pf = ScalarOps<C>::from_long(1);
        for (long long i = j + 1; i <= idx.p_j; ++i) pf = pf * ScalarOps<C>::from_long(i);
        jf = ScalarOps<C>::from_long(1) / pf;
    }
    C value = jf * fact;
    return {value, ScalarOps<C>::is_zero(value), idx};
}

LambdaQuotient<Complex> lambda_quotient(long long a, long long b, long long k, Complex beta,
                                        long long j);

// varpi_beta: phi over (x_0, x_1, x_2) to the k-tuple of its x_0-derivatives
// at x_0 = 0.
template <class C>
std::vector<SeriesT<C>> varpi_apply_t(const SeriesT<C>& phi, long long k) {
    std::vector<SeriesT<C>> out;
    for (long long ell = 0; ell < k; ++ell) out.push_back(x0_derivative_restrict_t(phi, ell));
    return out;
}

std::vector<FractionalSeries> varpi_apply(const FractionalSeries& phi, long long k);

// lambda_{ell,nu} = omega^{nu ell} / k, the inverse of (omega^{-nu ell}).
std::vector<std::vector<Complex>> dft_weights(long long k);

// gamma~_{tau,r} = sum_nu lambda_{r,nu} omega^{-nu beta} root_cycle(gamma, k, nu)
Cycle build_tilde_cycle(const Cycle& gamma, long long k, Complex beta, long long r);

} // namespace gkz
