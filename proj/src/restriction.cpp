#include "gkz/restriction.hpp"

namespace gkz {

namespace {
constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
}

RestrictionIndex p_of_j(long long a, long long b, long long k, long long j) {
    if (j < 0 || j >= k * a) throw IndexOutOfRange("p_of_j: need 0 <= j < ka");
    if (gcd_ll(a, b) != 1) throw BadMatrix("p_of_j: gcd(a,b) must be 1");
    RestrictionIndex idx;
    idx.j = j;
    idx.r = floor_mod(j, k);
    idx.q = (j - idx.r) / k;
    idx.p_j = a == 1 ? 0 : floor_mod(idx.q * mod_inverse(b, a), a);
    return idx;
}

LambdaQuotient<Complex> lambda_quotient(long long a, long long b, long long k, Complex beta,
                                        long long j) {
    return lambda_quotient_t<Complex>(a, b, k, beta, j);
}

std::vector<FractionalSeries> varpi_apply(const FractionalSeries& phi, long long k) {
    return varpi_apply_t<Complex>(phi, k);
}

std::vector<std::vector<Complex>> dft_weights(long long k) {
    if (k < 1) throw ValidationError("BadRoot", "dft_weights needs k >= 1");
    std::vector<std::vector<Complex>> w(static_cast<size_t>(k),
                                        std::vector<Complex>(static_cast<size_t>(k)));
    for (long long ell = 0; ell < k; ++ell)
        for (long long nu = 0; nu < k; ++nu)
            w[static_cast<size_t>(ell)][static_cast<size_t>(nu)] =
                std::exp(Complex(0.0, kTwoPi * static_cast<double>(nu * ell) /
                                          static_cast<double>(k))) /
                static_cast<double>(k);
    return w;
}

Cycle build_tilde_cycle(const Cycle& gamma, long long k, Complex beta, long long r) {
    if (r < 0 || r >= k) throw IndexOutOfRange("build_tilde_cycle: need 0 <= r < k");
    auto w = dft_weights(k);
    Cycle out;
    for (long long nu = 0; nu < k; ++nu) {
        Complex factor = w[static_cast<size_t>(r)][static_cast<size_t>(nu)] *
                         std::exp(Complex(0.0, -kTwoPi * static_cast<double>(nu) /
                                                   static_cast<double>(k)) *
                                  beta);
        Cycle rooted = root_cycle(gamma, k, nu);
        for (auto& term : rooted.terms) {
            term.weight *= factor;
            out.terms.push_back(std::move(term));
        }
    }
    return out;
}

} // namespace gkz
