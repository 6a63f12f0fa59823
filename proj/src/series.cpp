#include "gkz/series.hpp"

namespace gkz {

Complex evaluate(const FractionalSeries& s, const std::vector<SectorPoint>& x) {
    if (static_cast<int>(x.size()) != s.nvars)
        throw ValidationError("SizeMismatch", "evaluate: wrong number of points");
    Complex total(0.0, 0.0);
    for (const auto& [off, c] : s.terms) {
        Complex term = c;
        for (int i = 0; i < s.nvars; ++i) {
            Complex e = s.base_exponents[static_cast<size_t>(i)] +
                        Complex(static_cast<double>(off[static_cast<size_t>(i)]), 0.0);
            const SectorPoint& p = x[static_cast<size_t>(i)];
            if (p.is_zero()) {
                auto n = ScalarOps<Complex>::as_integer(e);
                if (!n || *n < 0)
                    throw ZeroBaseWithFractionalExponent("evaluate at zero with fractional exponent");
                if (*n > 0) {
                    term = Complex(0.0, 0.0);
                    break;
                }
                continue; // exponent 0: factor 1
            }
            term *= p.pow(e);
        }
        total += term;
    }
    return total;
}

FractionalSeries psi_series(long long a, long long b, Complex beta, long long j, long long N) {
    return psi_series_t<Complex>(a, b, beta, j, N);
}

FractionalSeries phi_series(const OneRowMatrix& Aprime, Complex beta, long long j, long long N) {
    return phi_series_t<Complex>(Aprime, beta, j, N);
}

FractionalSeries phi_restricted(const OneRowMatrix& Aprime, Complex beta, long long j, long long N) {
    return phi_restricted_t<Complex>(Aprime, beta, j, N);
}

FractionalSeries x0_derivative_restrict(const FractionalSeries& s, long long ell) {
    return x0_derivative_restrict_t<Complex>(s, ell);
}

FractionalSeries restrict_middle_variables(const FractionalSeries& s) {
    return restrict_middle_variables_t<Complex>(s);
}

} // namespace gkz
