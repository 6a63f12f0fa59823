#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "gkz/expansion.hpp"

using namespace gkz;

namespace {
constexpr double kPi = 3.14159265358979323846;
const SectorPoint kX1{1.0, kPi};

// independent 1-d oracle: adaptive Simpson along the positive real axis
Complex simpson_rec(const std::function<Complex(double)>& f, double a, double b, Complex fa,
                    Complex fb, Complex fm, double tol, int depth) {
    double m = 0.5 * (a + b);
    Complex flm = f(0.5 * (a + m)), frm = f(0.5 * (m + b));
    Complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth > 32 || std::abs(left + right - whole) < tol) return left + right;
    return simpson_rec(f, a, m, fa, fm, flm, tol / 2, depth + 1) +
           simpson_rec(f, m, b, fm, fb, frm, tol / 2, depth + 1);
}
Complex simpson(const std::function<Complex(double)>& f, double a, double b, double tol) {
    return simpson_rec(f, a, b, f(a), f(b), f(0.5 * (a + b)), tol, 0);
}
} // namespace

TEST_CASE("sector info") {
    SectorInfo s = sector_info(1, 2, 3);
    CHECK(s.ell == 1);
    CHECK(s.alpha == doctest::Approx(2.0 * kPi / 3.0));
    SectorInfo s2 = sector_info(3, 2, 3);
    CHECK(s2.ell == 2);
    CHECK(s2.alpha == doctest::Approx(0.0));
    CHECK_THROWS_AS(sector_info(1, 1, 2), HalfTurn);
}

TEST_CASE("ik1 against independent quadrature oracle") {
    // (a,b,beta,k) = (2,3,0.3,2), x1 = (1,pi): integrand s^{bk-beta-1} e^{-s^2}
    Complex closed = ik1_closed(2, 3, {0.3, 0.0}, 2, kX1);
    auto f = [](double s) {
        return Complex(std::pow(s, 6.0 - 0.3 - 1.0) * std::exp(-s * s), 0.0);
    };
    Complex oracle = simpson(f, 1e-9, 12.0, 1e-13) / std::tgamma(3.0); // / k!
    CHECK(std::abs(closed - oracle) / std::abs(oracle) < 1e-9);
}

TEST_CASE("ik1 preconditions") {
    CHECK_THROWS_AS(ik1_closed(2, 3, {0.0, 0.0}, 0, kX1), GammaPole);
    CHECK_THROWS_AS(ik1_closed(2, 3, {0.3, 0.0}, 2, SectorPoint(1.0, 0.0)), WrongSector);
}

TEST_CASE("ik2 equals ik1 times the ell phase") {
    for (long long p : {1LL, 2LL, 3LL}) {
        long long ell = sector_info(p, 2, 3).ell;
        Complex beta{0.5, 0.0};
        long long k = 1;
        Complex expect = ik1_closed(2, 3, beta, k, kX1) *
                         std::exp(Complex(0.0, -2.0 * kPi * ell) * (beta - 3.0 * k) / 2.0);
        CHECK(std::abs(ik2_closed(2, 3, beta, k, p, kX1) - expect) < 1e-14 * std::abs(expect));
    }
}

TEST_CASE("closed coefficients match cycle quadrature (oracle pair)") {
    for (auto [a, b] : {std::pair<long long, long long>{2, 3}, {3, 5}}) {
        for (Complex beta : {Complex{0.3, 0.0}, Complex{0.5, 0.0}, Complex{-0.7, 0.2}}) {
            for (long long p = 1; p <= b; ++p) {
                long long kmin = closed_form_kmin(b, beta);
                CoefficientTable t = expansion_table(a, b, beta, p, kX1, kmin + 10);
                for (auto& [k, d] : t.discrepancies()) {
                    (void)k;
                    CHECK(d < 1e-8);
                }
            }
        }
    }
}

TEST_CASE("sector consistency: two x1 arguments, same closed form") {
    // both points inside the DAsecteurs sector for p = 3 (alpha = 0)
    for (const SectorPoint& x1 : {SectorPoint(1.0, kPi), SectorPoint(0.8, kPi * 0.8)}) {
        CoefficientTable t = expansion_table(2, 3, {0.3, 0.0}, 3, x1, 8);
        for (auto& [k, d] : t.discrepancies()) {
            (void)k;
            CHECK(d < 1e-8);
        }
    }
}

TEST_CASE("c_closed error cases") {
    CHECK_THROWS_AS(c_closed(2, 3, {0.3, 0.0}, 1, 0, kX1), TooSmallK);
    // (beta - bj)/a integer: the prefactor vanishes, value exactly 0
    CHECK(c_closed(2, 3, {1.0, 0.0}, 1, 3, kX1) == Complex{0.0, 0.0}); // j=1: (3-1)/2=1
}

TEST_CASE("lambda_j consistency with c_closed") {
    // lambda_j (q_j^ell - 1) psi_m x1^{z - bm} = c_{am+j}
    long long a = 2, b = 3, p = 1, j = 0, m = 2;
    Complex beta{0.3, 0.0};
    long long ell = sector_info(p, a, b).ell;
    Complex q = std::exp(Complex(0.0, 2.0 * kPi) * (Complex(static_cast<double>(j * b), 0.0) - beta) /
                         static_cast<double>(a));
    Complex z = (beta - static_cast<double>(j * b)) / static_cast<double>(a);
    Complex psi_m = pochhammer(z, b * m) / pochhammer(Complex(static_cast<double>(a * m + j), 0.0), a * m);
    Complex lhs = lambda_j(a, b, beta, j) * (std::pow(q, static_cast<double>(ell)) - 1.0) * psi_m *
                  kX1.pow(z - static_cast<double>(b * m));
    Complex rhs = c_closed(a, b, beta, p, a * m + j, kX1);
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-10);
    CHECK_THROWS_AS(lambda_j(2, 3, {1.0, 0.0}, 1), SinPole);
    CHECK(std::abs(lambda_j(2, 3, {0.5, 0.0}, 0)) > 0);
}

TEST_CASE("decomposition matrix frozen 2x2 and identity") {
    DecompositionMatrix d = decomposition_matrix(2, 3, {0.5, 0.0}, {1, 2});
    CHECK(std::abs(d.det_direct - Complex(0.0, 4.0)) < 1e-12);
    CHECK(std::abs(d.det_formula - Complex(0.0, 4.0)) < 1e-12);
    CHECK(d.rank == 2);
    CHECK(d.zero_row == -1);
    // q_0 = -i, q_1 = i
    CHECK(std::abs(d.M[0][0] - Complex(-1.0, -1.0)) < 1e-12);
    CHECK(std::abs(d.M[0][1] - Complex(-2.0, 0.0)) < 1e-12);
}

TEST_CASE("decomposition determinant identity, random (a,b,beta)") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> unif(0.05, 0.95);
    std::uniform_int_distribution<int> asmall(1, 6);
    for (int trial = 0; trial < 20; ++trial) {
        long long a = asmall(rng);
        long long b = a + 1 + asmall(rng) % 5;
        while (gcd_ll(a, b) != 1) ++b;
        Complex beta(static_cast<double>(asmall(rng)) + unif(rng), unif(rng) - 0.5);
        std::vector<long long> ells;
        for (long long ell = 1; ell <= a; ++ell) ells.push_back(ell);
        DecompositionMatrix d = decomposition_matrix(a, b, beta, ells);
        CHECK(std::abs(d.det_direct - d.det_formula) <= 1e-10 * std::abs(d.det_formula));
        CHECK(d.rank == a);
    }
}

TEST_CASE("decomposition with integer beta: exact zero row, rank a-1") {
    DecompositionMatrix d = decomposition_matrix(3, 5, {7.0, 0.0}, {1, 2, 3});
    CHECK(d.zero_row == 2); // (5j-7)/3 integer at j=2
    CHECK(d.rank == 2);
    for (const auto& v : d.M[2]) CHECK(v == Complex{0.0, 0.0});
    // last column exactly zero as well (q_j^a = 1 for integer beta)
    for (long long j = 0; j < 3; ++j) CHECK(d.M[static_cast<size_t>(j)][2] == Complex{0.0, 0.0});
    // a = 1 degenerate case: single entry q_0 - 1
    DecompositionMatrix d1 = decomposition_matrix(1, 2, {0.3, 0.0}, {1});
    CHECK(std::abs(d1.det_direct - d1.M[0][0]) < 1e-15);
}

TEST_CASE("mu recovery matches lambda_j (q^ell - 1)") {
    for (long long p : {1LL, 3LL}) {
        MuRecovery mu = mu_recovery(2, 3, {0.3, 0.0}, p, kX1, 12);
        long long ell = sector_info(p, 2, 3).ell;
        for (long long j = 0; j < 2; ++j) {
            Complex q = std::exp(Complex(0.0, 2.0 * kPi) *
                                 (Complex(static_cast<double>(3 * j), 0.0) - Complex(0.3, 0.0)) / 2.0);
            Complex theory = lambda_j(2, 3, {0.3, 0.0}, j) * (std::pow(q, static_cast<double>(ell)) - 1.0);
            CHECK(std::abs(mu.mu[static_cast<size_t>(j)] - theory) / std::abs(theory) < 1e-6);
            CHECK(mu.spread[static_cast<size_t>(j)] < 1e-6);
        }
    }
}

TEST_CASE("mu recovery: integer beta kills the j0 coefficient") {
    MuRecovery mu = mu_recovery(2, 3, {1.0, 0.0}, 1, kX1, 12);
    CHECK(mu.flagged_zero[1]); // j0 = 1 for beta = 1
    CHECK(std::abs(mu.mu[1]) == 0.0);
    CHECK(std::abs(mu.mu[0]) > 0.1);
}

TEST_CASE("remainder slope close to N+1") {
    OneRowMatrix A({2, 3});
    AnchoredCycle ac = closed_form_cycle(2, 3, 1, kX1, 1.0, {{kPi, 3}});
    std::vector<SectorPoint> xs;
    for (int m = 4; m <= 10; ++m) xs.push_back(SectorPoint(std::pow(2.0, -m), kPi));
    for (long long N : {0LL, 2LL, 5LL}) {
        RemainderFit fit = remainder_slope(A, {0.3, 0.0}, {kX1}, ac.cycle, N, xs);
        double target = static_cast<double>(N + 1);
        CHECK(fit.slope > 0.95 * target);
        CHECK(fit.slope < 1.05 * target);
    }
}

TEST_CASE("gevrey order estimate") {
    auto table_for = [](long long a, long long b) {
        CoefficientTable t;
        t.A = {a, b};
        t.beta = {0.3, 0.0};
        for (long long k = 10; k <= 59; ++k)
            t.entries.push_back({k, c_closed(a, b, {0.3, 0.0}, 1, k, kX1),
                                 CoefficientMethod::ClosedForm, 0.0, 0.0, false});
        return t;
    };
    double s23 = gevrey_order_estimate(table_for(2, 3));
    CHECK(s23 > 1.4);
    CHECK(s23 < 1.6);
    double s35 = gevrey_order_estimate(table_for(3, 5));
    CHECK(s35 > 1.56);
    CHECK(s35 < 1.78);
    // convergent class: geometric coefficients fit s = 1
    CoefficientTable geo;
    geo.A = {1, 2};
    for (long long k = 10; k <= 59; ++k)
        geo.entries.push_back({k, Complex(std::pow(0.5, static_cast<double>(k)), 0.0),
                               CoefficientMethod::ClosedForm, 0.0, 0.0, false});
    CHECK(gevrey_order_estimate(geo) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("derivative relation through closed forms") {
    CHECK(derivative_relation_check(2, 3, {0.3, 0.0}, 0, 2, kX1) < 1e-10);
    CHECK(derivative_relation_check(2, 3, {0.3, 0.0}, 0, 0, kX1) < 1e-15);
    CHECK(derivative_relation_check(3, 5, {0.7, 0.0}, 1, 1, kX1) < 1e-10);
}

TEST_CASE("semigroup membership") {
    CHECK(is_in_NA({2, 3}, 0));
    CHECK(!is_in_NA({2, 3}, 1));
    CHECK(is_in_NA({2, 3}, 5));
    CHECK(!is_in_NA({2, 3}, -1));
    CHECK(is_in_NA({1, 4, 6}, 3));
}

TEST_CASE("regularized integral J_beta") {
    OneRowMatrix A({2, 3});
    // beta = 5 in N(2,3): rejected
    CHECK_THROWS_AS(j_beta_integral(A, 5, {kX1, SectorPoint(0.5, kPi)}, 0.0), BetaInNA);
    // beta = -1: plain convergent integral; cross-check against Simpson of the
    // real-axis integrand
    Complex J = j_beta_integral(A, -1, {kX1, SectorPoint(0.5, kPi)}, 0.0);
    auto f = [](double t) {
        return std::exp(Complex(-t * t - 0.5 * t * t * t, 0.0));
    };
    Complex oracle = simpson(f, 0.0, 12.0, 1e-13);
    CHECK(std::abs(J - oracle) / std::abs(oracle) < 1e-10);
    // decay required
    CHECK_THROWS_AS(j_beta_integral(A, 1, {kX1, SectorPoint(0.5, 0.0)}, 0.0), NotRapidDecay);
}

TEST_CASE("J_beta coefficients: closed vs quadrature, k = 2..10") {
    for (long long k = 2; k <= 10; ++k) {
        Complex quad = j_beta_coefficient_quadrature(2, 3, 1, k, kX1);
        Complex closed = j_beta_coefficient_closed(2, 3, 1, k, kX1);
        CHECK(std::abs(quad - closed) / std::abs(closed) < 1e-8);
    }
    CHECK_THROWS_AS(j_beta_coefficient_closed(2, 3, 7, 2, kX1), TooSmallK);
}

TEST_CASE("J_beta partial sums approximate the integral at small x2") {
    OneRowMatrix A({2, 3});
    SectorPoint x2(1e-3, kPi);
    Complex J = j_beta_integral(A, 1, {kX1, x2}, 0.0);
    Complex S(0.0, 0.0);
    for (long long k = 0; k <= 4; ++k)
        S += j_beta_coefficient_quadrature(2, 3, 1, k, kX1) * x2.pow({static_cast<double>(k), 0.0});
    CHECK(std::abs(J - S) / std::abs(J) < 1e-9);
}

TEST_CASE("cutoff coefficients for beta in NA") {
    OneRowMatrix A({2, 3});
    // large k: matches the regularized closed form, not cutoff dependent
    for (long long k = 2; k <= 6; ++k) {
        CutoffCoefficient c = j_phi_coefficient(A, 5, k, {kX1});
        CHECK(!c.cutoff_dependent);
        Complex closed = j_beta_coefficient_closed(2, 3, 5, k, kX1);
        CHECK(std::abs(c.value - closed) / std::abs(closed) < 1e-10);
    }
    // small k: finite and flagged
    for (long long k : {0LL, 1LL}) {
        CutoffCoefficient c = j_phi_coefficient(A, 5, k, {kX1});
        CHECK(c.cutoff_dependent);
        CHECK(std::isfinite(std::abs(c.value)));
    }
    // exponent of x1 at k = am + j0, m large, is the negative integer q - bm:
    // closed form power (beta - kb)/a = (5 - 3k)/2 at odd k
    Complex c5 = j_beta_coefficient_closed(2, 3, 5, 5, kX1); // (5-15)/2 = -5
    CHECK(std::abs(c5 - std::abs(c5) * std::exp(Complex(0.0, std::arg(c5)))) < 1e-12);
    // support residues: nonzero closed coefficients at k = 2m+1 (j0 = 1 class)
    CHECK(std::abs(j_beta_coefficient_closed(2, 3, 5, 7, kX1)) > 0);
}

TEST_CASE("expansion table regularized mode for integer beta outside NA") {
    CoefficientTable t = expansion_table(2, 3, {1.0, 0.0}, 1, kX1, 8);
    bool has_reg = false;
    for (const auto& e : t.entries)
        if (e.method == CoefficientMethod::RegularizedClosed) has_reg = true;
    CHECK(has_reg);
    for (auto& [k, d] : t.discrepancies()) {
        (void)k;
        CHECK(d < 1e-8);
    }
}
