#include <doctest.h>

#include <cmath>

#include "gkz/contour.hpp"
#include "gkz/lattice.hpp"

using namespace gkz;

namespace {
constexpr double kPi = 3.14159265358979323846;

// independent oracle: adaptive Simpson on the real line, no shared code with
// the Gauss-Legendre engine
Complex simpson_rec(const std::function<Complex(double)>& f, double a, double b, Complex fa,
                    Complex fb, Complex fm, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    Complex flm = f(lm), frm = f(rm);
    Complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth > 30 || std::abs(left + right - whole) < tol) return left + right;
    return simpson_rec(f, a, m, fa, fm, flm, tol / 2, depth + 1) +
           simpson_rec(f, m, b, fm, fb, frm, tol / 2, depth + 1);
}

Complex simpson(const std::function<Complex(double)>& f, double a, double b, double tol) {
    return simpson_rec(f, a, b, f(a), f(b), f(0.5 * (a + b)), tol, 0);
}
} // namespace

TEST_CASE("gauss-legendre panel integrates high-degree polynomials") {
    auto f = [](double x) { return Complex(std::pow(x, 63), 0.0); };
    IntegralResult r = adaptive_quadrature(f, 0.0, 1.0, 1e-14);
    CHECK(std::abs(r.value - Complex(1.0 / 64.0, 0.0)) < 1e-14);
}

TEST_CASE("adaptive quadrature against simpson oracle") {
    auto f = [](double x) { return std::exp(Complex(-x * x, 0.3 * x)); };
    IntegralResult r = adaptive_quadrature(f, 0.0, 6.0, 1e-13);
    Complex oracle = simpson(f, 0.0, 6.0, 1e-13);
    CHECK(std::abs(r.value - oracle) < 1e-10);
}

TEST_CASE("cycle construction and continuity") {
    Cycle c = cycle_Cp(1, 3, 0.5);
    CHECK(cycle_is_continuous(c));
    CHECK(c.terms.size() == 1);
    REQUIRE(c.terms[0].segments.size() == 3);
    CHECK(c.terms[0].segments[0].kind == PathSegment::Kind::RayIn);
    CHECK(c.terms[0].segments[1].kind == PathSegment::Kind::Arc);
    CHECK(c.terms[0].segments[2].kind == PathSegment::Kind::RayOut);
    CHECK(c.terms[0].segments[1].arg_to == doctest::Approx(2.0 * kPi / 3.0));
    CHECK_THROWS_AS(cycle_Cp(0, 3, 0.5), BadP);
    CHECK_THROWS_AS(cycle_Cp(4, 3, 0.5), BadP);

    // closed loop p = b: endpoints coincide in C but carried arg differs by 2 pi
    Cycle cb = cycle_Cp(3, 3, 1.0);
    CHECK(cb.terms[0].segments[2].arg == doctest::Approx(2.0 * kPi));
}

TEST_CASE("rotate and root cycles") {
    Cycle c = cycle_Cp(1, 3, 1.0);
    Cycle same = rotate_cycle(rotate_cycle(c, 0.7), -0.7);
    for (size_t i = 0; i < 3; ++i) {
        CHECK(same.terms[0].segments[i].arg == doctest::Approx(c.terms[0].segments[i].arg));
        CHECK(same.terms[0].segments[i].arg_from ==
              doctest::Approx(c.terms[0].segments[i].arg_from));
    }
    // rotate C_1 by 2 pi / b: outgoing ray matches C_2's outgoing ray
    Cycle r = rotate_cycle(c, 2.0 * kPi / 3.0);
    Cycle c2 = cycle_Cp(2, 3, 1.0);
    CHECK(r.terms[0].segments[2].arg == doctest::Approx(c2.terms[0].segments[2].arg));

    // the k-th power of root_cycle(c, k, 0) retraces c: args scale back
    Cycle half = root_cycle(c, 2, 0);
    for (size_t i = 0; i < 3; ++i) {
        CHECK(2.0 * half.terms[0].segments[i].arg ==
              doctest::Approx(c.terms[0].segments[i].arg));
        CHECK(half.terms[0].segments[i].radius * half.terms[0].segments[i].radius ==
              doctest::Approx(c.terms[0].segments[i].radius));
    }

    // k = 1, nu = 0 is the identity
    Cycle id = root_cycle(c, 1, 0);
    CHECK(id.terms[0].segments[2].arg == doctest::Approx(c.terms[0].segments[2].arg));
    // k-th root scales carried argument and radius
    Cycle rt = root_cycle(cycle_Cp(1, 3, 0.25), 2, 1);
    CHECK(rt.terms[0].segments[0].radius == doctest::Approx(0.5));
    CHECK(rt.terms[0].segments[0].arg == doctest::Approx((0.0 - 2.0 * kPi) / 2.0));
    CHECK(cycle_is_continuous(rt));
}

TEST_CASE("residue: C_b at beta = 0 gives 2 pi i") {
    OneRowMatrix A({2, 3});
    std::vector<SectorPoint> x = {SectorPoint(0.01, kPi), SectorPoint(0.01, kPi)};
    IntegralResult r = integrate(A, {0.0, 0.0}, x, cycle_Cp(3, 3, 1.0), 1e-12);
    CHECK(std::abs(r.value - Complex(0.0, 2.0 * kPi)) < 1e-9);
}

TEST_CASE("euler scaling identity") {
    OneRowMatrix A({2, 3});
    Complex beta{0.3, 0.0};
    std::vector<SectorPoint> x = {SectorPoint(1.0, kPi), SectorPoint(1.0, kPi)};
    double s = 2.0;
    std::vector<SectorPoint> xs = {SectorPoint(std::pow(s, 2.0), kPi), SectorPoint(std::pow(s, 3.0), kPi)};
    IntegralResult base = integrate(A, beta, x, cycle_Cp(1, 3, 1.0), 1e-12);
    IntegralResult scaled = integrate(A, beta, xs, cycle_Cp(1, 3, 1.0), 1e-12);
    Complex expect = std::pow(Complex(s, 0.0), beta) * base.value;
    CHECK(std::abs(scaled.value - expect) / std::abs(expect) < 1e-8);
}

TEST_CASE("decay precondition enforced") {
    OneRowMatrix A({2, 3});
    std::vector<SectorPoint> bad = {SectorPoint(1.0, kPi), SectorPoint(1.0, 0.0)}; // Re x2 > 0
    CHECK_THROWS_AS(integrate(A, {0.3, 0.0}, bad, cycle_Cp(1, 3, 1.0), 1e-10), NotRapidDecay);
    // all-zero x on a ray cycle is not rapid decay either
    std::vector<SectorPoint> zero = {SectorPoint(0.0, 0.0), SectorPoint(0.0, 0.0)};
    CHECK_THROWS_AS(integrate(A, {0.3, 0.0}, zero, cycle_Cp(1, 3, 1.0), 1e-10), NotRapidDecay);
}

TEST_CASE("epsilon independence") {
    OneRowMatrix A({2, 3});
    std::vector<SectorPoint> x = {SectorPoint(1.0, kPi), SectorPoint(1.0, kPi)};
    CHECK(epsilon_independence_check(A, {0.3, 0.0}, x, 1, 0.5, 1.0) < 1e-9);
    CHECK(epsilon_independence_check(A, {0.3, 0.0}, x, 1, 0.8, 0.8) == 0.0);
    CHECK(epsilon_independence_check(A, {0.0, 0.0}, x, 3, 0.5, 1.0) < 1e-9);
}

TEST_CASE("linearity in cycle weights") {
    OneRowMatrix A({2, 3});
    Complex beta{0.4, 0.1};
    std::vector<SectorPoint> x = {SectorPoint(0.8, kPi), SectorPoint(1.1, kPi)};
    Cycle c1 = cycle_Cp(1, 3, 1.0);
    Cycle c2 = cycle_Cp(2, 3, 1.0);
    Cycle combo;
    combo.terms.push_back(c1.terms[0]);
    combo.terms.push_back(c2.terms[0]);
    combo.terms[0].weight = Complex(2.0, 0.0);
    combo.terms[1].weight = Complex(0.0, -1.0);
    IntegralResult r = integrate(A, beta, x, combo, 1e-12);
    IntegralResult r1 = integrate(A, beta, x, c1, 1e-12);
    IntegralResult r2 = integrate(A, beta, x, c2, 1e-12);
    Complex expect = 2.0 * r1.value + Complex(0.0, -1.0) * r2.value;
    CHECK(std::abs(r.value - expect) / std::abs(expect) < 1e-10);
}

TEST_CASE("branch continuity: doubled panels match") {
    OneRowMatrix A({2, 3});
    Complex beta{0.3, 0.0};
    std::vector<SectorPoint> x = {SectorPoint(1.0, kPi), SectorPoint(1.0, kPi)};
    QuadratureOptions base;
    base.tol = 1e-12;
    QuadratureOptions fine = base;
    fine.min_depth = 2;
    IntegralResult a = integrate_powers({2, 3}, beta, x, cycle_Cp(2, 3, 1.0), base);
    IntegralResult b = integrate_powers({2, 3}, beta, x, cycle_Cp(2, 3, 1.0), fine);
    CHECK(std::abs(a.value - b.value) / std::abs(a.value) < 1e-10);
}

TEST_CASE("column deletion at x_m = 0 matches smaller matrix") {
    std::vector<SectorPoint> x4 = {SectorPoint(0.5, 0.3), SectorPoint(0.0, 0.0),
                                   SectorPoint(1.0, kPi), SectorPoint(0.8, kPi)};
    std::vector<SectorPoint> x3 = {SectorPoint(0.5, 0.3), SectorPoint(1.0, kPi),
                                   SectorPoint(0.8, kPi)};
    Cycle c = cycle_Cp(1, 6, 1.0);
    IntegralResult big = integrate_powers({1, 2, 4, 6}, {0.3, 0.0}, x4, c);
    IntegralResult small = integrate_powers({1, 4, 6}, {0.3, 0.0}, x3, c);
    CHECK(std::abs(big.value - small.value) <= 1e-12 * std::abs(big.value));
}

TEST_CASE("circle integral combinatorial values") {
    OneRowMatrix A({2, 3});
    SectorPoint x1(0.8, 2.1), x2(0.6, -1.3);
    // beta = 5 = 2 + 3: only l = (1,1)
    CircleIntegral r5 = circle_integral(A, {5.0, 0.0}, {x1, x2}, 0.7);
    CHECK(r5.combinatorial);
    Complex expect = Complex(0.0, 2.0 * kPi) * x1.value() * x2.value();
    CHECK(std::abs(r5.value - expect) / std::abs(expect) < 1e-12);
    CHECK(r5.crosscheck_rel < 1e-8);

    // beta = 1 not in N(2,3): empty sum
    CircleIntegral r1 = circle_integral(A, {1.0, 0.0}, {x1, x2}, 0.7);
    CHECK(r1.combinatorial);
    CHECK(std::abs(r1.value) < 1e-12);

    // beta = 0: 2 pi i
    CircleIntegral r0 = circle_integral(A, {0.0, 0.0}, {x1, x2}, 0.7);
    CHECK(std::abs(r0.value - Complex(0.0, 2.0 * kPi)) < 1e-10);
}
