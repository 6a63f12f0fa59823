#include <doctest.h>

#include <cmath>

#include "gkz/series.hpp"

using namespace gkz;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("psi series first coefficients, (2,3) beta=1/2 j=0") {
    FractionalSeries s = psi_series(2, 3, {0.5, 0.0}, 0, 1);
    REQUIRE(s.terms.size() == 2);
    const Complex* c0 = s.coefficient({0, 0});
    const Complex* c1 = s.coefficient({-3, 2});
    REQUIRE(c0);
    REQUIRE(c1);
    CHECK(std::abs(*c0 - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(*c1 - Complex{21.0 / 128.0, 0.0}) < 1e-15);
    CHECK(s.base_exponents[0] == Complex{0.25, 0.0});
    CHECK(s.base_exponents[1] == Complex{0.0, 0.0});
    CHECK(!s.polynomial);
}

TEST_CASE("psi series natural termination, (2,3) beta=3 j=1") {
    FractionalSeries s = psi_series(2, 3, {3.0, 0.0}, 1, 10);
    CHECK(s.polynomial);
    REQUIRE(s.terms.size() == 1); // only m = 0 survives: psi = x_2
    const Complex* c0 = s.coefficient({0, 1});
    REQUIRE(c0);
    CHECK(*c0 == Complex{1.0, 0.0});
}

TEST_CASE("psi series index validation") {
    CHECK_THROWS_AS(psi_series(2, 3, {0.5, 0.0}, 2, 5), IndexOutOfRange);
    CHECK_THROWS_AS(psi_series(2, 4, {0.5, 0.0}, 0, 5), BadMatrix);
}

TEST_CASE("psi coefficient recurrence against direct pochhammer") {
    Complex beta{0.3, 0.0};
    for (long long j : {0LL, 1LL}) {
        FractionalSeries s = psi_series(2, 3, beta, j, 30);
        Complex z = (beta - Complex(3.0 * j, 0)) / 2.0;
        for (long long m = 0; m + 1 <= 30; ++m) {
            const Complex* cm = s.coefficient({static_cast<int>(-3 * m), static_cast<int>(2 * m + j)});
            const Complex* cm1 =
                s.coefficient({static_cast<int>(-3 * (m + 1)), static_cast<int>(2 * (m + 1) + j)});
            REQUIRE(cm);
            REQUIRE(cm1);
            Complex ratio = Complex{1.0, 0.0};
            for (long long i = 0; i < 3; ++i) ratio *= z - Complex(static_cast<double>(3 * m + i), 0);
            for (long long i = 1; i <= 2; ++i) ratio /= Complex(static_cast<double>(2 * m + j + i), 0);
            CHECK(std::abs(*cm1 - *cm * ratio) <= 1e-12 * std::abs(*cm1));
        }
    }
}

TEST_CASE("psi support disjointness across j") {
    for (long long j = 0; j < 3; ++j) {
        FractionalSeries s = psi_series(3, 5, {0.7, 0.0}, j, 12);
        for (const auto& [off, c] : s.terms) {
            (void)c;
            CHECK((off[1] - j) % 3 == 0); // x_2 offsets in j + aZ
        }
    }
}

TEST_CASE("phi series basics on (1,2,3)") {
    OneRowMatrix A({1, 2, 3});
    Complex beta{0.5, 0.0};
    FractionalSeries s = phi_series(A, beta, 0, 6);
    // m = (0,0): coefficient 1, offsets all zero
    const Complex* c0 = s.coefficient({0, 0, 0});
    REQUIRE(c0);
    CHECK(std::abs(*c0 - Complex{1.0, 0.0}) < 1e-15);
    CHECK(!s.polynomial);
    // index-set constraint: slot-0 offsets nonnegative
    for (const auto& [off, c] : s.terms) {
        (void)c;
        CHECK(off[0] >= 0);
    }
}

TEST_CASE("phi series polynomial case beta=2, j=0 on (1,2,3)") {
    OneRowMatrix A({1, 2, 3});
    FractionalSeries s = phi_series(A, {2.0, 0.0}, 0, 10);
    CHECK(s.polynomial);
    // h = 1: no terms with m_{n-2} = offsets[1] <= -2
    for (const auto& [off, c] : s.terms) {
        (void)c;
        CHECK(off[1] >= -1);
    }
    CHECK(!s.terms.empty());
}

TEST_CASE("phi series on (1,4,6): slot-0 exponent j+4m1-6m2") {
    OneRowMatrix A({1, 4, 6});
    FractionalSeries s = phi_series(A, {0.7, 0.0}, 3, 8);
    CHECK(!s.terms.empty());
    for (const auto& [off, c] : s.terms) {
        (void)c;
        long long m1 = -off[1], m2 = off[2];
        CHECK(off[0] == 3 + 4 * m1 - 6 * m2);
        CHECK(off[0] >= 0);
    }
}

TEST_CASE("phi restricted equals x0 restriction of phi") {
    OneRowMatrix A({1, 2, 3});
    Complex beta{0.37, 0.0};
    FractionalSeries full = phi_series(A, beta, 0, 8);
    FractionalSeries viaOp = x0_derivative_restrict(full, 0);
    FractionalSeries direct = phi_restricted(A, beta, 0, 8);
    SeriesDiff d = series_compare_aligned(viaOp, direct);
    CHECK(d.alignable);
    CHECK(d.max_rel < 1e-14);
}

TEST_CASE("phi restricted vanishes exactly when beta in N minus NA") {
    OneRowMatrix A({1, 2, 3});
    // beta = 1 = j: j_0 = 1 and phi^(1)(0,x) = 0
    FractionalSeries zero = phi_restricted(A, {1.0, 0.0}, 1, 10);
    CHECK(zero.is_zero());
    // beta = 1, j = 0 is nonzero
    FractionalSeries nz = phi_restricted(A, {1.0, 0.0}, 0, 10);
    CHECK(!nz.is_zero());
}

TEST_CASE("x0 derivative restrict on monomial x0*x1") {
    FractionalSeries s;
    s.nvars = 2;
    s.base_exponents = {{0.0, 0.0}, {0.0, 0.0}};
    s.grading_weights = {0, 1};
    s.truncation = 5;
    s.insert_term({1, 1}, {1.0, 0.0});
    FractionalSeries d = x0_derivative_restrict(s, 1);
    REQUIRE(d.terms.size() == 1);
    const Complex* c = d.coefficient({1});
    REQUIRE(c);
    CHECK(*c == Complex{1.0, 0.0}); // 1! * 1
    // ell = 0 on a series with no slot-0-constant terms -> zero series
    CHECK(x0_derivative_restrict(s, 0).is_zero());
}

TEST_CASE("restrict middle variables (1,2,4,6) -> (1,4,6)") {
    OneRowMatrix big({1, 2, 4, 6});
    OneRowMatrix small({1, 4, 6});
    Complex beta{0.7, 0.0};
    for (long long j : {0LL, 1LL, 3LL}) {
        FractionalSeries full = phi_series(big, beta, j, 10);
        FractionalSeries cut = restrict_middle_variables(full);
        FractionalSeries target = phi_series(small, beta, j, 10);
        SeriesDiff d = series_compare_aligned(cut, target);
        CHECK(d.alignable);
        CHECK(d.max_rel < 1e-14);
    }
    // zero series stays zero
    FractionalSeries z;
    z.nvars = 4;
    z.base_exponents.assign(4, {0.0, 0.0});
    z.grading_weights = {0, 1, -1, 1};
    z.truncation = 3;
    CHECK(restrict_middle_variables(z).is_zero());
}

TEST_CASE("evaluate honors stored branches") {
    // constant series
    FractionalSeries one;
    one.nvars = 1;
    one.base_exponents = {{0.0, 0.0}};
    one.grading_weights = {1};
    one.truncation = 0;
    one.insert_term({0}, {1.0, 0.0});
    CHECK(evaluate(one, {SectorPoint(3.7, 2.0)}) == Complex{1.0, 0.0});

    // x^(1/2) at modulus 4, arg pi -> 2i
    FractionalSeries root;
    root.nvars = 1;
    root.base_exponents = {{0.5, 0.0}};
    root.grading_weights = {1};
    root.truncation = 0;
    root.insert_term({0}, {1.0, 0.0});
    Complex v = evaluate(root, {SectorPoint(4.0, kPi)});
    CHECK(std::abs(v - Complex{0.0, 2.0}) < 1e-14);

    // psi (2,3,1/2,0,N=1) at x1=(1,pi), x2=(1e-3,pi)
    FractionalSeries s = psi_series(2, 3, {0.5, 0.0}, 0, 1);
    Complex got = evaluate(s, {SectorPoint(1.0, kPi), SectorPoint(1e-3, kPi)});
    Complex expect = std::exp(Complex(0, kPi / 4.0)) +
                     (21.0 / 128.0) * std::exp(Complex(0, kPi * (0.25 - 3.0))) *
                         std::pow(Complex(1e-3) * std::exp(Complex(0, kPi)), 2);
    CHECK(std::abs(got - expect) < 1e-15);

    // fractional exponent at zero modulus
    CHECK_THROWS_AS(evaluate(root, {SectorPoint(0.0, 0.0)}), ZeroBaseWithFractionalExponent);
}

TEST_CASE("rational-mode psi matches float psi") {
    RationalSeries r = psi_series_t<Rational>(2, 3, Rational(1, 2), 0, 6);
    FractionalSeries f = psi_series(2, 3, {0.5, 0.0}, 0, 6);
    REQUIRE(r.terms.size() == f.terms.size());
    for (const auto& [off, c] : r.terms) {
        const Complex* fc = f.coefficient(off);
        REQUIRE(fc);
        CHECK(std::abs(c.to_double() - fc->real()) <= 1e-12 * std::abs(c.to_double()));
    }
}

TEST_CASE("grading bookkeeping") {
    FractionalSeries s = psi_series(2, 3, {0.3, 0.0}, 1, 7);
    for (const auto& [off, c] : s.terms) {
        (void)c;
        long long m = (off[1] - 1) / 2;
        CHECK(s.grading(off) == m);
        CHECK(s.grading(off) <= s.truncation);
    }
}
