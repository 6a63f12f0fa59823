#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "gkz/errors.hpp"
#include "gkz/scalar.hpp"
#include "gkz/sector_point.hpp"

namespace gkz {

// One piece of an integration path. Rays carry a fixed continuous argument;
// arcs sweep the argument between two values at fixed radius. HalfLineFromZero
// is reserved for the regularized integrals of the expansion module.
struct PathSegment {
    enum class Kind { RayOut, RayIn, Arc, HalfLineFromZero };
    Kind kind = Kind::RayOut;
    double radius = 1.0;   // start distance for rays, radius for arcs
    double arg = 0.0;      // carried argument (rays, half line)
    double arg_from = 0.0; // arcs
    double arg_to = 0.0;

    static PathSegment ray_out(double eps, double theta) {
        return {Kind::RayOut, eps, theta, 0, 0};
    }
    static PathSegment ray_in(double eps, double theta) { return {Kind::RayIn, eps, theta, 0, 0}; }
    static PathSegment arc(double eps, double from, double to) {
        return {Kind::Arc, eps, 0, from, to};
    }
    static PathSegment half_line(double theta) { return {Kind::HalfLineFromZero, 0, theta, 0, 0}; }
};

struct CycleTerm {
    Complex weight{1.0, 0.0};
    std::vector<PathSegment> segments; // continuous end to end
};

struct Cycle {
    std::vector<CycleTerm> terms;
};

// Endpoint continuity of every path (modulus and carried argument).
bool cycle_is_continuous(const Cycle& c, double tol = 1e-9);

// The cycle C_p: the half line [eps, inf) traversed inward with
// argument 0, the arc of radius eps from 0 to 2 pi p / b, and the half line
// outward along exp(2 i pi p / b) [eps, inf) carrying argument 2 pi p / b.
Cycle cycle_Cp(long long p, long long b, double eps);

// Every direction angle and carried argument shifted by theta.
Cycle rotate_cycle(const Cycle& c, double theta);

// t -> omega^{-nu} t^{1/k} pointwise using the carried argument
// (arg t^{1/k} = arg t / k); eps becomes eps^{1/k}.
Cycle root_cycle(const Cycle& c, long long k, long long nu);

struct IntegralResult {
    Complex value{0.0, 0.0};
    double error = 0.0;
    double scale = 0.0; // L1 magnitude estimate used for the error budget
    std::size_t evaluations = 0;
};

struct QuadratureOptions {
    double tol = 1e-12;  // relative to the integral's magnitude scale
    int max_depth = 48;
    int min_depth = 0;   // force this many initial bisections (diagnostics)
};

// sum_terms weight * int t^{-beta-1} exp(sum_j x_j t^{powers_j}) dt along the
// cycle, t^{-beta-1} evaluated through the carried argument. Throws
// NotRapidDecay unless, on every unbounded ray, the dominant term (largest
// power with x != 0) has Re(x exp(i power arg)) < -1e-9 |x|.
IntegralResult integrate_powers(const std::vector<long long>& powers, Complex beta,
                                const std::vector<SectorPoint>& x, const Cycle& c,
                                const QuadratureOptions& opts = {});

class OneRowMatrix;
IntegralResult integrate(const OneRowMatrix& A, Complex beta, const std::vector<SectorPoint>& x,
                         const Cycle& c, double tol = 1e-12);

// Integral along C_b. For integer beta the two rays cancel exactly (the
// integrand is uniform) and the closed circle of radius eps is integrated
// instead; for beta in N the combinatorial residue value
//   2 pi i sum_{A l = beta} x^l / l!
// is returned after a cross-check against that quadrature (tol 1e-8).
struct CircleIntegral {
    Complex value{0.0, 0.0};
    bool combinatorial = false;
    double crosscheck_rel = 0.0;
};
CircleIntegral circle_integral(const OneRowMatrix& A, Complex beta,
                               const std::vector<SectorPoint>& x, double eps);

// |I(eps1) - I(eps2)| / |I(eps1)| over C_p.
double epsilon_independence_check(const OneRowMatrix& A, Complex beta,
                                  const std::vector<SectorPoint>& x, long long p, double eps1,
                                  double eps2);

// Generic adaptive Gauss-Legendre quadrature of a smooth complex integrand
// over [u0, u1]; abs_tol is an absolute error budget.
IntegralResult adaptive_quadrature(const std::function<Complex(double)>& f, double u0, double u1,
                                   double abs_tol, const QuadratureOptions& opts = {});

} // namespace gkz
