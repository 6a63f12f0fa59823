#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gkz/contour.hpp"
#include "gkz/lattice.hpp"
#include "gkz/scalar.hpp"
#include "gkz/sector_point.hpp"

namespace gkz {

// ell and alpha of the determination bookkeeping for the cycle C_p:
// ell = ceil(ap/b - 1/2), alpha = 2 pi (ell - ap/b), |alpha| < pi.
// HalfTurn when omega_p^a = -1 (ap/b - 1/2 integer): the sector is empty.
struct SectorInfo {
    long long p = 0;
    long long ell = 0;
    double alpha = 0.0;
};
SectorInfo sector_info(long long p, long long a, long long b);

enum class CoefficientMethod { Quadrature, ClosedForm, RegularizedClosed };

struct CoefficientEntry {
    long long k = 0;
    Complex value{0.0, 0.0};
    CoefficientMethod method = CoefficientMethod::Quadrature;
    double error = 0.0;
    double scale = 0.0; // magnitude of the integral behind the value
    bool cutoff_dependent = false;
};

struct CoefficientTable {
    std::vector<long long> A;
    Complex beta{0.0, 0.0};
    long long p = -1; // -1: cycle not of C_p type
    double theta = 0.0;
    std::vector<SectorPoint> x_head;
    std::vector<CoefficientEntry> entries; // sorted by (k, method)
    std::optional<double> gevrey_s;
    std::optional<double> remainder_slope_value;

    const CoefficientEntry* find(long long k, CoefficientMethod m) const;
    // relative discrepancy per k where both quadrature and a closed method exist
    std::map<long long, double> discrepancies() const;
};

// c_k = (1/k!) int t^{-beta-1+a_n k} exp(head(x,t)) dt over the cycle, for
// k = 0..N. x_head holds the first n-1 points; the decay precondition is the
// head polynomial's, checked by the quadrature itself.
CoefficientTable coefficients_by_quadrature(const OneRowMatrix& A, Complex beta,
                                            const std::vector<SectorPoint>& x_head, const Cycle& c,
                                            long long N, double tol = 1e-12);

// I_{k,1}(x1) = (1/(a k!)) e^{-i pi (beta-kb)/a} x1^{(beta-kb)/a} Gamma((bk-beta)/a),
// valid for arg x1 in (pi/2, 3pi/2) with the stored branch.
Complex ik1_closed(long long a, long long b, Complex beta, long long k, const SectorPoint& x1);

// I_{k,2} = I_{k,1} * e^{-2 i pi ell (beta-kb)/a} with ell = ell(p).
Complex ik2_closed(long long a, long long b, Complex beta, long long k, long long p,
                   const SectorPoint& x1);

// c_{am+j}(x1) = (q_j^ell - 1) I_{am+j,1}(x1), q_j = e^{2 i pi (jb-beta)/a};
// exactly 0 when (jb-beta)/a is an integer (the prefactor vanishes).
// Requires Re(bk - beta) > 0 (TooSmallK otherwise: use quadrature).
Complex c_closed(long long a, long long b, Complex beta, long long p, long long k,
                 const SectorPoint& x1);

// smallest k >= 0 with Re(bk - beta) > 0
long long closed_form_kmin(long long b, Complex beta);

// lambda_j = pi e^{-i pi (beta-jb)/a} / (a j! sin(pi (bj-beta)/a) Gamma((beta-bj)/a + 1))
Complex lambda_j(long long a, long long b, Complex beta, long long j);

struct DecompositionMatrix {
    std::vector<std::vector<Complex>> M; // rows j = 0..a-1, columns = ells order
    Complex det_direct{0.0, 0.0};
    Complex det_formula{0.0, 0.0};
    int rank = 0;
    int zero_row = -1; // j_0 when beta integer, else -1
};
// ells must be the values {1, ..., a} in some order; the determinant formula
// prod (q_i - 1) prod_{i<j} (q_j - q_i) carries the permutation sign of ells.
DecompositionMatrix decomposition_matrix(long long a, long long b, Complex beta,
                                         const std::vector<long long>& ells);

// Rotated C_p matching the closed-form determinations at x1: theta is chosen
// (deterministic grid search) so that both rays decay for exp(x1 t^a) and the
// branch stays anchored to ell(p). extra_decay supplies (argument, power)
// pairs of further variables that must decay on both rays.
struct AnchoredCycle {
    Cycle cycle;
    double theta = 0.0;
};
AnchoredCycle closed_form_cycle(long long a, long long b, long long p, const SectorPoint& x1,
                                double eps,
                                const std::vector<std::pair<double, long long>>& extra_decay = {});

struct MuRecovery {
    std::vector<Complex> mu;      // per j = 0..a-1
    std::vector<double> spread;   // relative m-dependence per j
    std::vector<bool> flagged_zero;
    std::vector<double> max_ratio; // largest |ratio| observed per j
    double theta = 0.0;
};
// Recover the coefficients mu_j of I_{C_p} = sum_j mu_j psi^(j) from the
// quadrature table: group k = am+j, divide by the psi coefficient times
// x1^{(beta-jb)/a - bm}, average over m. InconsistentRatios when the ratios
// move more than tol_spread relative (scaled zeros exempt).
MuRecovery mu_recovery(long long a, long long b, Complex beta, long long p, const SectorPoint& x1,
                       long long N, double tol_spread = 1e-6);

// Least-squares slope of log |I - S_N| against log |x_n| along a sequence of
// x_n moduli; points whose propagated quadrature error exceeds 10% of the
// measured remainder are dropped.
struct RemainderFit {
    double slope = 0.0;
    int points_used = 0;
};
RemainderFit remainder_slope(const OneRowMatrix& A, Complex beta,
                             const std::vector<SectorPoint>& x_head, const Cycle& c, long long N,
                             const std::vector<SectorPoint>& xn_points, double tol = 1e-12);

// Fit s in |c_k| ~ (k!)^(s-1) K^k over k in [10, 60]; needs at least 40
// closed-form entries in the table.
double gevrey_order_estimate(const CoefficientTable& table);

// Relative error of (qa+j)! c_{qa+j} = j! d^{qb} c_j / dx1^{qb}, both sides
// through the I_{k,1} closed forms (the derivative acts on the power of x1).
double derivative_relation_check(long long a, long long b, Complex beta, long long j, long long q,
                                 const SectorPoint& x1);

// Membership of an integer in the numerical semigroup N a_1 + ... + N a_n.
bool is_in_NA(const std::vector<long long>& entries, long long beta);

// J_beta = int_{e^{i theta}[0,inf)} t^{-beta-1} (exp(sum x_j t^{a_j}) - P_beta) dt
// for integer beta not in NA; P_beta is the Taylor polynomial of t-degree <= beta.
Complex j_beta_integral(const OneRowMatrix& A, long long beta, const std::vector<SectorPoint>& x,
                        double theta);

// Coefficient of x_n^k in the expansion of J_beta, by quadrature of the
// regularized 1-d integral (valid for every k) ...
Complex j_beta_coefficient_quadrature(long long a, long long b, long long beta, long long k,
                                      const SectorPoint& x1, double theta = 0.0);
// ... and by the closed form (1/(a k!)) e^{-i pi (beta-bk)/a} Gamma((bk-beta)/a)
// x1^{(beta-kb)/a}, valid once bk > beta (TooSmallK otherwise).
Complex j_beta_coefficient_closed(long long a, long long b, long long beta, long long k,
                                  const SectorPoint& x1);

// Coefficients of the cutoff integral J_{phi,beta} for beta in NA: for
// a_n k > beta the closed form above; for small k a value depending on the
// canonical bump (1 on [0,1], 0 on [2,inf)), flagged as such.
struct CutoffCoefficient {
    Complex value{0.0, 0.0};
    bool cutoff_dependent = false;
};
CutoffCoefficient j_phi_coefficient(const OneRowMatrix& A, long long beta, long long k,
                                    const std::vector<SectorPoint>& x_head);

// Full expansion table for A = (a,b): quadrature entries for k = 0..N plus
// closed-form (or regularized closed-form when beta in Z \ NA) entries from
// k_min on; p selects the cycle, theta recorded in the table.
CoefficientTable expansion_table(long long a, long long b, Complex beta, long long p,
                                 const SectorPoint& x1, long long N);

} // namespace gkz
