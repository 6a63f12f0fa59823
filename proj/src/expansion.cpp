#include "gkz/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "gkz/complex_gamma.hpp"

namespace gkz {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double factorial_d(long long n) { return std::tgamma(static_cast<double>(n) + 1.0); }

Complex q_of_j(long long a, long long b, Complex beta, long long j) {
    Complex t = (Complex(static_cast<double>(j * b), 0.0) - beta) / static_cast<double>(a);
    return std::exp(Complex(0.0, kTwoPi) * t);
}

} // namespace

SectorInfo sector_info(long long p, long long a, long long b) {
    long long num = 2 * a * p - b;
    if (floor_mod(num, 2 * b) == 0) throw HalfTurn("omega_p^a = -1: empty sector");
    long long ell = ceil_div(num, 2 * b);
    double alpha = kTwoPi * (static_cast<double>(ell) -
                             static_cast<double>(a * p) / static_cast<double>(b));
    return {p, ell, alpha};
}

const CoefficientEntry* CoefficientTable::find(long long k, CoefficientMethod m) const {
    for (const auto& e : entries)
        if (e.k == k && e.method == m) return &e;
    return nullptr;
}

std::map<long long, double> CoefficientTable::discrepancies() const {
    double scale = 0.0;
    for (const auto& e : entries) scale = std::max(scale, std::abs(e.value));
    std::map<long long, double> out;
    for (const auto& e : entries) {
        if (e.method == CoefficientMethod::Quadrature) continue;
        const CoefficientEntry* q = find(e.k, CoefficientMethod::Quadrature);
        if (!q) continue;
        // the k-th comparison is relative to the integral's own magnitude, so
        // exactly-vanishing coefficients compare as equal instead of noise/noise
        double denom = std::max({std::abs(e.value), std::abs(q->value), q->scale, 1e-12 * scale});
        out[e.k] = denom > 0 ? std::abs(e.value - q->value) / denom : 0.0;
    }
    return out;
}

CoefficientTable coefficients_by_quadrature(const OneRowMatrix& A, Complex beta,
                                            const std::vector<SectorPoint>& x_head, const Cycle& c,
                                            long long N, double tol) {
    const int n = A.size();
    if (static_cast<int>(x_head.size()) != n - 1)
        throw ValidationError("SizeMismatch", "x_head must have n-1 points");
    std::vector<long long> head(A.entries().begin(), A.entries().end() - 1);
    const long long an = A.entries().back();

    CoefficientTable table;
    table.A = A.entries();
    table.beta = beta;
    table.x_head = x_head;
    QuadratureOptions opts;
    opts.tol = tol;
    for (long long k = 0; k <= N; ++k) {
        IntegralResult r = integrate_powers(head, beta - static_cast<double>(an * k), x_head, c, opts);
        double kf = factorial_d(k);
        table.entries.push_back(
            {k, r.value / kf, CoefficientMethod::Quadrature, r.error / kf, r.scale / kf, false});
    }
    return table;
}

Complex ik1_closed(long long a, long long b, Complex beta, long long k, const SectorPoint& x1) {
    if (!(x1.argument > kPi / 2.0 && x1.argument < 3.0 * kPi / 2.0))
        throw WrongSector("ik1_closed needs arg x1 in (pi/2, 3pi/2)");
    Complex z = (static_cast<double>(b * k) - beta) / static_cast<double>(a);
    if (near_gamma_pole(z)) throw GammaPole("(bk-beta)/a at a Gamma pole");
    Complex pre = std::exp(Complex(0.0, -kPi) * (beta - static_cast<double>(k * b)) /
                           static_cast<double>(a));
    return pre * x1.pow((beta - static_cast<double>(k * b)) / static_cast<double>(a)) *
           complex_gamma(z) / (static_cast<double>(a) * factorial_d(k));
}

Complex ik2_closed(long long a, long long b, Complex beta, long long k, long long p,
                   const SectorPoint& x1) {
    SectorInfo s = sector_info(p, a, b);
    Complex factor = std::exp(Complex(0.0, -kTwoPi * static_cast<double>(s.ell)) *
                              (beta - static_cast<double>(k * b)) / static_cast<double>(a));
    return ik1_closed(a, b, beta, k, x1) * factor;
}

long long closed_form_kmin(long long b, Complex beta) {
    long long k = 0;
    while (static_cast<double>(b * k) - beta.real() <= 0.0) ++k;
    return k;
}

Complex c_closed(long long a, long long b, Complex beta, long long p, long long k,
                 const SectorPoint& x1) {
    SectorInfo s = sector_info(p, a, b);
    long long j = floor_mod(k, a);
    // prefactor q_j^ell - 1 vanishes exactly when ell (jb - beta)/a is integer
    Complex t = static_cast<double>(s.ell) * (Complex(static_cast<double>(j * b), 0.0) - beta) /
                static_cast<double>(a);
    if (ScalarOps<Complex>::as_integer(t, 1e-12)) return {0.0, 0.0};
    if (static_cast<double>(b * k) - beta.real() <= 0.0)
        throw TooSmallK("Re(bk - beta) <= 0: use quadrature");
    Complex q = q_of_j(a, b, beta, j);
    Complex pre = std::pow(q, static_cast<double>(s.ell)) - 1.0;
    return pre * ik1_closed(a, b, beta, k, x1);
}

Complex lambda_j(long long a, long long b, Complex beta, long long j) {
    Complex t = (beta - static_cast<double>(b * j)) / static_cast<double>(a);
    if (ScalarOps<Complex>::as_integer(t, 1e-12)) throw SinPole("(beta-bj)/a integer");
    Complex top = kPi * std::exp(Complex(0.0, -kPi) * t);
    Complex bottom = static_cast<double>(a) * factorial_d(j) * std::sin(-kPi * t) *
                     complex_gamma(t + 1.0);
    return top / bottom;
}

DecompositionMatrix decomposition_matrix(long long a, long long b, Complex beta,
                                         const std::vector<long long>& ells) {
    if (static_cast<long long>(ells.size()) != a)
        throw ValidationError("BadEll", "need a column indices");
    {
        std::vector<long long> sorted = ells;
        std::sort(sorted.begin(), sorted.end());
        for (long long i = 0; i < a; ++i)
            if (sorted[static_cast<size_t>(i)] != i + 1)
                throw ValidationError("BadEll", "ells must be {1..a}");
    }

    auto bint = ScalarOps<Complex>::as_integer(beta, 1e-13);
    DecompositionMatrix out;
    std::vector<Complex> q(static_cast<size_t>(a));
    // entry q_j^ell - 1 with an exact-phase path for integer beta so the
    // vanishing rows/columns are exactly zero
    auto entry = [&](long long j, long long ell) -> Complex {
        if (bint) {
            long long r = floor_mod((j * b - *bint) * ell, a);
            if (r == 0) return {0.0, 0.0};
            return std::exp(Complex(0.0, kTwoPi * static_cast<double>(r) / static_cast<double>(a))) -
                   1.0;
        }
        return std::pow(q_of_j(a, b, beta, j), static_cast<double>(ell)) - 1.0;
    };
    for (long long j = 0; j < a; ++j) {
        q[static_cast<size_t>(j)] = q_of_j(a, b, beta, j);
        if (bint && floor_mod(j * b - *bint, a) == 0) out.zero_row = static_cast<int>(j);
        std::vector<Complex> row;
        for (long long ell : ells) row.push_back(entry(j, ell));
        out.M.push_back(std::move(row));
    }

    // LU with partial pivoting: determinant and rank
    std::vector<std::vector<Complex>> lu = out.M;
    double scale = 0.0;
    for (const auto& row : lu)
        for (const auto& v : row) scale = std::max(scale, std::abs(v));
    Complex det(1.0, 0.0);
    int rank = 0;
    const long long nA = a;
    for (long long col = 0, row = 0; col < nA && row < nA; ++col) {
        long long piv = -1;
        double best = scale * 1e-10;
        for (long long r = row; r < nA; ++r) {
            double v = std::abs(lu[static_cast<size_t>(r)][static_cast<size_t>(col)]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (piv < 0) {
            det = {0.0, 0.0};
            continue;
        }
        if (piv != row) {
            std::swap(lu[static_cast<size_t>(piv)], lu[static_cast<size_t>(row)]);
            det = -det;
        }
        Complex d = lu[static_cast<size_t>(row)][static_cast<size_t>(col)];
        det *= d;
        for (long long r = row + 1; r < nA; ++r) {
            Complex f = lu[static_cast<size_t>(r)][static_cast<size_t>(col)] / d;
            for (long long cc = col; cc < nA; ++cc)
                lu[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
                    f * lu[static_cast<size_t>(row)][static_cast<size_t>(cc)];
        }
        ++row;
        ++rank;
    }
    out.rank = rank;
    out.det_direct = rank == nA ? det : Complex(0.0, 0.0);

    // product formula for columns (1..a) ascending, times the permutation sign
    Complex formula(1.0, 0.0);
    for (long long i = 0; i < a; ++i) formula *= q[static_cast<size_t>(i)] - 1.0;
    for (long long i = 0; i < a; ++i)
        for (long long j2 = i + 1; j2 < a; ++j2)
            formula *= q[static_cast<size_t>(j2)] - q[static_cast<size_t>(i)];
    {
        std::vector<long long> perm = ells;
        int sign = 1;
        for (size_t i = 0; i < perm.size(); ++i)
            for (size_t j2 = i + 1; j2 < perm.size(); ++j2)
                if (perm[i] > perm[j2]) sign = -sign;
        formula *= static_cast<double>(sign);
    }
    out.det_formula = formula;
    return out;
}

namespace {

// Pick the inbound/outbound ray argument phi = (pi - chi + branch + psi)/a,
// psi in (-pi/2, pi/2), maximizing the worst decay margin: psi = 0 is the
// steepest-descent direction for exp(x1 t^a) on that branch sheet, and the
// extra (argument, power) pairs add their own decay conditions.
double anchored_ray_arg(long long a, double chi, double branch,
                        const std::vector<std::pair<double, long long>>& extra_decay) {
    const int steps = 721;
    double best_psi = 0.0, best = -HUGE_VAL;
    for (int i = 0; i < steps; ++i) {
        double psi = -kPi / 2.0 + kPi * (i + 0.5) / steps;
        double phi = (kPi - chi + branch + psi) / static_cast<double>(a);
        double margin = std::cos(psi); // decay rate of exp(x1 t^a) itself
        for (const auto& [argx, pw] : extra_decay)
            margin = std::min(margin, -std::cos(argx + static_cast<double>(pw) * phi));
        margin -= 1e-6 * std::abs(psi); // prefer the descent center on ties
        if (margin > best) {
            best = margin;
            best_psi = psi;
        }
    }
    if (best <= 1e-9)
        throw NotRapidDecay("no admissible ray direction for these points");
    return (kPi - chi + branch + best_psi) / static_cast<double>(a);
}

} // namespace

AnchoredCycle closed_form_cycle(long long a, long long b, long long p, const SectorPoint& x1,
                                double eps,
                                const std::vector<std::pair<double, long long>>& extra_decay) {
    SectorInfo s = sector_info(p, a, b);
    const double chi = x1.argument;
    // Independent anchoring of the two rays: the inbound ray carries the
    // branch of C_p's real half line (0 turns), the outbound ray the branch
    // 2 pi ell reached after the arc; deforming each ray inside its half
    // plane of decay keeps the integral equal to I_{C_p} by Cauchy.
    double phi1 = anchored_ray_arg(a, chi, 0.0, extra_decay);
    double phi2 = anchored_ray_arg(a, chi, kTwoPi * static_cast<double>(s.ell), extra_decay);
    CycleTerm term;
    term.weight = Complex(1.0, 0.0);
    term.segments = {PathSegment::ray_in(eps, phi1), PathSegment::arc(eps, phi1, phi2),
                     PathSegment::ray_out(eps, phi2)};
    Cycle c;
    c.terms.push_back(std::move(term));
    return {c, phi1};
}

MuRecovery mu_recovery(long long a, long long b, Complex beta, long long p, const SectorPoint& x1,
                       long long N, double tol_spread) {
    AnchoredCycle ac = closed_form_cycle(a, b, p, x1, 1.0);
    OneRowMatrix A({a, b});
    CoefficientTable table = coefficients_by_quadrature(A, beta, {x1}, ac.cycle, N);

    MuRecovery out;
    out.theta = ac.theta;
    std::vector<std::vector<Complex>> ratios(static_cast<size_t>(a));
    for (long long j = 0; j < a; ++j) {
        Complex z = (beta - static_cast<double>(j * b)) / static_cast<double>(a);
        for (long long m = 0; a * m + j <= N; ++m) {
            const CoefficientEntry* e = table.find(a * m + j, CoefficientMethod::Quadrature);
            if (!e) continue;
            Complex psi = pochhammer(z, b * m) /
                          pochhammer(Complex(static_cast<double>(a * m + j), 0.0), a * m);
            Complex monomial = x1.pow(z - static_cast<double>(b * m));
            ratios[static_cast<size_t>(j)].push_back(e->value / (psi * monomial));
        }
    }
    // global scale to recognize vanishing coefficients
    double scale = 0.0;
    for (const auto& rj : ratios)
        for (const auto& r : rj) scale = std::max(scale, std::abs(r));
    for (long long j = 0; j < a; ++j) {
        const auto& rj = ratios[static_cast<size_t>(j)];
        if (rj.empty()) throw ValidationError("BadTruncation", "N too small for mu recovery");
        Complex mean(0.0, 0.0);
        for (const auto& r : rj) mean += r;
        mean /= static_cast<double>(rj.size());
        double maxabs = 0.0, dev = 0.0;
        for (const auto& r : rj) {
            maxabs = std::max(maxabs, std::abs(r));
            dev = std::max(dev, std::abs(r - mean));
        }
        out.max_ratio.push_back(maxabs);
        if (maxabs <= 1e-7 * scale) {
            out.mu.push_back({0.0, 0.0});
            out.spread.push_back(0.0);
            out.flagged_zero.push_back(true);
            continue;
        }
        double spread = dev / std::abs(mean);
        if (spread > tol_spread)
            throw InconsistentRatios("mu ratios depend on m beyond tolerance");
        out.mu.push_back(mean);
        out.spread.push_back(spread);
        out.flagged_zero.push_back(false);
    }
    return out;
}

RemainderFit remainder_slope(const OneRowMatrix& A, Complex beta,
                             const std::vector<SectorPoint>& x_head, const Cycle& c, long long N,
                             const std::vector<SectorPoint>& xn_points, double tol) {
    CoefficientTable table = coefficients_by_quadrature(A, beta, x_head, c, N, tol);
    QuadratureOptions opts;
    opts.tol = tol;
    std::vector<double> lx, lr;
    for (const SectorPoint& xn : xn_points) {
        std::vector<SectorPoint> x = x_head;
        x.push_back(xn);
        IntegralResult full = integrate_powers(A.entries(), beta, x, c, opts);
        Complex partial(0.0, 0.0);
        double err = full.error;
        for (const auto& e : table.entries) {
            partial += e.value * xn.pow(Complex(static_cast<double>(e.k), 0.0));
            err += e.error * std::pow(xn.modulus, static_cast<double>(e.k));
        }
        double rem = std::abs(full.value - partial);
        if (rem <= 0 || err > 0.1 * rem) continue;
        lx.push_back(std::log(xn.modulus));
        lr.push_back(std::log(rem));
    }
    if (lx.size() < 3)
        throw QuadratureNoConvergence("too few reliable remainder points for the slope fit");
    double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += lr[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * lr[i];
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return {slope, static_cast<int>(lx.size())};
}

double gevrey_order_estimate(const CoefficientTable& table) {
    std::vector<std::pair<long long, double>> pts; // (k, log|c_k|)
    for (const auto& e : table.entries) {
        if (e.method == CoefficientMethod::Quadrature) continue;
        if (e.k < 10 || e.k > 60) continue;
        double av = std::abs(e.value);
        if (av <= 0) continue;
        pts.push_back({e.k, std::log(av)});
    }
    if (pts.size() < 40)
        throw ValidationError("TooFewCoefficients", "gevrey fit needs >= 40 closed-form entries");
    // log|c_k| + log k! = s log k! + k log K + C
    double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    double rhs[3] = {0, 0, 0};
    for (const auto& [k, logc] : pts) {
        double f = std::lgamma(static_cast<double>(k) + 1.0);
        double row[3] = {f, static_cast<double>(k), 1.0};
        double y = logc + f;
        for (int i = 0; i < 3; ++i) {
            rhs[i] += row[i] * y;
            for (int j = 0; j < 3; ++j) m[i][j] += row[i] * row[j];
        }
    }
    // gaussian elimination on the 3x3 system
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        std::swap(m[col], m[piv]);
        std::swap(rhs[col], rhs[piv]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            double f = m[r][col] / m[col][col];
            for (int cc = 0; cc < 3; ++cc) m[r][cc] -= f * m[col][cc];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs[0] / m[0][0];
}

double derivative_relation_check(long long a, long long b, Complex beta, long long j, long long q,
                                 const SectorPoint& x1) {
    Complex z = (beta - static_cast<double>(b * j)) / static_cast<double>(a);
    Complex gj = (static_cast<double>(b * j) - beta) / static_cast<double>(a);
    if (near_gamma_pole(gj)) throw GammaPole("closed form hits a Gamma pole");
    long long k = q * a + j;
    // lhs: (qa+j)! c_{qa+j} / prefactor = e^{-i pi (beta-kb)/a} Gamma((bk-beta)/a) x1^{(beta-kb)/a} / a
    Complex lhs = std::exp(Complex(0.0, -kPi) * (beta - static_cast<double>(k * b)) /
                           static_cast<double>(a)) *
                  complex_gamma((static_cast<double>(b * k) - beta) / static_cast<double>(a)) *
                  x1.pow((beta - static_cast<double>(k * b)) / static_cast<double>(a));
    // rhs: j! d^{qb}/dx^{qb} of (same at k = j): falling factorial on the power
    Complex rhs = std::exp(Complex(0.0, -kPi) * (beta - static_cast<double>(j * b)) /
                           static_cast<double>(a)) *
                  complex_gamma(gj) * pochhammer(z, q * b) *
                  x1.pow(z - static_cast<double>(q * b));
    return std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
}

bool is_in_NA(const std::vector<long long>& entries, long long beta) {
    if (beta < 0) return false;
    std::vector<char> reach(static_cast<size_t>(beta) + 1, 0);
    reach[0] = 1;
    for (long long a : entries)
        for (long long v = a; v <= beta; ++v)
            if (reach[static_cast<size_t>(v - a)]) reach[static_cast<size_t>(v)] = 1;
    return reach[static_cast<size_t>(beta)] != 0;
}

namespace {

// t^d coefficients of exp(sum_j x_j t^{p_j}) up to degree D
std::vector<Complex> exp_poly_coefficients(const std::vector<long long>& powers,
                                           const std::vector<SectorPoint>& x, long long D) {
    std::vector<Complex> e(static_cast<size_t>(D) + 1, Complex(0.0, 0.0));
    e[0] = {1.0, 0.0};
    for (size_t j = 0; j < powers.size(); ++j) {
        if (x[j].is_zero()) continue;
        const long long pw = powers[j];
        std::vector<Complex> out(e.size(), Complex(0.0, 0.0));
        Complex xj = x[j].value();
        for (long long d = 0; d <= D; ++d) {
            if (e[static_cast<size_t>(d)] == Complex(0.0, 0.0)) continue;
            Complex mult(1.0, 0.0);
            for (long long i = 0; d + pw * i <= D; ++i) {
                out[static_cast<size_t>(d + pw * i)] += e[static_cast<size_t>(d)] * mult;
                mult *= xj / static_cast<double>(i + 1);
            }
        }
        e = std::move(out);
    }
    return e;
}

// J-type integral sum_{d > beta} e_d T^{d-beta}/(d-beta)
//   + int_{T}^{inf e^{i theta}} t^{-beta-1} exp(...) dt
//   + sum_{A l <= beta} x^l / l! T^{A l - beta}/(A l - beta),   T = e^{i theta}
// for integer beta with no representation A l = beta.
Complex j_beta_core(const std::vector<long long>& powers, long long beta,
                    const std::vector<SectorPoint>& x, double theta) {
    const double t_sw = 1.0;
    SectorPoint T(t_sw, theta);

    const long long D = std::max(beta, 0LL) + 400;
    std::vector<Complex> e = exp_poly_coefficients(powers, x, D);
    Complex series(0.0, 0.0);
    int quiet = 0;
    for (long long d = std::max(beta + 1, 0LL); d <= D; ++d) {
        Complex ed = e[static_cast<size_t>(d)];
        if (ed == Complex(0.0, 0.0)) continue;
        Complex term = ed * T.pow(Complex(static_cast<double>(d - beta), 0.0)) /
                       static_cast<double>(d - beta);
        series += term;
        if (std::abs(term) < 1e-19 * (std::abs(series) + 1e-30)) {
            if (++quiet > 8) break;
        } else {
            quiet = 0;
        }
    }

    Cycle ray;
    ray.terms.push_back({Complex(1.0, 0.0), {PathSegment::ray_out(t_sw, theta)}});
    IntegralResult tail = integrate_powers(powers, Complex(static_cast<double>(beta), 0.0), x, ray);

    Complex correction(0.0, 0.0);
    if (beta >= 0) {
        std::vector<long long> ell(powers.size(), 0);
        std::function<void(size_t, long long)> rec = [&](size_t idx, long long rem) {
            if (idx == powers.size()) {
                long long deg = beta - rem; // A.l
                if (deg == beta)
                    throw BetaInNA("regularized integral undefined: beta in NA");
                Complex term(1.0, 0.0);
                for (size_t i = 0; i < powers.size(); ++i)
                    term *= x[i].pow(Complex(static_cast<double>(ell[i]), 0.0)) /
                            factorial_d(ell[i]);
                correction += term * T.pow(Complex(static_cast<double>(deg - beta), 0.0)) /
                              static_cast<double>(deg - beta);
                return;
            }
            for (long long v = 0; v * powers[idx] <= rem; ++v) {
                ell[idx] = v;
                rec(idx + 1, rem - v * powers[idx]);
            }
            ell[idx] = 0;
        };
        rec(0, beta);
    }
    return series + tail.value + correction;
}

} // namespace

Complex j_beta_integral(const OneRowMatrix& A, long long beta, const std::vector<SectorPoint>& x,
                        double theta) {
    if (is_in_NA(A.entries(), beta)) throw BetaInNA("j_beta_integral needs beta in Z \\ NA");
    return j_beta_core(A.entries(), beta, x, theta);
}

Complex j_beta_coefficient_quadrature(long long a, long long b, long long beta, long long k,
                                      const SectorPoint& x1, double theta) {
    long long shifted = beta - b * k;
    if (shifted >= 0 && shifted % a == 0)
        throw BetaInNA("coefficient integral undefined: beta - bk in aN");
    return j_beta_core({a}, shifted, {x1}, theta) / factorial_d(k);
}

Complex j_beta_coefficient_closed(long long a, long long b, long long beta, long long k,
                                  const SectorPoint& x1) {
    if (b * k <= beta) throw TooSmallK("closed regularized coefficient needs bk > beta");
    double z = static_cast<double>(b * k - beta) / static_cast<double>(a);
    Complex pre = std::exp(Complex(0.0, -kPi) * static_cast<double>(beta - b * k) /
                           static_cast<double>(a));
    return pre * complex_gamma(Complex(z, 0.0)) *
           x1.pow(Complex(static_cast<double>(beta - k * b) / static_cast<double>(a), 0.0)) /
           (static_cast<double>(a) * factorial_d(k));
}

namespace {

// smooth bump: 1 on [0,1], 0 on [2,inf)
double cutoff_bump(double t) {
    if (t <= 1.0) return 1.0;
    if (t >= 2.0) return 0.0;
    auto g = [](double u) { return u > 0 ? std::exp(-1.0 / u) : 0.0; };
    return g(2.0 - t) / (g(2.0 - t) + g(t - 1.0));
}

} // namespace

CutoffCoefficient j_phi_coefficient(const OneRowMatrix& A, long long beta, long long k,
                                    const std::vector<SectorPoint>& x_head) {
    if (!is_in_NA(A.entries(), beta))
        throw ValidationError("BetaNotInNA", "j_phi_coefficient needs beta in NA");
    if (beta < 1)
        throw ValidationError("BetaTooSmall", "cutoff integral needs beta >= 1");
    const int n = A.size();
    if (static_cast<int>(x_head.size()) != n - 1)
        throw ValidationError("SizeMismatch", "x_head must have n-1 points");
    std::vector<long long> head(A.entries().begin(), A.entries().end() - 1);
    const long long an = A.entries().back();

    if (an * k > beta) {
        // pure convergent integral: same as the regularized core with the
        // shifted (negative) beta and empty Taylor correction
        return {j_beta_core(head, beta - an * k, x_head, 0.0) / factorial_d(k), false};
    }

    const long long bprime = beta - an * k; // >= 0
    // series part on [0,1]
    const long long D = bprime + 400;
    std::vector<Complex> e = exp_poly_coefficients(head, x_head, D);
    Complex series(0.0, 0.0);
    int quiet = 0;
    for (long long d = bprime + 1; d <= D; ++d) {
        if (e[static_cast<size_t>(d)] == Complex(0.0, 0.0)) continue;
        Complex term = e[static_cast<size_t>(d)] / static_cast<double>(d - bprime);
        series += term;
        if (std::abs(term) < 1e-19 * (std::abs(series) + 1e-30)) {
            if (++quiet > 8) break;
        } else {
            quiet = 0;
        }
    }

    // enumerate head multi-indices with A_head . l <= beta - an k
    struct HeadTerm {
        Complex coeff;
        long long degree;
    };
    std::vector<HeadTerm> pterms;
    {
        std::vector<long long> ell(head.size(), 0);
        std::function<void(size_t, long long)> rec = [&](size_t idx, long long rem) {
            if (idx == head.size()) {
                Complex c(1.0, 0.0);
                long long deg = 0;
                for (size_t i = 0; i < head.size(); ++i) {
                    c *= x_head[i].pow(Complex(static_cast<double>(ell[i]), 0.0)) /
                         factorial_d(ell[i]);
                    deg += head[i] * ell[i];
                }
                pterms.push_back({c, deg + an * k});
                return;
            }
            for (long long v = 0; v * head[idx] <= rem; ++v) {
                ell[idx] = v;
                rec(idx + 1, rem - v * head[idx]);
            }
            ell[idx] = 0;
        };
        rec(0, bprime);
    }

    // bump region [1,2]
    auto bump_integrand = [&](double t) -> Complex {
        Complex expo(0.0, 0.0);
        for (size_t i = 0; i < head.size(); ++i)
            expo += x_head[i].value() * std::pow(t, static_cast<double>(head[i]));
        Complex val = std::pow(t, static_cast<double>(an * k - beta - 1)) * std::exp(expo);
        double tphi = t * cutoff_bump(t);
        Complex sub(0.0, 0.0);
        for (const auto& pt : pterms)
            sub += pt.coeff * std::pow(tphi, static_cast<double>(pt.degree));
        return val - std::pow(t, static_cast<double>(-beta - 1)) * sub;
    };
    std::size_t evals = 0;
    (void)evals;
    IntegralResult bump = adaptive_quadrature(bump_integrand, 1.0, 2.0, 1e-14);

    // tail [2, inf): the cutoff kills every positive-degree subtraction term;
    // the l = 0, k = 0 constant survives
    Cycle ray;
    ray.terms.push_back({Complex(1.0, 0.0), {PathSegment::ray_out(2.0, 0.0)}});
    IntegralResult tail = integrate_powers(head, Complex(static_cast<double>(bprime), 0.0), x_head,
                                           ray);
    Complex constant_part(0.0, 0.0);
    if (k == 0)
        constant_part = -std::pow(2.0, static_cast<double>(-beta)) / static_cast<double>(beta);

    Complex total = series + bump.value + tail.value + constant_part;
    return {total / factorial_d(k), true};
}

CoefficientTable expansion_table(long long a, long long b, Complex beta, long long p,
                                 const SectorPoint& x1, long long N) {
    OneRowMatrix A({a, b});
    auto bint = ScalarOps<Complex>::as_integer(beta, 1e-13);
    CoefficientTable table;
    if (bint && !is_in_NA(A.entries(), *bint)) {
        // regularized mode: J_beta along the half line
        table.A = A.entries();
        table.beta = beta;
        table.x_head = {x1};
        for (long long k = 0; k <= N; ++k) {
            Complex quad = j_beta_coefficient_quadrature(a, b, *bint, k, x1);
            table.entries.push_back({k, quad, CoefficientMethod::Quadrature, 0.0, 0.0, false});
            if (b * k > *bint) {
                Complex closed = j_beta_coefficient_closed(a, b, *bint, k, x1);
                table.entries.push_back(
                    {k, closed, CoefficientMethod::RegularizedClosed, 0.0, 0.0, false});
            }
        }
        return table;
    }
    AnchoredCycle ac = closed_form_cycle(a, b, p, x1, 1.0);
    table = coefficients_by_quadrature(A, beta, {x1}, ac.cycle, N);
    table.p = p;
    table.theta = ac.theta;
    for (long long k = closed_form_kmin(b, beta); k <= N; ++k)
        table.entries.push_back({k, c_closed(a, b, beta, p, k, x1), CoefficientMethod::ClosedForm,
                                 0.0, 0.0, false});
    std::sort(table.entries.begin(), table.entries.end(), [](const auto& l, const auto& r) {
        return l.k != r.k ? l.k < r.k : static_cast<int>(l.method) < static_cast<int>(r.method);
    });
    return table;
}

} // namespace gkz
