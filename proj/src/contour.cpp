#include "gkz/contour.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "gkz/lattice.hpp"

namespace gkz {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// 32-point Gauss-Legendre nodes/weights on [-1, 1], generated once by Newton
// iteration on P_32.
struct GaussLegendre32 {
    std::array<double, 32> x{};
    std::array<double, 32> w{};
    GaussLegendre32() {
        const int n = 32;
        for (int i = 0; i < n; ++i) {
            double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            x[static_cast<size_t>(n - 1 - i)] = t;
            w[static_cast<size_t>(n - 1 - i)] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const GaussLegendre32& gl32() {
    static const GaussLegendre32 table;
    return table;
}

struct Panel {
    Complex value{0.0, 0.0};
    double l1 = 0.0; // integral of |f|, same nodes
};

Panel gl_panel(const std::function<Complex(double)>& f, double u0, double u1, std::size_t& evals) {
    const auto& g = gl32();
    const double c = 0.5 * (u0 + u1), h = 0.5 * (u1 - u0);
    Panel p;
    for (int i = 0; i < 32; ++i) {
        Complex v = f(c + h * g.x[static_cast<size_t>(i)]);
        p.value += g.w[static_cast<size_t>(i)] * v;
        p.l1 += g.w[static_cast<size_t>(i)] * std::abs(v);
    }
    evals += 32;
    p.value *= h;
    p.l1 *= std::abs(h);
    return p;
}

struct AdaptState {
    const std::function<Complex(double)>* f;
    double abs_tol;
    int max_depth;
    int min_depth;
    Complex total{0.0, 0.0};
    double err = 0.0;
    std::size_t evals = 0;
};

void adapt_rec(AdaptState& st, double u0, double u1, const Panel& whole, int depth) {
    double mid = 0.5 * (u0 + u1);
    Panel left = gl_panel(*st.f, u0, mid, st.evals);
    Panel right = gl_panel(*st.f, mid, u1, st.evals);
    Complex fine = left.value + right.value;
    double diff = std::abs(fine - whole.value);
    double budget = st.abs_tol * std::pow(0.5, depth + 1);
    double noise = 5e-16 * (left.l1 + right.l1); // double roundoff floor
    if (depth >= st.min_depth && (diff <= std::max(budget, noise) || depth >= st.max_depth)) {
        if (depth >= st.max_depth && diff > std::max(budget, noise) * 64)
            throw QuadratureNoConvergence("adaptive refinement hit depth limit");
        st.total += fine;
        st.err += diff;
        return;
    }
    adapt_rec(st, u0, mid, left, depth + 1);
    adapt_rec(st, mid, u1, right, depth + 1);
}

} // namespace

IntegralResult adaptive_quadrature(const std::function<Complex(double)>& f, double u0, double u1,
                                   double abs_tol, const QuadratureOptions& opts) {
    AdaptState st;
    st.f = &f;
    st.abs_tol = std::max(abs_tol, 1e-300);
    st.max_depth = opts.max_depth;
    st.min_depth = opts.min_depth;
    Panel whole = gl_panel(f, u0, u1, st.evals);
    adapt_rec(st, u0, u1, whole, 0);
    IntegralResult out;
    out.value = st.total;
    out.error = st.err;
    out.evaluations = st.evals;
    return out;
}

bool cycle_is_continuous(const Cycle& c, double tol) {
    for (const auto& term : c.terms) {
        for (size_t i = 0; i + 1 < term.segments.size(); ++i) {
            const auto& s0 = term.segments[i];
            const auto& s1 = term.segments[i + 1];
            auto endpoint = [&](const PathSegment& s, bool end) -> std::pair<double, double> {
                switch (s.kind) {
                    case PathSegment::Kind::RayOut:
                        return end ? std::pair{HUGE_VAL, s.arg} : std::pair{s.radius, s.arg};
                    case PathSegment::Kind::RayIn:
                        return end ? std::pair{s.radius, s.arg} : std::pair{HUGE_VAL, s.arg};
                    case PathSegment::Kind::Arc:
                        return end ? std::pair{s.radius, s.arg_to} : std::pair{s.radius, s.arg_from};
                    case PathSegment::Kind::HalfLineFromZero:
                        return end ? std::pair{HUGE_VAL, s.arg} : std::pair{0.0, s.arg};
                }
                return {0.0, 0.0};
            };
            auto [m0, a0] = endpoint(s0, true);
            auto [m1, a1] = endpoint(s1, false);
            if (std::isinf(m0) || std::isinf(m1)) return false;
            if (std::abs(m0 - m1) > tol || std::abs(a0 - a1) > tol) return false;
        }
    }
    return true;
}

Cycle cycle_Cp(long long p, long long b, double eps) {
    if (p < 1 || p > b) throw BadP("cycle_Cp needs 1 <= p <= b");
    if (eps <= 0) throw ValidationError("BadEps", "cycle_Cp needs eps > 0");
    double target = kTwoPi * static_cast<double>(p) / static_cast<double>(b);
    CycleTerm term;
    term.weight = Complex(1.0, 0.0);
    term.segments = {PathSegment::ray_in(eps, 0.0), PathSegment::arc(eps, 0.0, target),
                     PathSegment::ray_out(eps, target)};
    Cycle c;
    c.terms.push_back(std::move(term));
    return c;
}

Cycle rotate_cycle(const Cycle& c, double theta) {
    Cycle out = c;
    for (auto& term : out.terms) {
        for (auto& s : term.segments) {
            s.arg += theta;
            s.arg_from += theta;
            s.arg_to += theta;
        }
    }
    return out;
}

Cycle root_cycle(const Cycle& c, long long k, long long nu) {
    if (k < 1) throw ValidationError("BadRoot", "root_cycle needs k >= 1");
    if (nu < 0 || nu >= k) throw ValidationError("BadRoot", "root_cycle needs 0 <= nu < k");
    const double kk = static_cast<double>(k);
    const double shift = -kTwoPi * static_cast<double>(nu) / kk;
    Cycle out = c;
    for (auto& term : out.terms) {
        for (auto& s : term.segments) {
            s.radius = std::pow(s.radius, 1.0 / kk);
            s.arg = s.arg / kk + shift;
            s.arg_from = s.arg_from / kk + shift;
            s.arg_to = s.arg_to / kk + shift;
        }
    }
    return out;
}

namespace {

struct Integrand {
    const std::vector<long long>* powers;
    Complex beta;
    const std::vector<SectorPoint>* x;

    // value of t^{-beta-1} exp(sum x_j t^{a_j}) for t = rho e^{i theta}
    Complex at(double rho, double theta) const {
        Complex logt(std::log(rho), theta);
        Complex expo = (-beta - 1.0) * logt;
        for (size_t j = 0; j < powers->size(); ++j) {
            const SectorPoint& xj = (*x)[j];
            if (xj.is_zero()) continue;
            double a = static_cast<double>((*powers)[j]);
            expo += xj.value() * std::exp(a * logt);
        }
        return std::exp(expo);
    }

    // log |integrand| along a ray of carried argument theta
    double log_abs(double rho, double theta) const {
        double v = -(beta.real() + 1.0) * std::log(rho) + beta.imag() * theta;
        for (size_t j = 0; j < powers->size(); ++j) {
            const SectorPoint& xj = (*x)[j];
            if (xj.is_zero()) continue;
            double a = static_cast<double>((*powers)[j]);
            v += xj.modulus * std::pow(rho, a) * std::cos(xj.argument + a * theta);
        }
        return v;
    }
};

void check_ray_decay(const Integrand& f, double theta) {
    // dominant term: largest power with a nonzero coefficient
    for (size_t j = f.powers->size(); j-- > 0;) {
        const SectorPoint& xj = (*f.x)[j];
        if (xj.is_zero()) continue;
        double a = static_cast<double>((*f.powers)[j]);
        double re = xj.modulus * std::cos(xj.argument + a * theta);
        if (re < -1e-9 * xj.modulus) return;
        throw NotRapidDecay("dominant exponential term does not decay along a ray");
    }
    throw NotRapidDecay("integrand along a ray has no decaying exponential (all x zero)");
}

// truncation point for a ray [eps, inf): first radius where log|f| drops 40
// below its running maximum
double ray_truncation(const Integrand& f, double eps, double theta) {
    double best = f.log_abs(eps, theta);
    double rho = eps;
    for (int i = 0; i < 4000; ++i) {
        rho *= 1.2;
        double v = f.log_abs(rho, theta);
        if (v > best) best = v;
        if (v < best - 40.0) return rho;
    }
    throw QuadratureNoConvergence("ray truncation point not found");
}

} // namespace

IntegralResult integrate_powers(const std::vector<long long>& powers, Complex beta,
                                const std::vector<SectorPoint>& x, const Cycle& c,
                                const QuadratureOptions& opts) {
    if (powers.size() != x.size())
        throw ValidationError("SizeMismatch", "integrate: powers and x sizes differ");
    Integrand f{&powers, beta, &x};

    struct Piece {
        std::function<Complex(double)> g;
        double u0, u1;
        Complex weight;
    };
    std::vector<Piece> pieces;
    for (const auto& term : c.terms) {
        for (const auto& seg : term.segments) {
            switch (seg.kind) {
                case PathSegment::Kind::RayOut:
                case PathSegment::Kind::RayIn: {
                    check_ray_decay(f, seg.arg);
                    double T = ray_truncation(f, seg.radius, seg.arg);
                    double sign = seg.kind == PathSegment::Kind::RayOut ? 1.0 : -1.0;
                    double theta = seg.arg;
                    Complex dir = std::polar(1.0, theta);
                    pieces.push_back({[f, theta, dir](double s) { return f.at(s, theta) * dir; },
                                      seg.radius, T, term.weight * sign});
                    break;
                }
                case PathSegment::Kind::Arc: {
                    double r = seg.radius;
                    pieces.push_back({[f, r](double th) {
                                          return f.at(r, th) * Complex(0.0, 1.0) * std::polar(r, th);
                                      },
                                      seg.arg_from, seg.arg_to, term.weight});
                    break;
                }
                case PathSegment::Kind::HalfLineFromZero:
                    throw NotRapidDecay(
                        "half-line from 0 requires the regularized integral (expansion module)");
            }
        }
    }

    // first pass: coarse magnitude estimate to set the absolute budget
    double scale = 0.0;
    std::size_t evals = 0;
    for (const auto& p : pieces) {
        // split the range geometrically so the coarse pass sees the peak
        double span = p.u1 - p.u0;
        int chunks = 8;
        for (int i = 0; i < chunks; ++i) {
            double a = p.u0 + span * i / chunks, b = p.u0 + span * (i + 1) / chunks;
            scale += std::abs(p.weight) * gl_panel(p.g, a, b, evals).l1;
        }
    }
    scale = std::max(scale, 1e-280);
    double abs_tol = opts.tol * scale;

    IntegralResult total;
    total.scale = scale;
    total.evaluations = evals;
    for (const auto& p : pieces) {
        IntegralResult r = adaptive_quadrature(p.g, p.u0, p.u1, abs_tol / pieces.size(), opts);
        total.value += p.weight * r.value;
        total.error += std::abs(p.weight) * r.error;
        total.evaluations += r.evaluations;
    }
    return total;
}

IntegralResult integrate(const OneRowMatrix& A, Complex beta, const std::vector<SectorPoint>& x,
                         const Cycle& c, double tol) {
    QuadratureOptions opts;
    opts.tol = tol;
    return integrate_powers(A.entries(), beta, x, c, opts);
}

CircleIntegral circle_integral(const OneRowMatrix& A, Complex beta,
                               const std::vector<SectorPoint>& x, double eps) {
    CircleIntegral out;
    auto bint = ScalarOps<Complex>::as_integer(beta);
    if (bint) {
        // uniform integrand: the two rays of C_b cancel, leaving the circle
        std::vector<long long> powers = A.entries();
        Integrand f{&powers, beta, &x};
        auto g = [&](double th) { return f.at(eps, th) * Complex(0.0, 1.0) * std::polar(eps, th); };
        std::size_t evals = 0;
        double scale = gl_panel(g, 0.0, kTwoPi, evals).l1 + 1e-30;
        IntegralResult quad = adaptive_quadrature(g, 0.0, kTwoPi, 1e-12 * scale);
        if (*bint >= 0) {
            // 2 pi i sum_{A l = beta} x^l / l!
            Complex sum(0.0, 0.0);
            const long long target = *bint;
            std::vector<long long> ell(static_cast<size_t>(A.size()), 0);
            std::function<void(int, long long)> rec = [&](int idx, long long rem) {
                if (idx == A.size()) {
                    if (rem != 0) return;
                    Complex term(1.0, 0.0);
                    for (int i = 0; i < A.size(); ++i) {
                        long long e = ell[static_cast<size_t>(i)];
                        term *= x[static_cast<size_t>(i)].pow(Complex(static_cast<double>(e), 0.0)) /
                                std::tgamma(static_cast<double>(e) + 1.0);
                    }
                    sum += term;
                    return;
                }
                for (long long v = 0; v * A[idx] <= rem; ++v) {
                    ell[static_cast<size_t>(idx)] = v;
                    rec(idx + 1, rem - v * A[idx]);
                }
                ell[static_cast<size_t>(idx)] = 0;
            };
            rec(0, target);
            out.value = Complex(0.0, kTwoPi) * sum;
            out.combinatorial = true;
            double denom = std::max(std::abs(out.value), std::abs(quad.value));
            out.crosscheck_rel = denom > 0 ? std::abs(out.value - quad.value) / denom : 0.0;
            if (out.crosscheck_rel > 1e-8 && denom > 1e-12)
                throw QuadratureNoConvergence("circle integral cross-check failed");
            return out;
        }
        out.value = quad.value;
        return out;
    }
    IntegralResult r = integrate(A, beta, x, cycle_Cp(A.entries().back(), A.entries().back(), eps));
    // C_b: p = b for the cycle; powers of A close the loop after b-th turn
    out.value = r.value;
    return out;
}

double epsilon_independence_check(const OneRowMatrix& A, Complex beta,
                                  const std::vector<SectorPoint>& x, long long p, double eps1,
                                  double eps2) {
    const long long b_cycle = A.entries().back();
    IntegralResult a = integrate(A, beta, x, cycle_Cp(p, b_cycle, eps1));
    IntegralResult b = integrate(A, beta, x, cycle_Cp(p, b_cycle, eps2));
    return std::abs(a.value - b.value) / std::abs(a.value);
}

} // namespace gkz
