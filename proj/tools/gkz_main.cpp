// gkz: Gevrey series of one-row hypergeometric systems, integrals of
// exponential type along explicit cycles, and their asymptotic-expansion
// coefficient tables. All output is JSON (schema v1).

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gkz/expansion.hpp"
#include "gkz/io.hpp"
#include "gkz/operators.hpp"
#include "gkz/restriction.hpp"
#include "gkz/verify.hpp"

namespace {

using namespace gkz;

void emit(const Json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        f << doc.dump(2) << "\n";
    }
}

struct CommonArgs {
    std::vector<long long> A;
    std::string beta = "0";
    long long j = 0;
    long long p = 1;
    long long k = 1;
    long long r = 0;
    double eps = 1.0;
    double theta = 0.0;
    long long N = 10;
    double tol = 1e-12;
    std::vector<std::string> x;
    std::string out;
    bool restricted = false;
    std::string suite;
};

std::vector<SectorPoint> parse_points(const std::vector<std::string>& xs) {
    std::vector<SectorPoint> out;
    for (const auto& s : xs) out.push_back(parse_sector_point(s));
    return out;
}

int cmd_series(const CommonArgs& args) {
    OneRowMatrix A(args.A);
    Complex beta = parse_complex(args.beta);
    SeriesLabel label;
    label.A = args.A;
    label.beta = beta;
    label.j = static_cast<int>(args.j);
    FractionalSeries s;
    if (A.size() == 2) {
        label.variant = SeriesVariant::psi2;
        s = psi_series(A[0], A[1], beta, args.j, args.N);
    } else if (args.restricted) {
        label.variant = SeriesVariant::phiRestricted;
        s = phi_restricted(A, beta, args.j, args.N);
    } else {
        label.variant = SeriesVariant::phiGeneral;
        s = phi_series(A, beta, args.j, args.N);
    }
    emit(series_to_json(s, label), args.out);
    return 0;
}

int cmd_integral(const CommonArgs& args) {
    OneRowMatrix A(args.A);
    Complex beta = parse_complex(args.beta);
    std::vector<SectorPoint> x = parse_points(args.x);
    if (static_cast<int>(x.size()) != A.size())
        throw ValidationError("SizeMismatch", "need one --x point per matrix entry");
    Cycle c = cycle_Cp(args.p, A.entries().back(), args.eps);
    if (args.theta != 0.0) c = rotate_cycle(c, args.theta);
    if (args.k > 1) c = build_tilde_cycle(c, args.k, beta, args.r);
    IntegralResult res = integrate(A, beta, x, c, args.tol);
    emit(integral_to_json(res), args.out);
    return 0;
}

int cmd_expansion(const CommonArgs& args) {
    OneRowMatrix A(args.A);
    if (A.size() != 2)
        throw ValidationError("SizeMismatch", "expansion tables are for A = (a,b)");
    Complex beta = parse_complex(args.beta);
    std::vector<SectorPoint> x = parse_points(args.x);
    if (x.size() != 1) throw ValidationError("SizeMismatch", "expansion needs one --x point");
    CoefficientTable t = expansion_table(A[0], A[1], beta, args.p, x[0], args.N);
    long long closed = 0;
    for (const auto& e : t.entries)
        if (e.method != CoefficientMethod::Quadrature) ++closed;
    if (closed >= 40) t.gevrey_s = gevrey_order_estimate(t);
    emit(table_to_json(t), args.out);
    return 0;
}

int cmd_decompose(const CommonArgs& args) {
    OneRowMatrix A(args.A);
    if (A.size() != 2)
        throw ValidationError("SizeMismatch", "decompose is for A = (a,b)");
    Complex beta = parse_complex(args.beta);
    std::vector<long long> ells;
    for (long long ell = 1; ell <= A[0]; ++ell) ells.push_back(ell);
    DecompositionMatrix d = decomposition_matrix(A[0], A[1], beta, ells);
    Json rows = Json::array();
    for (const auto& row : d.M) {
        Json jr = Json::array();
        for (const auto& v : row) jr.push_back(complex_to_json(v));
        rows.push_back(jr);
    }
    emit(Json{{"schema", "v1"},
              {"kind", "decomposition"},
              {"A", args.A},
              {"beta", complex_to_json(beta)},
              {"ells", ells},
              {"M", rows},
              {"det_direct", complex_to_json(d.det_direct)},
              {"det_formula", complex_to_json(d.det_formula)},
              {"rank", d.rank},
              {"zero_row", d.zero_row}},
         args.out);
    return 0;
}

int cmd_restrict(const CommonArgs& args) {
    OneRowMatrix Ap(args.A);
    if (Ap.size() != 3 || Ap[0] != 1)
        throw ValidationError("SizeMismatch", "restrict expects A = (1, ka, kb)");
    auto tail = Ap.tail_pair();
    Complex beta = parse_complex(args.beta);
    auto lam = lambda_quotient(tail.a, tail.b, tail.k, beta, args.j);
    FractionalSeries phi = phi_series(Ap, beta, args.j, args.N);
    auto comps = varpi_apply(phi, tail.k);
    Json jcomps = Json::array();
    for (long long ell = 0; ell < tail.k; ++ell) {
        SeriesLabel label;
        label.A = {tail.a, tail.b};
        label.beta = (beta - static_cast<double>(ell)) / static_cast<double>(tail.k);
        label.j = static_cast<int>(lam.index.p_j);
        label.variant = SeriesVariant::psi2;
        jcomps.push_back(series_to_json(comps[static_cast<size_t>(ell)], label));
    }
    emit(Json{{"schema", "v1"},
              {"kind", "restriction"},
              {"A", args.A},
              {"beta", complex_to_json(beta)},
              {"index", {{"j", lam.index.j}, {"q", lam.index.q}, {"r", lam.index.r},
                         {"p_j", lam.index.p_j}}},
              {"lambda", complex_to_json(lam.value)},
              {"zero_lambda", lam.zero_lambda},
              {"components", jcomps}},
         args.out);
    return 0;
}

int cmd_verify(const CommonArgs& args) {
    VerifyOptions opts;
    if (!args.A.empty()) opts.A = args.A;
    if (args.beta != "0") opts.beta = parse_complex(args.beta);
    if (args.p != 1) opts.p = args.p;
    CriterionResult r = run_criterion(args.suite, opts);
    emit(Json{{"schema", "v1"},
              {"kind", "verify"},
              {"criterion", r.name},
              {"pass", r.pass},
              {"seconds", r.seconds},
              {"details", r.details}},
         args.out);
    return r.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gevrey series and exponential-type integrals of one-row GKZ systems"};
    app.require_subcommand(1);
    CommonArgs args;

    auto add_common = [&](CLI::App* sub, bool needs_A) {
        auto* a = sub->add_option("--A", args.A, "matrix entries a_1,...,a_n")->delimiter(',');
        if (needs_A) a->required();
        sub->add_option("--beta", args.beta, "parameter beta (re+imi)");
        sub->add_option("--j", args.j, "series index j");
        sub->add_option("--p", args.p, "cycle index p (C_p)");
        sub->add_option("--k", args.k, "root order k of a tilde cycle");
        sub->add_option("--r", args.r, "tilde cycle residue r");
        sub->add_option("--eps", args.eps, "cycle radius eps");
        sub->add_option("--theta", args.theta, "cycle rotation angle");
        sub->add_option("--N", args.N, "truncation order");
        sub->add_option("--tol", args.tol, "quadrature tolerance");
        sub->add_option("--x", args.x, "point mod@arg (repeatable)");
        sub->add_option("--out", args.out, "write JSON to this path");
    };

    auto* s_series = app.add_subcommand("series", "build a Gamma-series");
    add_common(s_series, true);
    s_series->add_flag("--restricted", args.restricted, "phi^{(j)}(0, x) instead of phi^{(j)}");
    auto* s_integral = app.add_subcommand("integral", "integrate along a cycle");
    add_common(s_integral, true);
    auto* s_expansion = app.add_subcommand("expansion", "coefficient table");
    add_common(s_expansion, true);
    auto* s_decompose = app.add_subcommand("decompose", "decomposition matrix M");
    add_common(s_decompose, true);
    auto* s_restrict = app.add_subcommand("restrict", "varpi restriction data");
    add_common(s_restrict, true);
    auto* s_verify = app.add_subcommand("verify", "run an acceptance criterion");
    s_verify->add_option("suite", args.suite, "criterion name")->required();
    add_common(s_verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (s_series->parsed()) return cmd_series(args);
        if (s_integral->parsed()) return cmd_integral(args);
        if (s_expansion->parsed()) return cmd_expansion(args);
        if (s_decompose->parsed()) return cmd_decompose(args);
        if (s_restrict->parsed()) return cmd_restrict(args);
        if (s_verify->parsed()) return cmd_verify(args);
    } catch (const AnalyticError& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
