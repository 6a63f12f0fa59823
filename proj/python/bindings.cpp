// pygkz: python bindings for the main operations. Structured results
// (series, cycles, coefficient tables) cross the boundary as plain dicts via
// the JSON schema; scalars stay native.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gkz/expansion.hpp"
#include "gkz/io.hpp"
#include "gkz/operators.hpp"
#include "gkz/restriction.hpp"
#include "gkz/verify.hpp"

namespace py = pybind11;
using namespace gkz;

namespace {

py::object json_to_py(const Json& j) {
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(j.dump());
}

SectorPoint as_point(std::pair<double, double> ma) { return {ma.first, ma.second}; }

std::vector<SectorPoint> as_points(const std::vector<std::pair<double, double>>& xs) {
    std::vector<SectorPoint> out;
    for (const auto& p : xs) out.push_back(as_point(p));
    return out;
}

Cycle make_cycle(long long p, long long b, double eps, double theta, long long k, Complex beta,
                 long long r) {
    Cycle c = cycle_Cp(p, b, eps);
    if (theta != 0.0) c = rotate_cycle(c, theta);
    if (k > 1) c = build_tilde_cycle(c, k, beta, r);
    return c;
}

} // namespace

PYBIND11_MODULE(pygkz, m) {
    m.doc() = "Gevrey series of one-row GKZ systems and their integral representations";

    py::register_exception<ValidationError>(m, "GkzValidationError");
    py::register_exception<AnalyticError>(m, "GkzAnalyticError");

    m.def("kernel_basis", [](const std::vector<long long>& A) {
        return kernel_basis(OneRowMatrix(A));
    });
    m.def("pochhammer", &pochhammer, py::arg("v"), py::arg("u"));
    m.def("gamma_coefficient",
          [](const std::vector<Complex>& v, const std::vector<long long>& u) {
              return gamma_coefficient_t<Complex>(v, u);
          });
    m.def("negative_support", [](const std::vector<Complex>& w) { return negative_support(w); });
    m.def("has_minimal_negative_support",
          [](const std::vector<Complex>& v, const std::vector<long long>& A, long long radius) {
              return has_minimal_negative_support({v, {0.0, 0.0}}, OneRowMatrix(A), radius);
          },
          py::arg("v"), py::arg("A"), py::arg("search_radius") = 25);

    m.def("psi_series", [](long long a, long long b, Complex beta, long long j, long long N) {
        SeriesLabel label{{a, b}, beta, static_cast<int>(j), SeriesVariant::psi2};
        return json_to_py(series_to_json(psi_series(a, b, beta, j, N), label));
    });
    m.def("phi_series",
          [](const std::vector<long long>& A, Complex beta, long long j, long long N,
             bool restricted) {
              SeriesLabel label{A, beta, static_cast<int>(j),
                                restricted ? SeriesVariant::phiRestricted
                                           : SeriesVariant::phiGeneral};
              OneRowMatrix M(A);
              FractionalSeries s =
                  restricted ? phi_restricted(M, beta, j, N) : phi_series(M, beta, j, N);
              return json_to_py(series_to_json(s, label));
          },
          py::arg("A"), py::arg("beta"), py::arg("j"), py::arg("N"), py::arg("restricted") = false);
    m.def("evaluate_series",
          [](const py::object& series, const std::vector<std::pair<double, double>>& x) {
              py::module_ json = py::module_::import("json");
              Json doc = Json::parse(json.attr("dumps")(series).cast<std::string>());
              return evaluate(series_from_json(doc), as_points(x));
          });

    m.def("annihilation_residuals",
          [](const std::vector<long long>& A, Complex beta, long long j, long long N) {
              OneRowMatrix M(A);
              FractionalSeries s = M.size() == 2 ? psi_series(M[0], M[1], beta, j, N)
                                                 : phi_series(M, beta, j, N);
              std::vector<double> out;
              for (const auto& op : toric_generators(M))
                  out.push_back(annihilation_residual(op, s));
              out.push_back(annihilation_residual(euler_operator(M, beta), s));
              return out;
          },
          py::arg("A"), py::arg("beta"), py::arg("j"), py::arg("N") = 12);

    m.def("integrate",
          [](const std::vector<long long>& A, Complex beta,
             const std::vector<std::pair<double, double>>& x, long long p, double eps,
             double theta, long long k, long long r, double tol) {
              OneRowMatrix M(A);
              Cycle c = make_cycle(p, M.entries().back(), eps, theta, k, beta, r);
              IntegralResult res = integrate(M, beta, as_points(x), c, tol);
              return py::make_tuple(res.value, res.error);
          },
          py::arg("A"), py::arg("beta"), py::arg("x"), py::arg("p") = 1, py::arg("eps") = 1.0,
          py::arg("theta") = 0.0, py::arg("k") = 1, py::arg("r") = 0, py::arg("tol") = 1e-12);
    m.def("integrate_powers_x0",
          [](const std::vector<long long>& powers, Complex beta,
             const std::vector<std::pair<double, double>>& x, long long p, long long b, double eps,
             long long k, long long r) {
              Cycle c = make_cycle(p, b, eps, 0.0, k, beta, r);
              IntegralResult res = integrate_powers(powers, beta, as_points(x), c);
              return py::make_tuple(res.value, res.error);
          },
          py::arg("powers"), py::arg("beta"), py::arg("x"), py::arg("p"), py::arg("b"),
          py::arg("eps") = 1.0, py::arg("k") = 1, py::arg("r") = 0);
    m.def("circle_integral",
          [](const std::vector<long long>& A, Complex beta,
             const std::vector<std::pair<double, double>>& x, double eps) {
              CircleIntegral c = circle_integral(OneRowMatrix(A), beta, as_points(x), eps);
              return py::make_tuple(c.value, c.combinatorial, c.crosscheck_rel);
          },
          py::arg("A"), py::arg("beta"), py::arg("x"), py::arg("eps") = 0.5);
    m.def("epsilon_independence",
          [](const std::vector<long long>& A, Complex beta,
             const std::vector<std::pair<double, double>>& x, long long p, double e1, double e2) {
              return epsilon_independence_check(OneRowMatrix(A), beta, as_points(x), p, e1, e2);
          });

    m.def("sector_info", [](long long p, long long a, long long b) {
        SectorInfo s = sector_info(p, a, b);
        return py::make_tuple(s.ell, s.alpha);
    });
    m.def("ik1_closed", [](long long a, long long b, Complex beta, long long k,
                           std::pair<double, double> x1) {
        return ik1_closed(a, b, beta, k, as_point(x1));
    });
    m.def("ik2_closed", [](long long a, long long b, Complex beta, long long k, long long p,
                           std::pair<double, double> x1) {
        return ik2_closed(a, b, beta, k, p, as_point(x1));
    });
    m.def("c_closed", [](long long a, long long b, Complex beta, long long p, long long k,
                         std::pair<double, double> x1) {
        return c_closed(a, b, beta, p, k, as_point(x1));
    });
    m.def("lambda_j", &lambda_j);
    m.def("expansion_table",
          [](long long a, long long b, Complex beta, long long p, std::pair<double, double> x1,
             long long N) {
              return json_to_py(table_to_json(expansion_table(a, b, beta, p, as_point(x1), N)));
          });
    m.def("gevrey_order",
          [](long long a, long long b, Complex beta, long long p, std::pair<double, double> x1) {
              CoefficientTable t;
              t.A = {a, b};
              t.beta = beta;
              for (long long k = 10; k <= 59; ++k)
                  t.entries.push_back({k, c_closed(a, b, beta, p, k, as_point(x1)),
                                       CoefficientMethod::ClosedForm, 0.0, 0.0, false});
              return gevrey_order_estimate(t);
          });
    m.def("decomposition_matrix", [](long long a, long long b, Complex beta) {
        std::vector<long long> ells;
        for (long long ell = 1; ell <= a; ++ell) ells.push_back(ell);
        DecompositionMatrix d = decomposition_matrix(a, b, beta, ells);
        py::dict out;
        out["M"] = d.M;
        out["det_direct"] = d.det_direct;
        out["det_formula"] = d.det_formula;
        out["rank"] = d.rank;
        out["zero_row"] = d.zero_row;
        return out;
    });
    m.def("mu_recovery",
          [](long long a, long long b, Complex beta, long long p, std::pair<double, double> x1,
             long long N) {
              MuRecovery mu = mu_recovery(a, b, beta, p, as_point(x1), N);
              py::dict out;
              out["mu"] = mu.mu;
              out["spread"] = mu.spread;
              out["flagged_zero"] = mu.flagged_zero;
              out["theta"] = mu.theta;
              return out;
          });

    m.def("p_of_j", [](long long a, long long b, long long k, long long j) {
        RestrictionIndex idx = p_of_j(a, b, k, j);
        return py::make_tuple(idx.q, idx.r, idx.p_j);
    });
    m.def("lambda_quotient", [](long long a, long long b, long long k, Complex beta, long long j) {
        auto lam = lambda_quotient(a, b, k, beta, j);
        return py::make_tuple(lam.value, lam.zero_lambda);
    });
    m.def("dft_weights", [](long long k) { return dft_weights(k); });

    m.def("j_beta_integral",
          [](const std::vector<long long>& A, long long beta,
             const std::vector<std::pair<double, double>>& x, double theta) {
              return j_beta_integral(OneRowMatrix(A), beta, as_points(x), theta);
          },
          py::arg("A"), py::arg("beta"), py::arg("x"), py::arg("theta") = 0.0);
    m.def("j_beta_coefficient_closed", [](long long a, long long b, long long beta, long long k,
                                          std::pair<double, double> x1) {
        return j_beta_coefficient_closed(a, b, beta, k, as_point(x1));
    });
    m.def("j_beta_coefficient_quadrature", [](long long a, long long b, long long beta,
                                              long long k, std::pair<double, double> x1) {
        return j_beta_coefficient_quadrature(a, b, beta, k, as_point(x1));
    });
    m.def("j_phi_coefficient",
          [](const std::vector<long long>& A, long long beta, long long k,
             const std::vector<std::pair<double, double>>& x_head) {
              CutoffCoefficient c = j_phi_coefficient(OneRowMatrix(A), beta, k, as_points(x_head));
              return py::make_tuple(c.value, c.cutoff_dependent);
          });

    m.def("criterion_names", &criterion_names);
    m.def("run_criterion", [](const std::string& name) {
        CriterionResult r = run_criterion(name);
        py::dict out;
        out["criterion"] = r.name;
        out["pass"] = r.pass;
        out["seconds"] = r.seconds;
        out["details"] = json_to_py(r.details);
        return out;
    });

    m.attr("__version__") = "0.1.0";
}
