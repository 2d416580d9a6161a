// python bindings for the core operations: construction, evaluation, norms,
// checks, generators, suites
#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ratineq/checks.hpp"
#include "ratineq/errors.hpp"
#include "ratineq/generators.hpp"
#include "ratineq/norms.hpp"
#include "ratineq/suites.hpp"

namespace py = pybind11;
using namespace ratineq;

PYBIND11_MODULE(_core, m) {
    m.doc() = "rational functions with prescribed poles: evaluation, circle "
              "sup-norms, derivative bounds, instance generators";

    py::register_exception<hypothesis_error>(m, "HypothesisError", PyExc_ValueError);
    py::register_exception<near_pole_error>(m, "NearPoleError", PyExc_ValueError);
    py::register_exception<skip_point>(m, "SkipPoint", PyExc_RuntimeError);

    m.attr("POLE_MARGIN") = kPoleMargin;
    m.attr("EXCLUSION_RADIUS") = kExclusionRadius;

    py::class_<CirclePoint>(m, "CirclePoint")
        .def(py::init<double>(), py::arg("theta"))
        .def_readonly("theta", &CirclePoint::theta)
        .def_readonly("z", &CirclePoint::z);

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init<std::vector<cplx>, std::optional<std::vector<cplx>>>(),
             py::arg("coeffs"), py::arg("roots") = std::nullopt)
        .def_static("from_roots", &Polynomial::from_roots, py::arg("roots"),
                    py::arg("leading"),
                    py::arg("max_degree") = Polynomial::kMaxExpansionDegree)
        .def_property_readonly("coeffs",
                               [](const Polynomial& p) { return p.coeffs(); })
        .def_property_readonly("roots", [](const Polynomial& p) { return p.roots(); })
        .def_property_readonly("degree", &Polynomial::degree)
        .def("eval", &Polynomial::eval, py::arg("z"))
        .def("derivative", &Polynomial::derivative)
        .def("reverse_conjugate", &Polynomial::reverse_conjugate, py::arg("n"))
        .def("scaled", &Polynomial::scaled, py::arg("factor"));

    py::class_<PoleSet>(m, "PoleSet")
        .def(py::init<std::vector<cplx>>(), py::arg("poles"))
        .def_property_readonly("poles", [](const PoleSet& p) { return p.poles(); })
        .def("__len__", &PoleSet::size)
        .def("w_eval", &PoleSet::w_eval, py::arg("z"))
        .def("w_derivative_eval", &PoleSet::w_derivative_eval, py::arg("z"));

    py::class_<RationalFn>(m, "RationalFn")
        .def(py::init<Polynomial, PoleSet>(), py::arg("numerator"), py::arg("poles"))
        .def_property_readonly("numerator",
                               [](const RationalFn& r) { return r.numerator(); })
        .def_property_readonly("poles", [](const RationalFn& r) { return r.poles(); })
        .def_property_readonly("order", &RationalFn::order)
        .def("eval", &RationalFn::eval, py::arg("z"))
        .def("derivative_eval", &RationalFn::derivative_eval, py::arg("z"))
        .def("nearest_zero_distance", &RationalFn::nearest_zero_distance, py::arg("z"))
        .def("conjugate_transform", &RationalFn::conjugate_transform);

    m.def("blaschke_eval", &blaschke_eval, py::arg("poles"), py::arg("z"));
    m.def("blaschke_derivative", &blaschke_derivative, py::arg("poles"), py::arg("z"));
    m.def("blaschke_derivative_modulus", &blaschke_derivative_modulus,
          py::arg("poles"), py::arg("z"));

    py::class_<NormEstimate>(m, "NormEstimate")
        .def_readonly("value", &NormEstimate::value)
        .def_readonly("argmax_theta", &NormEstimate::argmax_theta)
        .def_readonly("samples_used", &NormEstimate::samples_used)
        .def_readonly("refined", &NormEstimate::refined);

    py::class_<NormConfig>(m, "NormConfig")
        .def(py::init<>())
        .def_readwrite("coarse_samples", &NormConfig::coarse_samples)
        .def_readwrite("refine_top", &NormConfig::refine_top)
        .def_readwrite("refine_tol", &NormConfig::refine_tol)
        .def_readwrite("max_refine_iters", &NormConfig::max_refine_iters);

    m.def("sup_norm_circle",
          py::overload_cast<const RationalFn&, const NormConfig&>(&sup_norm_circle),
          py::arg("r"), py::arg("config") = NormConfig{});
    m.def("sup_norm_circle",
          py::overload_cast<const Polynomial&, const NormConfig&>(&sup_norm_circle),
          py::arg("p"), py::arg("config") = NormConfig{});
    m.def("sup_norm_circle",
          py::overload_cast<const CircleFn&, const NormConfig&>(&sup_norm_circle),
          py::arg("f"), py::arg("config") = NormConfig{});

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init<>())
        .def_readwrite("slack_rel", &Tolerances::slack_rel)
        .def_readwrite("tight_rel", &Tolerances::tight_rel)
        .def_readwrite("identity_abs", &Tolerances::identity_abs)
        .def_readwrite("identity_rel", &Tolerances::identity_rel)
        .def_readwrite("unimod_abs", &Tolerances::unimod_abs)
        .def_readwrite("lemma4_abs", &Tolerances::lemma4_abs)
        .def_readwrite("equality_rel", &Tolerances::equality_rel);

    py::class_<CheckReport>(m, "CheckReport")
        .def_readonly("check_id", &CheckReport::check_id)
        .def_readonly("theta", &CheckReport::theta)
        .def_readonly("lhs", &CheckReport::lhs)
        .def_readonly("rhs", &CheckReport::rhs)
        .def_readonly("slack", &CheckReport::slack)
        .def_readonly("hypotheses_ok", &CheckReport::hypotheses_ok)
        .def_readonly("tolerance", &CheckReport::tolerance)
        .def_readonly("passed", &CheckReport::pass)
        .def_readonly("quarantined", &CheckReport::quarantined)
        .def_readonly("equality", &CheckReport::equality);

    m.def(
        "lhs_theorem21",
        [](const RationalFn& r, double k, cplx beta, const CirclePoint& z) {
            return lhs_theorem21(r, KRadius(k), BetaParam(beta), z);
        },
        py::arg("r"), py::arg("k"), py::arg("beta"), py::arg("z"));
    m.def(
        "rhs_theorem21",
        [](const RationalFn& r, double k, cplx beta, const CirclePoint& z,
           const NormEstimate& r_norm) {
            return rhs_theorem21(r, KRadius(k), BetaParam(beta), z, r_norm);
        },
        py::arg("r"), py::arg("k"), py::arg("beta"), py::arg("z"), py::arg("r_norm"));
    m.def(
        "rhs_corollary24",
        [](const RationalFn& r, double k, cplx beta, const CirclePoint& z,
           const NormEstimate& r_norm) {
            return rhs_corollary24(r, KRadius(k), BetaParam(beta), z, r_norm);
        },
        py::arg("r"), py::arg("k"), py::arg("beta"), py::arg("z"), py::arg("r_norm"));

    m.def(
        "check_rational",
        [](std::string_view id, const RationalFn& r, double k, cplx beta,
           const CirclePoint& z, const NormEstimate& r_norm, const Tolerances& tol,
           bool assume_hypotheses) {
            return check_rational(id, r, KRadius(k), BetaParam(beta), z, r_norm, tol,
                                  assume_hypotheses);
        },
        py::arg("check_id"), py::arg("r"), py::arg("k"), py::arg("beta"), py::arg("z"),
        py::arg("r_norm"), py::arg("tol") = Tolerances{},
        py::arg("assume_hypotheses") = false);

    py::class_<PolyNorms>(m, "PolyNorms")
        .def_readonly("p", &PolyNorms::p)
        .def_readonly("p_prime", &PolyNorms::p_prime);
    m.def("compute_poly_norms", &compute_poly_norms, py::arg("p"),
          py::arg("config") = NormConfig{});

    m.def(
        "check_polynomial",
        [](std::string_view id, const Polynomial& p, double k, cplx beta,
           const CirclePoint& z, const PolyNorms& norms, const Tolerances& tol,
           bool assume_hypotheses) {
            return check_polynomial(id, p, KRadius(k), BetaParam(beta), z, norms, tol,
                                    assume_hypotheses);
        },
        py::arg("check_id"), py::arg("p"), py::arg("k"), py::arg("beta"), py::arg("z"),
        py::arg("norms"), py::arg("tol") = Tolerances{},
        py::arg("assume_hypotheses") = false);

    m.def("check_lemma1", &check_lemma1, py::arg("poles"), py::arg("z"),
          py::arg("tol") = Tolerances{});
    m.def("check_lemma2", &check_lemma2, py::arg("poles"), py::arg("z"),
          py::arg("tol") = Tolerances{});
    m.def("check_unimodular", &check_unimodular, py::arg("poles"), py::arg("z"),
          py::arg("tol") = Tolerances{});
    m.def("check_lemma3", &check_lemma3, py::arg("r"), py::arg("z"), py::arg("r_norm"),
          py::arg("tol") = Tolerances{});
    m.def("check_lemma5", &check_lemma5, py::arg("r"), py::arg("k"), py::arg("z"),
          py::arg("tol") = Tolerances{});
    m.def("check_halfplane", &check_halfplane, py::arg("z"), py::arg("zero"),
          py::arg("tol") = Tolerances{});
    m.def("lemma4_scalar", &lemma4_scalar, py::arg("zetas"),
          py::arg("tol") = Tolerances{});

    m.def("check_uses_beta", &check_uses_beta, py::arg("check_id"));
    m.def("is_known_check", &is_known_check, py::arg("check_id"));
    m.def(
        "quarantined_evaluation",
        [](std::string_view id, cplx beta) {
            return quarantined_evaluation(id, BetaParam(beta));
        },
        py::arg("check_id"), py::arg("beta"));

    py::class_<InstanceSpec>(m, "InstanceSpec")
        .def(py::init<>())
        .def_readwrite("n", &InstanceSpec::n)
        .def_readwrite("k", &InstanceSpec::k)
        .def_readwrite("zero_width", &InstanceSpec::zero_width)
        .def_readwrite("pole_margin", &InstanceSpec::pole_margin)
        .def_readwrite("pole_width", &InstanceSpec::pole_width)
        .def_readwrite("boundary_prob", &InstanceSpec::boundary_prob)
        .def_readwrite("force_boundary", &InstanceSpec::force_boundary)
        .def_readwrite("seed", &InstanceSpec::seed)
        .def("validate", &InstanceSpec::validate);

    m.def("split_seed", &split_seed, py::arg("base"), py::arg("index"));
    m.def("gen_poles", &gen_poles, py::arg("spec"));
    m.def("gen_instance", &gen_instance, py::arg("spec"));
    m.def("extremal_instance", &extremal_instance, py::arg("n"), py::arg("k"),
          py::arg("a"));
    m.def("blaschke_instance", &blaschke_instance, py::arg("poles"));
    m.def("boundary_cases", &boundary_cases, py::arg("poles"));
    m.def("gen_zeta_tuples", &gen_zeta_tuples, py::arg("count"), py::arg("max_len"),
          py::arg("zeta_max"), py::arg("seed"));

    py::class_<SuiteCounts>(m, "SuiteCounts")
        .def_readonly("passed", &SuiteCounts::pass)
        .def_readonly("failed", &SuiteCounts::fail)
        .def_readonly("skipped", &SuiteCounts::skipped)
        .def_readonly("hypothesis_violations", &SuiteCounts::hypothesis_violations)
        .def_readonly("quarantined", &SuiteCounts::quarantined);

    py::class_<SuiteInstance>(m, "SuiteInstance")
        .def(py::init([](RationalFn fn, double k, bool assume) {
                 return SuiteInstance{std::move(fn), k, assume};
             }),
             py::arg("fn"), py::arg("k") = 1.0, py::arg("assume_hypotheses") = false)
        .def_readonly("fn", &SuiteInstance::fn)
        .def_readonly("k", &SuiteInstance::k)
        .def_readonly("assume_hypotheses", &SuiteInstance::assume_hypotheses);

    py::class_<SuiteReport>(m, "SuiteReport")
        .def_readonly("reports", &SuiteReport::reports)
        .def_readonly("counts", &SuiteReport::counts);

    py::class_<VerifyConfig>(m, "VerifyConfig")
        .def(py::init<>())
        .def_readwrite("suite", &VerifyConfig::suite)
        .def_readwrite("instances", &VerifyConfig::instances)
        .def_readwrite("grid", &VerifyConfig::grid)
        .def_readwrite("seed", &VerifyConfig::seed)
        .def_readwrite("k_values", &VerifyConfig::k_values)
        .def_readwrite("betas", &VerifyConfig::betas)
        .def_readwrite("tol", &VerifyConfig::tol)
        .def_readwrite("sharp_n", &VerifyConfig::sharp_n)
        .def_readwrite("sharp_k", &VerifyConfig::sharp_k)
        .def_readwrite("sharp_a", &VerifyConfig::sharp_a);

    m.def(
        "run_verify",
        [](const VerifyConfig& cfg,
           const std::optional<std::vector<SuiteInstance>>& instances) {
            return run_verify(cfg, instances ? &*instances : nullptr);
        },
        py::arg("config") = VerifyConfig{}, py::arg("instances") = std::nullopt);
    m.def("default_betas", &default_betas);
    m.def("make_instances", &make_instances, py::arg("k_values"), py::arg("count"),
          py::arg("seed"));

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("k", &SweepRow::k)
        .def_readonly("beta_mod", &SweepRow::beta_mod)
        .def_readonly("beta_arg", &SweepRow::beta_arg)
        .def_readonly("check_id", &SweepRow::check_id)
        .def_readonly("min_slack", &SweepRow::min_slack)
        .def_readonly("points", &SweepRow::points);

    py::class_<SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("beta_moduli", &SweepConfig::beta_moduli)
        .def_readwrite("beta_phases", &SweepConfig::beta_phases)
        .def_readwrite("k_values", &SweepConfig::k_values)
        .def_readwrite("instances", &SweepConfig::instances)
        .def_readwrite("grid", &SweepConfig::grid)
        .def_readwrite("seed", &SweepConfig::seed)
        .def_readwrite("tol", &SweepConfig::tol)
        .def_readwrite("extremal", &SweepConfig::extremal)
        .def_readwrite("extremal_n", &SweepConfig::extremal_n)
        .def_readwrite("extremal_a", &SweepConfig::extremal_a);

    m.def("sweep_beta", &sweep_beta, py::arg("config") = SweepConfig{});
}
