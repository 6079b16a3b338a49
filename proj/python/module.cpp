#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wcert/certification.hpp"
#include "wcert/conditions.hpp"
#include "wcert/error.hpp"
#include "wcert/io.hpp"
#include "wcert/numerics.hpp"
#include "wcert/oracle.hpp"
#include "wcert/weierstrass.hpp"

namespace py = pybind11;
using namespace wcert;

namespace {

py::object json_to_python(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_wcert, m) {
    m.doc() = "Weierstrass iteration, localization certificates and condition conversions";
    m.attr("__version__") = "0.1.0";
    m.attr("INFLATION") = kInflation;

    static py::exception<Error> wcert_error(m, "WcertError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(wcert_error, e.what());
        }
    });

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init<ComplexVector>(), py::arg("coeffs"), "Coefficients ordered leading-to-constant.")
        .def_property_readonly("degree", &Polynomial::degree)
        .def_property_readonly("leading", &Polynomial::leading)
        .def_property_readonly("coeffs", [](const Polynomial& f) {
            return ComplexVector(f.coeffs().begin(), f.coeffs().end());
        })
        .def("__call__", &Polynomial::operator(), py::arg("z"))
        .def("__repr__", [](const Polynomial& f) { return "Polynomial(degree=" + std::to_string(f.degree()) + ")"; });

    py::class_<PNormSpec>(m, "PNormSpec")
        .def(py::init(&PNormSpec::make), py::arg("n"), py::arg("p"))
        .def_readonly("p", &PNormSpec::p)
        .def_readonly("q", &PNormSpec::q)
        .def_readonly("n", &PNormSpec::n)
        .def_readonly("a", &PNormSpec::a)
        .def_readonly("b", &PNormSpec::b)
        .def_property_readonly("strict_boundary_case", &PNormSpec::strict_boundary_case);

    m.def("horner_eval", &horner_eval, py::arg("f"), py::arg("z"));
    m.def("conjugate_exponent", &conjugate_exponent, py::arg("p"));
    m.def("parse_exponent", &parse_exponent, py::arg("text"));
    m.def("norm_constants", [](std::size_t n, double p) {
        const NormConstants k = norm_constants(n, p);
        return py::make_tuple(k.a, k.b);
    }, py::arg("n"), py::arg("p"));
    m.def("distance_vector", [](const ComplexVector& x) { return distance_vector(x); }, py::arg("x"));
    m.def("separation", [](const ComplexVector& x) { return separation(x); }, py::arg("x"));
    m.def("componentwise_ratio", [](const ComplexVector& x, const RealVector& y) {
        return componentwise_ratio(x, y);
    }, py::arg("x"), py::arg("y"));
    m.def("p_norm", [](const RealVector& v, double p) { return p_norm(v, p); }, py::arg("v"), py::arg("p"));

    m.def("weierstrass_correction", [](const Polynomial& f, const ComplexVector& x) {
        return weierstrass_correction(f, x);
    }, py::arg("f"), py::arg("x"));
    m.def("weierstrass_step", [](const Polynomial& f, const ComplexVector& x) {
        return weierstrass_step(f, x);
    }, py::arg("f"), py::arg("x"));

    py::enum_<IterationStatus>(m, "IterationStatus")
        .value("converged", IterationStatus::converged)
        .value("max_iterations", IterationStatus::max_iterations)
        .value("diverged_nonfinite", IterationStatus::diverged_nonfinite);

    py::class_<IterationTrace>(m, "IterationTrace")
        .def_readonly("iterates", &IterationTrace::iterates)
        .def_readonly("correction_norms", &IterationTrace::correction_norms)
        .def_readonly("status", &IterationTrace::status)
        .def_readonly("errors", &IterationTrace::errors)
        .def_readonly("error_ratios", &IterationTrace::error_ratios)
        .def_property_readonly("steps", &IterationTrace::steps)
        .def_property_readonly("final_iterate", &IterationTrace::final_iterate);

    m.def("iterate", [](const Polynomial& f, const ComplexVector& x0, int max_iter, double tol,
                        std::optional<ComplexVector> reference) {
        std::optional<std::span<const Complex>> ref;
        if (reference) ref = std::span<const Complex>(*reference);
        return iterate(f, x0, {max_iter, tol}, ref);
    }, py::arg("f"), py::arg("x0"), py::arg("max_iter") = 100, py::arg("tol") = 1e-12,
          py::arg("reference") = py::none());

    py::class_<InclusionDisk>(m, "InclusionDisk")
        .def_readonly("center", &InclusionDisk::center)
        .def_readonly("radius", &InclusionDisk::radius)
        .def("contains", &InclusionDisk::contains, py::arg("z"));

    py::enum_<Theorem>(m, "Theorem")
        .value("main_localization", Theorem::main_localization)
        .value("gamma_corollary", Theorem::gamma_corollary)
        .value("fixed_r_corollary", Theorem::fixed_r_corollary)
        .value("prop_localization", Theorem::prop_localization);

    py::class_<Certificate>(m, "Certificate")
        .def_readonly("theorem", &Certificate::theorem)
        .def_readonly("p", &Certificate::p)
        .def_readonly("q", &Certificate::q)
        .def_readonly("a", &Certificate::a)
        .def_readonly("b", &Certificate::b)
        .def_readonly("E", &Certificate::E)
        .def_readonly("bound", &Certificate::bound)
        .def_readonly("satisfied", &Certificate::satisfied)
        .def_readonly("strict_boundary_case", &Certificate::strict_boundary_case)
        .def_readonly("c_interval", &Certificate::c_interval)
        .def_readonly("c_used", &Certificate::c_used)
        .def_readonly("inflation", &Certificate::inflation)
        .def_readonly("disks", &Certificate::disks)
        .def_readonly("reason", &Certificate::reason)
        .def("to_json", [](const Certificate& c) { return Json(c).dump(); })
        .def("to_dict", [](const Certificate& c) { return json_to_python(Json(c)); });

    m.def("compute_E", [](const Polynomial& f, const ComplexVector& x, const PNormSpec& s) {
        return compute_E(f, x, s);
    }, py::arg("f"), py::arg("x"), py::arg("spec"));
    m.def("alpha", [](double t, double a) { return wcert::alpha(t, a); }, py::arg("t"), py::arg("a"));
    m.def("beta", [](double t, double a) { return wcert::beta(t, a); }, py::arg("t"), py::arg("a"));
    m.def("gamma", [](double t, double a) { return wcert::gamma(t, a); }, py::arg("t"), py::arg("a"));
    m.def("disjointness_check", [](const ComplexVector& x, const ComplexVector& u, double c, const PNormSpec& s) {
        return disjointness_check(x, u, c, s);
    }, py::arg("x"), py::arg("u"), py::arg("c"), py::arg("spec"));
    m.def("braess_hadeler_disks", [](const Polynomial& f, const ComplexVector& x, const RealVector& w) {
        return braess_hadeler_disks(f, x, w);
    }, py::arg("f"), py::arg("x"), py::arg("weights"));
    m.def("localize_with_c", [](const Polynomial& f, const ComplexVector& x, const PNormSpec& s, double c) {
        return localize_with_c(f, x, s, c);
    }, py::arg("f"), py::arg("x"), py::arg("spec"), py::arg("c"));
    m.def("certify_main", [](const Polynomial& f, const ComplexVector& x, const PNormSpec& s,
                             std::optional<double> c) {
        return c ? certify_main(f, x, s, *c) : certify_main(f, x, s);
    }, py::arg("f"), py::arg("x"), py::arg("spec"), py::arg("c") = py::none());
    m.def("certify_gamma", [](const Polynomial& f, const ComplexVector& x, const PNormSpec& s) {
        return certify_gamma(f, x, s);
    }, py::arg("f"), py::arg("x"), py::arg("spec"));
    m.def("certify_fixed_R", [](const Polynomial& f, const ComplexVector& x, const PNormSpec& s, double R) {
        return certify_fixed_R(f, x, s, R);
    }, py::arg("f"), py::arg("x"), py::arg("spec"), py::arg("R"));
    m.def("root_proximity_bound", &root_proximity_bound, py::arg("E"), py::arg("a"));

    py::class_<ConversionResult>(m, "ConversionResult")
        .def_readonly("R_in", &ConversionResult::R_in)
        .def_readonly("R_out", &ConversionResult::R_out)
        .def_readonly("domain_ok", &ConversionResult::domain_ok)
        .def_readonly("strict_required", &ConversionResult::strict_required)
        .def("to_dict", [](const ConversionResult& r) { return json_to_python(Json(r)); });

    m.def("convert_first_to_second", &convert_first_to_second, py::arg("R"), py::arg("n"), py::arg("p"));
    m.def("convert_second_to_third", &convert_second_to_third, py::arg("R"), py::arg("n"), py::arg("p"));
    m.def("convert_second_to_third_simple", &convert_second_to_third_simple, py::arg("R"), py::arg("n"),
          py::arg("p"));
    m.def("convert_first_to_third", &convert_first_to_third, py::arg("R"), py::arg("n"), py::arg("p"));
    m.def("convert_first_to_third_simple", &convert_first_to_third_simple, py::arg("R"), py::arg("n"),
          py::arg("p"));
    m.def("classical_radius", [](const std::string& which, std::size_t n) {
        if (which == "dochev") return classical_radius(ClassicalTheorem::dochev, n);
        if (which == "wang_zhao") return classical_radius(ClassicalTheorem::wang_zhao, n);
        if (which == "pct") return classical_radius(ClassicalTheorem::pct, n);
        throw Error(ErrorKind::domain, "unknown classical theorem '" + which + "'");
    }, py::arg("which"), py::arg("n"));

    py::class_<GroundTruthInstance>(m, "GroundTruthInstance")
        .def_readonly("roots", &GroundTruthInstance::roots)
        .def_readonly("leading", &GroundTruthInstance::leading)
        .def_readonly("polynomial", &GroundTruthInstance::polynomial)
        .def_readonly("min_separation", &GroundTruthInstance::min_separation)
        .def("relative_residual", &GroundTruthInstance::relative_residual);

    m.def("polynomial_from_roots", [](const ComplexVector& roots, Complex a0) {
        return polynomial_from_roots(roots, a0);
    }, py::arg("roots"), py::arg("a0") = Complex{1.0, 0.0});
    m.def("random_instance", &random_instance, py::arg("n"), py::arg("seed"), py::arg("min_sep") = 0.25,
          py::arg("box") = 2.0);
    m.def("perturbed_guess", &perturbed_guess, py::arg("inst"), py::arg("rho"), py::arg("seed"));
    m.def("verify_certificate", [](const Certificate& cert, const GroundTruthInstance& inst) {
        const VerificationRecord rec = verify_certificate(cert, inst);
        py::dict out;
        out["verified"] = rec.verified;
        out["bijection"] = rec.bijection;
        out["contained"] = rec.contained;
        out["exclusive"] = rec.exclusive;
        out["disjoint"] = rec.disjoint;
        out["matched_roots"] = rec.matched_roots;
        out["violations"] = rec.violations;
        return out;
    }, py::arg("cert"), py::arg("inst"));
    m.def("survey", [](std::size_t trials, std::uint64_t seed) {
        SurveyConfig config;
        config.trials = trials;
        config.seed = seed;
        return json_to_python(Json(survey(config)));
    }, py::arg("trials") = 100, py::arg("seed") = 1, "Runs the soundness survey and returns the report as a dict.");
}
