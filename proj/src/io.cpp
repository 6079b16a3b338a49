#include "wcert/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "wcert/error.hpp"

namespace wcert {

namespace {

IterationStatus status_from_string(const std::string& name) {
    for (IterationStatus s : {IterationStatus::converged, IterationStatus::max_iterations,
                              IterationStatus::diverged_nonfinite}) {
        if (to_string(s) == name) return s;
    }
    throw Error(ErrorKind::domain, "unknown iteration status '" + name + "'");
}

std::string to_string(NormForm form) { return form == NormForm::componentwise ? "componentwise" : "aggregate"; }

NormForm norm_form_from_string(const std::string& name) {
    if (name == "componentwise") return NormForm::componentwise;
    if (name == "aggregate") return NormForm::aggregate;
    throw Error(ErrorKind::domain, "unknown norm form '" + name + "'");
}

}  // namespace

SolveReport SolveReport::from_trace(const IterationTrace& trace) {
    SolveReport out;
    out.status = trace.status;
    out.iterations = trace.steps();
    out.final_correction_norm = trace.correction_norms.empty() ? 0.0 : trace.correction_norms.back();
    out.final_iterate = trace.final_iterate();
    out.correction_norms = trace.correction_norms;
    return out;
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) {
        throw Error(ErrorKind::domain, "complex numbers are written as [re, im]");
    }
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

Json complex_vector_to_json(std::span<const Complex> v) {
    Json out = Json::array();
    for (const Complex& z : v) out.push_back(complex_to_json(z));
    return out;
}

ComplexVector complex_vector_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorKind::domain, "expected an array of [re, im] pairs");
    ComplexVector out;
    out.reserve(j.size());
    for (const Json& e : j) out.push_back(complex_from_json(e));
    return out;
}

Json exponent_to_json(double p) {
    if (p == kInfinity) return "inf";
    return p;
}

double exponent_from_json(const Json& j) {
    if (j.is_string()) return parse_exponent(j.get<std::string>());
    return j.get<double>();
}

Polynomial polynomial_from_json(const Json& j) { return Polynomial(complex_vector_from_json(j.at("coeffs"))); }

Json polynomial_to_json(const Polynomial& f) { return {{"coeffs", complex_vector_to_json(f.coeffs())}}; }

ComplexVector guess_from_json(const Json& j) { return complex_vector_from_json(j.at("guess")); }

Json guess_to_json(std::span<const Complex> x) { return {{"guess", complex_vector_to_json(x)}}; }

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return Json::parse(in);
}

void to_json(Json& j, const InclusionDisk& disk) {
    j = {{"center", complex_to_json(disk.center)}, {"radius", disk.radius}};
}

void from_json(const Json& j, InclusionDisk& disk) {
    disk.center = complex_from_json(j.at("center"));
    disk.radius = j.at("radius").get<double>();
}

void to_json(Json& j, const Certificate& cert) {
    j = {{"theorem", std::string(to_string(cert.theorem))},
         {"p", exponent_to_json(cert.p)},
         {"q", exponent_to_json(cert.q)},
         {"a", cert.a},
         {"b", cert.b},
         {"E", cert.E},
         {"bound", cert.bound},
         {"satisfied", cert.satisfied},
         {"strict_boundary_case", cert.strict_boundary_case},
         {"c_interval", Json::array({cert.c_interval.first, cert.c_interval.second})},
         {"c_used", cert.c_used},
         {"inflation", cert.inflation},
         {"disks", cert.disks}};
}

void from_json(const Json& j, Certificate& cert) {
    cert.theorem = theorem_from_string(j.at("theorem").get<std::string>());
    cert.p = exponent_from_json(j.at("p"));
    cert.q = exponent_from_json(j.at("q"));
    cert.a = j.at("a").get<double>();
    cert.b = j.at("b").get<double>();
    cert.E = j.at("E").get<double>();
    cert.bound = j.at("bound").get<double>();
    cert.satisfied = j.at("satisfied").get<bool>();
    cert.strict_boundary_case = j.at("strict_boundary_case").get<bool>();
    const Json& interval = j.at("c_interval");
    cert.c_interval = {interval.at(0).get<double>(), interval.at(1).get<double>()};
    cert.c_used = j.at("c_used").get<double>();
    cert.inflation = j.at("inflation").get<double>();
    cert.disks = j.at("disks").get<std::vector<InclusionDisk>>();
    cert.reason.clear();
}

void to_json(Json& j, const ConditionType& type) {
    j = {{"kind", std::string(to_string(type.kind))}, {"form", to_string(type.form)}};
}

void from_json(const Json& j, ConditionType& type) {
    type.kind = condition_kind_from_string(j.at("kind").get<std::string>());
    type.form = norm_form_from_string(j.at("form").get<std::string>());
}

void to_json(Json& j, const ConversionResult& result) {
    j = {{"source", result.source},
         {"target", result.target},
         {"R_in", result.R_in},
         {"domain_ok", result.domain_ok},
         {"strict_required", result.strict_required}};
    if (result.R_out) j["R_out"] = *result.R_out;
}

void from_json(const Json& j, ConversionResult& result) {
    result.source = j.at("source").get<ConditionType>();
    result.target = j.at("target").get<ConditionType>();
    result.R_in = j.at("R_in").get<double>();
    result.domain_ok = j.at("domain_ok").get<bool>();
    result.strict_required = j.at("strict_required").get<bool>();
    result.R_out.reset();
    if (j.contains("R_out")) result.R_out = j.at("R_out").get<double>();
}

void to_json(Json& j, const SolveReport& report) {
    j = {{"status", std::string(to_string(report.status))},
         {"iterations", report.iterations},
         {"final_correction_norm", report.final_correction_norm},
         {"final_iterate", complex_vector_to_json(report.final_iterate)},
         {"correction_norms", report.correction_norms}};
}

void from_json(const Json& j, SolveReport& report) {
    report.status = status_from_string(j.at("status").get<std::string>());
    report.iterations = j.at("iterations").get<std::size_t>();
    report.final_correction_norm = j.at("final_correction_norm").get<double>();
    report.final_iterate = complex_vector_from_json(j.at("final_iterate"));
    report.correction_norms = j.at("correction_norms").get<RealVector>();
}

void to_json(Json& j, const SurveyConfig& config) {
    Json ps = Json::array();
    for (double p : config.p_set) ps.push_back(exponent_to_json(p));
    j = {{"n_min", config.n_min}, {"n_max", config.n_max}, {"p_set", ps},
         {"trials", config.trials}, {"seed", config.seed}, {"rhos", config.rhos},
         {"min_sep", config.min_sep}, {"box", config.box}};
}

void from_json(const Json& j, SurveyConfig& config) {
    const SurveyConfig defaults;
    config.n_min = j.value("n_min", defaults.n_min);
    config.n_max = j.value("n_max", defaults.n_max);
    config.p_set = defaults.p_set;
    if (j.contains("p_set")) {
        config.p_set.clear();
        for (const Json& p : j.at("p_set")) config.p_set.push_back(exponent_from_json(p));
    }
    config.trials = j.value("trials", defaults.trials);
    config.seed = j.value("seed", defaults.seed);
    config.rhos = j.value("rhos", defaults.rhos);
    config.min_sep = j.value("min_sep", defaults.min_sep);
    config.box = j.value("box", defaults.box);
}

void to_json(Json& j, const SurveyCounts& counts) {
    j = {{"satisfied", counts.satisfied}, {"verified", counts.verified}, {"violations", counts.violations}};
}

void from_json(const Json& j, SurveyCounts& counts) {
    counts.satisfied = j.at("satisfied").get<std::uint64_t>();
    counts.verified = j.at("verified").get<std::uint64_t>();
    counts.violations = j.at("violations").get<std::uint64_t>();
}

void to_json(Json& j, const SurveyReport& report) {
    j = {{"trials", report.trials},
         {"seed", report.config.seed},
         {"config", report.config},
         {"results", report.results},
         {"histogram", {{"edges", report.histogram_edges}, {"counts", report.histogram_counts}}},
         {"guesses", report.guesses},
         {"errors", report.errors},
         {"violation_log", report.violation_log}};
}

void from_json(const Json& j, SurveyReport& report) {
    report.trials = j.at("trials").get<std::uint64_t>();
    report.config = j.at("config").get<SurveyConfig>();
    report.config.seed = j.at("seed").get<std::uint64_t>();
    report.results = j.at("results").get<std::map<std::string, SurveyCounts>>();
    report.histogram_edges = j.at("histogram").at("edges").get<RealVector>();
    report.histogram_counts = j.at("histogram").at("counts").get<std::vector<std::uint64_t>>();
    report.guesses = j.at("guesses").get<std::uint64_t>();
    report.errors = j.at("errors").get<std::uint64_t>();
    report.violation_log = j.at("violation_log").get<std::vector<std::string>>();
}

std::string disks_csv(std::span<const InclusionDisk> disks) {
    std::ostringstream out;
    out.precision(17);
    out << "center_re,center_im,radius\n";
    for (const InclusionDisk& d : disks) {
        out << d.center.real() << ',' << d.center.imag() << ',' << d.radius << '\n';
    }
    return out.str();
}

}  // namespace wcert
