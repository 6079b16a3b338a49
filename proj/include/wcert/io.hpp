#pragma once

// JSON forms of inputs and outputs. Exponents that may be infinite (p, q) are
// written as the string "inf"; everything else is a plain JSON number.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "wcert/certification.hpp"
#include "wcert/conditions.hpp"
#include "wcert/oracle.hpp"
#include "wcert/weierstrass.hpp"

namespace wcert {

using Json = nlohmann::json;

/// Summary of a solve run as written by the CLI.
struct SolveReport {
    IterationStatus status = IterationStatus::max_iterations;
    std::size_t iterations = 0;
    double final_correction_norm = 0.0;
    ComplexVector final_iterate;
    RealVector correction_norms;

    static SolveReport from_trace(const IterationTrace& trace);
    bool operator==(const SolveReport&) const = default;
};

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);
Json complex_vector_to_json(std::span<const Complex> v);
ComplexVector complex_vector_from_json(const Json& j);

Json exponent_to_json(double p);
double exponent_from_json(const Json& j);

/// { "coeffs": [[re, im], ...] } leading-to-constant.
Polynomial polynomial_from_json(const Json& j);
Json polynomial_to_json(const Polynomial& f);
/// { "guess": [[re, im], ...] }.
ComplexVector guess_from_json(const Json& j);
Json guess_to_json(std::span<const Complex> x);

/// Reads and parses a JSON file; throws Json::exception on malformed input and
/// std::runtime_error when the file cannot be opened.
Json read_json_file(const std::filesystem::path& path);

void to_json(Json& j, const InclusionDisk& disk);
void from_json(const Json& j, InclusionDisk& disk);
void to_json(Json& j, const Certificate& cert);
void from_json(const Json& j, Certificate& cert);
void to_json(Json& j, const ConditionType& type);
void from_json(const Json& j, ConditionType& type);
void to_json(Json& j, const ConversionResult& result);
void from_json(const Json& j, ConversionResult& result);
void to_json(Json& j, const SolveReport& report);
void from_json(const Json& j, SolveReport& report);
void to_json(Json& j, const SurveyConfig& config);
void from_json(const Json& j, SurveyConfig& config);
void to_json(Json& j, const SurveyCounts& counts);
void from_json(const Json& j, SurveyCounts& counts);
void to_json(Json& j, const SurveyReport& report);
void from_json(const Json& j, SurveyReport& report);

/// center_re,center_im,radius per line, with a header row.
std::string disks_csv(std::span<const InclusionDisk> disks);

}  // namespace wcert
