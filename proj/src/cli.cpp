#include "wcert/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "wcert/error.hpp"
#include "wcert/io.hpp"

namespace wcert::cli {

namespace {

// Raised for anything the exit-code table classifies as invalid input.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text) {
    const auto parse = [&](std::string_view s) {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
            throw InvalidInput("cannot parse number '" + text + "'");
        }
        return v;
    };
    // Fractions such as 1/3 are accepted for convenience.
    const auto slash = text.find('/');
    const double value = slash == std::string::npos
                             ? parse(text)
                             : parse(std::string_view(text).substr(0, slash)) /
                                   parse(std::string_view(text).substr(slash + 1));
    if (!std::isfinite(value)) throw InvalidInput("number '" + text + "' is not finite");
    return value;
}

struct Output {
    std::ostream& out;
    std::optional<std::string> path;

    void write(const Json& j) const {
        const std::string text = j.dump(2) + "\n";
        if (!path) {
            out << text;
            return;
        }
        std::ofstream file(*path, std::ios::binary);
        if (!file) throw InvalidInput("cannot write " + *path);
        file << text;
    }
};

Polynomial load_polynomial(const std::string& path) { return polynomial_from_json(read_json_file(path)); }

ComplexVector load_guess(const std::string& path, const Polynomial& f) {
    ComplexVector x = guess_from_json(read_json_file(path));
    if (x.size() != f.degree()) {
        throw InvalidInput("guess has " + std::to_string(x.size()) + " components, polynomial degree is " +
                           std::to_string(f.degree()));
    }
    if (!has_distinct_components(x)) throw InvalidInput("guess has repeated components");
    return x;
}

struct CertifyArgs {
    std::string poly, guess, p, theorem = "main", R, disks_csv;
    std::optional<std::string> out;
};

int cmd_certify(const CertifyArgs& args, std::ostream& out, std::ostream& err) {
    const Polynomial f = load_polynomial(args.poly);
    const ComplexVector x = load_guess(args.guess, f);
    const PNormSpec spec = PNormSpec::make(f.degree(), parse_exponent(args.p));

    Certificate cert;
    if (args.theorem == "main") {
        cert = certify_main(f, x, spec);
    } else if (args.theorem == "gamma") {
        cert = certify_gamma(f, x, spec);
    } else if (args.theorem == "fixedR") {
        if (args.R.empty()) throw InvalidInput("--theorem fixedR needs --R");
        const double R = parse_real(args.R);
        if (!(R >= 0.0 && R <= gamma_threshold(spec.a) * (1.0 + 1e-15))) {
            err << "R = " << R << " lies outside [0, 1/(2a+2)] = [0, " << gamma_threshold(spec.a) << "]\n";
            return kUnsatisfied;
        }
        cert = certify_fixed_R(f, x, spec, R);
    } else {
        throw InvalidInput("unknown theorem '" + args.theorem + "'");
    }

    Output{out, args.out}.write(cert);
    if (!args.disks_csv.empty()) {
        std::ofstream csv(args.disks_csv, std::ios::binary);
        if (!csv) throw InvalidInput("cannot write " + args.disks_csv);
        csv << disks_csv(cert.disks);
    }
    if (!cert.satisfied) {
        err << "not certified: " << cert.reason << "\n";
        return kUnsatisfied;
    }
    return kSuccess;
}

struct SolveArgs {
    std::string poly, guess, p = "inf";
    double tol = 1e-12;
    int max_iter = 100;
    bool certify_first = false;
    std::optional<std::string> out;
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    if (args.max_iter < 1) throw InvalidInput("--max-iter must be at least 1");
    if (!(args.tol > 0.0)) throw InvalidInput("--tol must be positive");
    const Polynomial f = load_polynomial(args.poly);
    const ComplexVector x = load_guess(args.guess, f);

    if (args.certify_first) {
        const PNormSpec spec = PNormSpec::make(f.degree(), parse_exponent(args.p));
        const Certificate cert = certify_main(f, x, spec);
        if (!cert.satisfied) {
            err << "initial guess not certified: " << cert.reason << "\n";
            return kUnsatisfied;
        }
    }

    const IterationTrace trace = iterate(f, x, {args.max_iter, args.tol});
    Output{out, args.out}.write(SolveReport::from_trace(trace));
    if (trace.status != IterationStatus::converged) {
        err << "iteration ended with status " << to_string(trace.status) << "\n";
        return kUnsatisfied;
    }
    return kSuccess;
}

struct ConvertArgs {
    std::string type, R, p;
    long n = 0;
    std::optional<std::string> out;
};

int cmd_convert(const ConvertArgs& args, std::ostream& out, std::ostream& err) {
    using Converter = std::function<ConversionResult(double, std::size_t, double)>;
    static const std::map<std::string, Converter> converters{
        {"1to2", convert_first_to_second},
        {"2to3", convert_second_to_third},
        {"2to3s", convert_second_to_third_simple},
        {"1to3", convert_first_to_third},
        {"1to3s", convert_first_to_third_simple},
    };
    const auto it = converters.find(args.type);
    if (it == converters.end()) throw InvalidInput("unknown conversion type '" + args.type + "'");
    if (args.n < 2) throw InvalidInput("--n must be at least 2");
    const double R = parse_real(args.R);
    const double p = parse_exponent(args.p);

    const ConversionResult result = it->second(R, static_cast<std::size_t>(args.n), p);
    Output{out, args.out}.write(result);
    if (!result.domain_ok) {
        err << "R = " << R << " lies outside the domain of " << args.type << "\n";
        return kUnsatisfied;
    }
    return kSuccess;
}

struct SurveyArgs {
    std::optional<std::size_t> trials;
    std::optional<std::uint64_t> seed;
    std::string config;
    std::optional<std::string> out;
};

int cmd_survey(const SurveyArgs& args, std::ostream& out, std::ostream& err) {
    SurveyConfig config;
    if (!args.config.empty()) config = read_json_file(args.config).get<SurveyConfig>();
    if (args.trials) config.trials = *args.trials;
    if (args.seed) config.seed = *args.seed;
    if (config.trials < 1) throw InvalidInput("--trials must be at least 1");

    const SurveyReport report = survey(config);
    Output{out, args.out}.write(report);
    if (report.total_violations() != 0) {
        err << "soundness violations: " << report.total_violations() << "\n";
        for (const std::string& line : report.violation_log) err << "  " << line << "\n";
        return kSoundnessViolation;
    }
    return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified simultaneous polynomial root finding"};
    app.require_subcommand(1);

    CertifyArgs certify_args;
    auto* certify = app.add_subcommand("certify", "Certify inclusion disks around a guess");
    certify->add_option("--poly", certify_args.poly, "Polynomial JSON file")->required();
    certify->add_option("--guess", certify_args.guess, "Guess JSON file")->required();
    certify->add_option("--p", certify_args.p, "Norm exponent: 1, 2, inf or any decimal >= 1")->required();
    certify->add_option("--theorem", certify_args.theorem, "main, gamma or fixedR");
    certify->add_option("--R", certify_args.R, "Radius for --theorem fixedR");
    certify->add_option("--out", certify_args.out, "Write the certificate here instead of stdout");
    certify->add_option("--disks-csv", certify_args.disks_csv, "Also write the disks as CSV");

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Run the Weierstrass iteration");
    solve->add_option("--poly", solve_args.poly, "Polynomial JSON file")->required();
    solve->add_option("--guess", solve_args.guess, "Guess JSON file")->required();
    solve->add_option("--tol", solve_args.tol, "Relative correction-norm tolerance");
    solve->add_option("--max-iter", solve_args.max_iter, "Maximum number of steps");
    solve->add_flag("--certify-first", solve_args.certify_first, "Refuse to iterate from an uncertified guess");
    solve->add_option("--p", solve_args.p, "Norm exponent used by --certify-first");
    solve->add_option("--out", solve_args.out, "Write the trace summary here instead of stdout");

    ConvertArgs convert_args;
    auto* convert = app.add_subcommand("convert", "Convert a convergence radius between condition types");
    convert->add_option("--type", convert_args.type, "1to2, 2to3, 2to3s, 1to3 or 1to3s")->required();
    convert->add_option("--R", convert_args.R, "Source radius (decimal or a/b)")->required();
    convert->add_option("--n", convert_args.n, "Polynomial degree")->required();
    convert->add_option("--p", convert_args.p, "Norm exponent")->required();
    convert->add_option("--out", convert_args.out, "Write the result here instead of stdout");

    SurveyArgs survey_args;
    auto* survey_cmd = app.add_subcommand("survey", "Randomized soundness survey against known roots");
    survey_cmd->add_option("--trials", survey_args.trials, "Number of random instances");
    survey_cmd->add_option("--seed", survey_args.seed, "Base seed");
    survey_cmd->add_option("--config", survey_args.config, "Survey configuration JSON file");
    survey_cmd->add_option("--out", survey_args.out, "Write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInvalidInput;
    }

    try {
        if (*certify) return cmd_certify(certify_args, out, err);
        if (*solve) return cmd_solve(solve_args, out, err);
        if (*convert) return cmd_convert(convert_args, out, err);
        return cmd_survey(survey_args, out, err);
    } catch (const Json::exception& e) {
        err << "invalid JSON input: " << e.what() << "\n";
    } catch (const Error& e) {
        err << "invalid input: " << e.what() << "\n";
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
    }
    return kInvalidInput;
}

}  // namespace wcert::cli
