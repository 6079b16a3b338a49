// One line per acceptance criterion; exits nonzero if any fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "support/cli_runner.hpp"
#include "support/oracles.hpp"
#include "wcert/certification.hpp"
#include "wcert/cli.hpp"
#include "wcert/conditions.hpp"
#include "wcert/io.hpp"
#include "wcert/oracle.hpp"
#include "wcert/weierstrass.hpp"

using namespace wcert;

namespace {

// Tolerances, pinned.
constexpr double kIdentityTol = 1e-15;        // criterion 3
constexpr double kSimpleTol = 1e-14;          // criterion 4
constexpr double kInverseTol = 1e-12;         // criterion 5
constexpr double kCompositionTol = 1e-13;     // criterion 6
constexpr double kOrderingSlack = 1e-12;      // criterion 8, relative
constexpr double kRatioBound = 10.0;          // criterion 9, bound on delta * e_{k+1} / e_k^2
constexpr double kRatioGrowth = 10.0;         // criterion 9, per-step growth allowed over the tail
constexpr double kRoundoffFloor = 1e-10;      // criterion 9, errors below this are round-off
constexpr double kSolveTol = 1e-13;           // criterion 9
constexpr double kScaleTol = 1e-13;           // criterion 11
constexpr double kTranslationTol = 1e-12;     // criterion 11
constexpr double kFixedPointTol = 1e-12;      // criterion 11
constexpr std::size_t kSurveyTrials = 10000;  // criteria 1 and 10

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& check) {
    Outcome o{false, ""};
    try {
        o = check();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("C%-2d %s  %-28s %s\n", id, o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

SurveyReport& survey_report() {
    static SurveyReport r = [] {
        SurveyConfig config;
        config.trials = kSurveyTrials;
        config.seed = 1;
        return survey(config);
    }();
    return r;
}

Outcome c1() {
    const SurveyReport& r = survey_report();
    std::uint64_t satisfied = 0;
    std::uint64_t violations = 0;
    for (const char* key : {"main-localization", "gamma-corollary", "fixed-R-corollary"}) {
        satisfied += r.results.at(key).satisfied;
        violations += r.results.at(key).violations;
    }
    const bool ok = r.trials >= 10000 && violations == 0 && satisfied > 0 && r.errors == 0;
    return {ok, fmt("trials=%llu certificates=%llu violations=%llu", (unsigned long long)r.trials,
                    (unsigned long long)satisfied, (unsigned long long)violations)};
}

Outcome c2() {
    const Certificate c = certify_main(Polynomial({1.0, 0.0, 0.0}), ComplexVector{-1.0, 1.0},
                                       PNormSpec::make(2, kInfinity));
    const bool ok = c.E == 0.25 && c.bound == 0.25 && c.strict_boundary_case && !c.satisfied;
    return {ok, fmt("E=%.17g bound=%.17g strict=%d satisfied=%d", c.E, c.bound, c.strict_boundary_case, c.satisfied)};
}

Outcome c3() {
    double worst = 0.0;
    for (std::size_t n = 2; n <= 10; ++n) {
        const double got = *convert_first_to_second(classical_radius(ClassicalTheorem::dochev, n), n, kInfinity).R_out;
        worst = std::max(worst, std::abs(got - classical_radius(ClassicalTheorem::wang_zhao, n)));
    }
    return {worst <= kIdentityTol, fmt("max |diff| = %.3g over n=2..10", worst)};
}

Outcome c4() {
    double worst = 0.0;
    bool conservative = true;
    for (std::size_t n = 2; n <= 10; ++n) {
        const ConversionResult r = convert_second_to_third_simple(1.0 / (2.0 * n + 2.0), n, kInfinity);
        if (!r.domain_ok) return {false, fmt("n=%zu out of domain", n)};
        worst = std::max(worst, std::abs(*r.R_out - 1.0 / (3.0 * n + 2.0)));
        conservative &= 1.0 / (3.0 * n + 2.0) >= 1.0 / (3.0 * n + 3.0);
    }
    return {worst <= kSimpleTol && conservative,
            fmt("max |diff| = %.3g, 1/(3n+2) >= 1/(3n+3): %s", worst, conservative ? "yes" : "no")};
}

Outcome c5() {
    double worst = 0.0;
    bool increasing = true;
    for (double a : {1.0, 2.0, 4.0}) {
        const double end = 1.0 / (1.0 + std::sqrt(a));
        double prev = -1.0;
        for (int k = 1; k <= 200; ++k) {
            const double R = end * k / 200.0;
            const double g = second_to_third_map(R, a);
            increasing &= g > prev;
            prev = g;
            worst = std::max(worst, std::abs(second_to_third_inverse(g, a) - R));
        }
    }
    return {worst <= kInverseTol && increasing,
            fmt("max |h(g(R)) - R| = %.3g, g increasing: %s", worst, increasing ? "yes" : "no")};
}

Outcome c6() {
    double worst = 0.0;
    int points = 0;
    for (std::size_t n = 2; n <= 12; ++n) {
        for (double p : {1.0, 1.5, 2.0, 4.0, kInfinity}) {
            const PNormSpec spec = PNormSpec::make(n, p);
            const double denom = 1.0 - spec.b + std::sqrt(spec.a);
            const double end = denom > 0.0 ? 1.0 / denom : 10.0;
            for (int k = 1; k <= 100; ++k) {
                const double R = end * k / 100.0;
                const ConversionResult direct = convert_first_to_third(R, n, p);
                const ConversionResult mid = convert_first_to_second(R, n, p);
                const ConversionResult composed = convert_second_to_third(*mid.R_out, n, p);
                if (!direct.domain_ok || !composed.domain_ok)
                    return {false, fmt("domain mismatch at n=%zu p=%g R=%g", n, p, R)};
                worst = std::max(worst, std::abs(*direct.R_out - *composed.R_out));
                ++points;
            }
        }
    }
    return {worst <= kCompositionTol, fmt("max |diff| = %.3g over %d grid points", worst, points)};
}

Outcome c7() {
    Rng rng(7001);
    int failed = 0;
    int checked = 0;
    while (checked < 10000) {
        const std::size_t n = 2 + checked % 9;
        const double p = std::vector<double>{1.0, 2.0, kInfinity}[checked % 3];
        const ComplexVector u = test::random_vector(rng, n, 2.0);
        ComplexVector v = u;
        const double spread = std::vector<double>{1e-3, 0.1, 1.0, 3.0}[(checked / 3) % 4];
        for (Complex& z : v) z += rng.in_disk(spread);
        if (!has_distinct_components(u) || !has_distinct_components(v)) continue;
        if (!prop41_inequality_holds(u, v, PNormSpec::make(n, p))) ++failed;
        ++checked;
    }
    return {failed == 0, fmt("%d pairs, %d failures", checked, failed)};
}

Outcome c8() {
    int failed = 0;
    int points = 0;
    auto le = [](double x, double y) { return x <= y * (1 + kOrderingSlack); };
    for (double a : {1.0, 1.5, 2.0, 4.0, 9.0}) {
        const double mu = main_threshold(a);
        const double g_end = gamma_threshold(a);
        for (int k = 0; k <= 10000; ++k) {
            const double t = mu * k / 10000.0;
            const double al = alpha(t, a);
            const double be = beta(t, a);
            bool ok = 1.0 <= al && le(al, be);
            if (t <= g_end) {
                const double ga = gamma(t, a);
                ok = ok && le(al, ga) && le(ga, be);
            }
            failed += !ok;
            ++points;
        }
    }
    return {failed == 0, fmt("%d grid points, %d failures", points, failed)};
}

Outcome c9() {
    // Linear convergence would make e_{k+1}/e_k^2 grow like 1/e_k; quadratic keeps it bounded.
    double worst_scaled = 0.0;
    double worst_growth = 0.0;
    int runs = 0;
    for (std::size_t n : {2, 3, 5}) {
        const double rho = classical_radius(ClassicalTheorem::dochev, n) * 0.99;
        for (std::uint64_t seed = 1; seed <= 200; ++seed) {
            const GroundTruthInstance inst = random_instance(n, mix_seed(seed * 31 + n), 0.25, 2.0);
            const ComplexVector x0 = perturbed_guess(inst, rho, mix_seed(seed));
            const IterationTrace trace =
                iterate(inst.polynomial, x0, {100, kSolveTol}, std::span<const Complex>(inst.roots));
            ++runs;
            const double scale = std::max(1.0, max_modulus(inst.roots));
            if (trace.status != IterationStatus::converged)
                return {false, fmt("n=%zu seed=%llu status %s", n, (unsigned long long)seed,
                                   std::string(to_string(trace.status)).c_str())};
            std::vector<double> ratios;
            for (std::size_t k = 0; k + 1 < trace.errors.size(); ++k) {
                if (trace.errors[k + 1] <= kRoundoffFloor * scale || trace.errors[k] == 0.0) break;
                ratios.push_back(trace.errors[k + 1] / (trace.errors[k] * trace.errors[k]));
            }
            for (double r : ratios) {
                if (!std::isfinite(r)) return {false, "non-finite ratio"};
                worst_scaled = std::max(worst_scaled, r * inst.min_separation);
            }
            const std::size_t tail = ratios.size() > 3 ? ratios.size() - 3 : 0;
            for (std::size_t k = std::max<std::size_t>(tail, 1); k < ratios.size(); ++k)
                worst_growth = std::max(worst_growth, ratios[k] / ratios[k - 1]);
        }
    }
    const bool ok = worst_scaled <= kRatioBound && worst_growth <= kRatioGrowth;
    return {ok, fmt("%d runs converged, max delta*e_{k+1}/e_k^2 = %.3g, max tail growth = %.3g", runs, worst_scaled,
                    worst_growth)};
}

Outcome c10() {
    const SurveyCounts& c = survey_report().results.at("proximity-bound");
    return {c.violations == 0 && c.satisfied > 0,
            fmt("checked=%llu violations=%llu", (unsigned long long)c.satisfied, (unsigned long long)c.violations)};
}

Outcome c11() {
    Rng rng(11001);
    int scale_fail = 0;
    int shift_fail = 0;
    int fixed_fail = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + trial % 11;
        const GroundTruthInstance inst = random_instance(n, rng.next(), 0.25, 2.0);
        const ComplexVector x = perturbed_guess(inst, 0.3, rng.next());

        const Complex c = std::polar(rng.uniform(0.1, 10.0), rng.uniform(0.0, 6.283185307179586));
        ComplexVector scaled(inst.polynomial.coeffs().begin(), inst.polynomial.coeffs().end());
        for (Complex& z : scaled) z *= c;
        const ComplexVector w = weierstrass_correction(inst.polynomial, x);
        // Tolerances are relative to the larger of |W| and the rounding scale of
        // evaluating it, sum_k |c_k||x_i|^(n-k) / |a0 prod (x_i - x_j)|.
        scale_fail += max_modulus(difference(w, weierstrass_correction(Polynomial(scaled), x))) >
                      kScaleTol * std::max(max_modulus(w), test::correction_error_scale(inst.polynomial, x));

        const Complex t = rng.in_disk(10.0);
        ComplexVector roots_t = inst.roots;
        ComplexVector x_t = x;
        for (Complex& z : roots_t) z += t;
        for (Complex& z : x_t) z += t;
        const GroundTruthInstance shifted = polynomial_from_roots(roots_t, inst.leading);
        const ComplexVector ws = weierstrass_correction(shifted.polynomial, x_t);
        shift_fail += max_modulus(difference(w, ws)) >
                      kTranslationTol * std::max(max_modulus(w), test::correction_error_scale(shifted.polynomial, x_t));

        const ComplexVector next = weierstrass_step(inst.polynomial, inst.roots);
        fixed_fail += max_modulus(difference(next, inst.roots)) >
                      kFixedPointTol * std::max(1.0, test::correction_error_scale(inst.polynomial, inst.roots));
    }
    return {scale_fail + shift_fail + fixed_fail == 0,
            fmt("1000 cases each; failures scale=%d translation=%d fixed-point=%d", scale_fail, shift_fail, fixed_fail)};
}

Outcome c12() {
    using test::fixture;
    using test::run_cli;
    struct Case {
        std::vector<std::string> args;
        int code;
    };
    const std::vector<Case> cases{
        {{"certify", "--poly", fixture("z2_minus_1.json"), "--guess", fixture("guess_shifted.json"), "--p", "inf"}, 0},
        {{"certify", "--poly", fixture("z2.json"), "--guess", fixture("guess_boundary.json"), "--p", "inf"}, 2},
        {{"certify", "--poly", fixture("malformed.json"), "--guess", fixture("guess_shifted.json"), "--p", "inf"}, 3},
        {{"solve", "--poly", fixture("z2_minus_1.json"), "--guess", fixture("guess_far.json"), "--tol", "1e-12"}, 0},
        {{"solve", "--poly", fixture("z2.json"), "--guess", fixture("guess_boundary.json"), "--certify-first", "--p",
          "inf"}, 2},
        {{"solve", "--poly", fixture("z2_minus_1.json"), "--guess", fixture("guess_far.json"), "--max-iter", "0"}, 3},
        {{"convert", "--type", "1to2", "--R", "1/3", "--n", "2", "--p", "inf"}, 0},
        {{"convert", "--type", "2to3s", "--R", "0.1", "--n", "4", "--p", "inf"}, 0},
        {{"convert", "--type", "2to3", "--R", "0.6", "--n", "2", "--p", "inf"}, 2},
        {{"convert", "--type", "9to9", "--R", "0.1", "--n", "2", "--p", "inf"}, 3},
        {{"survey", "--trials", "1", "--seed", "5"}, 0},
    };
    int bad_codes = 0;
    int bad_round_trips = 0;
    for (const Case& c : cases) {
        const test::CliResult r = run_cli(c.args);
        bad_codes += r.code != c.code;
        if (r.out.empty()) continue;
        // Every JSON output re-emits to the same bytes after a parse into its type.
        const Json j = Json::parse(r.out);
        Json back;
        if (c.args[0] == "certify") back = j.get<Certificate>();
        if (c.args[0] == "solve") back = j.get<SolveReport>();
        if (c.args[0] == "convert") back = j.get<ConversionResult>();
        if (c.args[0] == "survey") back = j.get<SurveyReport>();
        bad_round_trips += back.dump(2) + "\n" != r.out;
    }
    const std::string a = run_cli({"survey", "--trials", "50", "--seed", "9"}).out;
    const std::string b = run_cli({"survey", "--trials", "50", "--seed", "9"}).out;
    const bool identical = !a.empty() && a == b;
    return {bad_codes == 0 && bad_round_trips == 0 && identical,
            fmt("%zu fixtures, wrong exit codes=%d, round-trip mismatches=%d, survey byte-identical: %s", cases.size(),
                bad_codes, bad_round_trips, identical ? "yes" : "no")};
}

}  // namespace

int main() {
    report(1, "certificate soundness", c1);
    report(2, "boundary counterexample", c2);
    report(3, "first-to-second identity", c3);
    report(4, "second-to-third simple", c4);
    report(5, "g/h inverse pair", c5);
    report(6, "composition identity", c6);
    report(7, "pairwise inequality", c7);
    report(8, "radius-function ordering", c8);
    report(9, "quadratic convergence", c9);
    report(10, "proximity bound", c10);
    report(11, "engine invariants", c11);
    report(12, "cli contract", c12);
    std::printf("%s: %d of 12 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
