#include "wcert/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "wcert/conditions.hpp"
#include "wcert/error.hpp"
#include "wcert/weierstrass.hpp"

namespace wcert {

namespace {

constexpr int kRootRetries = 10000;
constexpr int kGuessRetries = 100;
constexpr std::size_t kViolationLogLimit = 20;
// Slack on the conclusions of the conversion and proximity checks.
constexpr double kConclusionSlack = 1e-10;

}  // namespace

Complex Rng::in_disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double theta = 2.0 * std::numbers::pi * uniform();
    return std::polar(r, theta);
}

std::uint64_t mix_seed(std::uint64_t seed) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double GroundTruthInstance::relative_residual() const noexcept {
    double scale = 0.0;
    for (const Complex& c : polynomial.coeffs()) scale = std::max(scale, std::abs(c));
    double worst = 0.0;
    for (const Complex& r : roots) worst = std::max(worst, std::abs(polynomial(r)));
    return worst / scale;
}

GroundTruthInstance polynomial_from_roots(std::span<const Complex> roots, Complex a0) {
    if (roots.size() < 2) throw Error(ErrorKind::invalid_instance, "need at least two roots");
    if (!(std::abs(a0) > 0.0)) throw Error(ErrorKind::invalid_instance, "leading coefficient is zero");
    if (!has_distinct_components(roots)) throw Error(ErrorKind::invalid_instance, "roots repeat");

    ComplexVector coeffs{a0};
    coeffs.reserve(roots.size() + 1);
    for (const Complex& r : roots) {
        coeffs.push_back(Complex{});
        for (std::size_t k = coeffs.size() - 1; k > 0; --k) coeffs[k] -= r * coeffs[k - 1];
    }
    return {ComplexVector(roots.begin(), roots.end()), a0, Polynomial(std::move(coeffs)),
            separation(roots)};
}

GroundTruthInstance random_instance(std::size_t n, std::uint64_t seed, double min_sep, double box) {
    if (n < 2 || !(min_sep > 0.0) || !(box > 0.0)) {
        throw Error(ErrorKind::invalid_instance, "need n >= 2, min_sep > 0 and box > 0");
    }
    Rng rng(seed);
    ComplexVector roots;
    roots.reserve(n);
    while (roots.size() < n) {
        bool placed = false;
        for (int attempt = 0; attempt < kRootRetries && !placed; ++attempt) {
            const Complex candidate{rng.uniform(-box, box), rng.uniform(-box, box)};
            placed = std::all_of(roots.begin(), roots.end(),
                                 [&](Complex r) { return std::abs(r - candidate) >= min_sep; });
            if (placed) roots.push_back(candidate);
        }
        if (!placed) {
            throw Error(ErrorKind::instance_generation,
                        "could not place " + std::to_string(n) + " roots with separation " +
                            std::to_string(min_sep));
        }
    }
    const double magnitude = rng.uniform(0.5, 2.0);
    const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return polynomial_from_roots(roots, std::polar(magnitude, phase));
}

ComplexVector perturbed_guess(const GroundTruthInstance& inst, double rho, std::uint64_t seed) {
    if (!(rho >= 0.0) || !std::isfinite(rho)) throw Error(ErrorKind::domain, "rho must be >= 0");
    Rng rng(seed);
    const double radius = rho * inst.min_separation;
    for (int attempt = 0; attempt < kGuessRetries; ++attempt) {
        ComplexVector x = inst.roots;
        for (Complex& xi : x) xi += rng.in_disk(radius);
        if (has_distinct_components(x)) return x;
    }
    throw Error(ErrorKind::instance_generation, "perturbed guess keeps colliding");
}

ComplexVector match_root_vector(std::span<const Complex> x, std::span<const Complex> roots) {
    const auto assignment = nearest_assignment(x, roots);
    if (!is_permutation_index(assignment, roots.size())) return {};
    ComplexVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = roots[assignment[i]];
    return out;
}

VerificationRecord verify_certificate(const Certificate& cert, const GroundTruthInstance& inst) {
    VerificationRecord rec;
    if (!cert.satisfied) {
        rec.violations.emplace_back("certificate is not satisfied");
        return rec;
    }
    const std::size_t n = inst.roots.size();
    if (cert.disks.size() != n) {
        rec.violations.emplace_back("disk count differs from the number of roots");
        return rec;
    }
    ComplexVector centers(n);
    for (std::size_t i = 0; i < n; ++i) centers[i] = cert.disks[i].center;

    const auto assignment = nearest_assignment(centers, inst.roots);
    rec.bijection = is_permutation_index(assignment, n);
    if (!rec.bijection) rec.violations.emplace_back("nearest assignment is not a bijection");

    rec.contained = true;
    rec.exclusive = true;
    rec.matched_roots.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const InclusionDisk& disk = cert.disks[i];
        const Complex root = inst.roots[assignment[i]];
        rec.matched_roots[i] = root;
        if (!(std::abs(root - disk.center) <= disk.radius * (1.0 + kContainmentSlack))) {
            rec.contained = false;
            std::ostringstream msg;
            msg.precision(17);
            msg << "disk " << i << " misses its root: distance " << std::abs(root - disk.center)
                << " > radius " << disk.radius;
            rec.violations.push_back(msg.str());
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (k == assignment[i]) continue;
            if (std::abs(inst.roots[k] - disk.center) <= disk.radius) {
                rec.exclusive = false;
                rec.violations.push_back("disk " + std::to_string(i) + " holds a second root");
            }
        }
    }
    rec.disjoint = pairwise_disjoint(cert.disks);
    if (!rec.disjoint) rec.violations.emplace_back("disks overlap");
    rec.verified = rec.bijection && rec.contained && rec.exclusive && rec.disjoint;
    return rec;
}

std::uint64_t SurveyReport::total_violations() const noexcept {
    std::uint64_t total = 0;
    for (const auto& [name, counts] : results) total += counts.violations;
    return total;
}

std::vector<std::string> survey_checks() {
    return {"main-localization", "gamma-corollary", "fixed-R-corollary", "prop-localization",
            "proximity-bound",   "convert-1to2",    "convert-2to3",      "convert-2to3s",
            "convert-1to3",      "convert-1to3s"};
}

namespace {

class SurveyRun {
public:
    explicit SurveyRun(const SurveyConfig& config) {
        report_.config = config;
        for (const std::string& name : survey_checks()) report_.results[name] = {};
        report_.histogram_edges = {0.0, 0.01, 0.1, 0.25, 0.5, 0.75, 1.0, 2.0, 10.0};
        report_.histogram_counts.assign(report_.histogram_edges.size(), 0);
    }

    void trial(std::size_t t) {
        const SurveyConfig& cfg = report_.config;
        const std::size_t n_range = cfg.n_max - cfg.n_min + 1;
        const std::size_t n = cfg.n_min + t % n_range;
        const double p = cfg.p_set[(t / n_range) % cfg.p_set.size()];
        const std::uint64_t trial_seed = mix_seed(cfg.seed ^ mix_seed(t));
        ++report_.trials;

        std::optional<GroundTruthInstance> inst;
        try {
            inst = random_instance(n, trial_seed, cfg.min_sep, cfg.box);
        } catch (const Error&) {
            ++report_.errors;
            return;
        }
        const PNormSpec spec = PNormSpec::make(n, p);
        for (std::size_t r = 0; r < cfg.rhos.size(); ++r) {
            try {
                const ComplexVector x = perturbed_guess(*inst, cfg.rhos[r], mix_seed(trial_seed + r + 1));
                ++report_.guesses;
                guess(*inst, x, spec, t, r);
            } catch (const Error&) {
                ++report_.errors;
            }
        }
    }

    SurveyReport finish() && { return std::move(report_); }

private:
    void record(const std::string& check, bool holds, bool conclusion, const std::string& context) {
        if (!holds) return;
        SurveyCounts& counts = report_.results[check];
        ++counts.satisfied;
        if (conclusion) {
            ++counts.verified;
        } else {
            ++counts.violations;
            if (report_.violation_log.size() < kViolationLogLimit) {
                report_.violation_log.push_back(check + " " + context);
            }
        }
    }

    void certificate(const Certificate& cert, const GroundTruthInstance& inst, const std::string& context) {
        if (!cert.satisfied) return;
        const VerificationRecord rec = verify_certificate(cert, inst);
        std::string detail = context;
        if (!rec.violations.empty()) detail += ": " + rec.violations.front();
        record(std::string(to_string(cert.theorem)), true, rec.verified, detail);
    }

    void guess(const GroundTruthInstance& inst, const ComplexVector& x, const PNormSpec& spec,
               std::size_t t, std::size_t r) {
        const Polynomial& f = inst.polynomial;
        const std::string context = "trial " + std::to_string(t) + " rho#" + std::to_string(r) +
                                    " n=" + std::to_string(spec.n) + " p=" + format_exponent(spec.p);

        const Certificate main = certify_main(f, x, spec);
        bin(main.E / main.bound);
        certificate(main, inst, context);
        if (main.satisfied) {
            const VerificationRecord rec = verify_certificate(main, inst);
            const double bound = root_proximity_bound(main.E, spec.a) * (1.0 + kConclusionSlack);
            const double dist = rec.bijection
                                    ? p_norm(componentwise_ratio(difference(x, rec.matched_roots),
                                                                 distance_vector(x)),
                                             spec)
                                    : kInfinity;
            record("proximity-bound", true, dist <= bound, context);

            const double c_mid = 0.5 * (main.c_interval.first + main.c_interval.second);
            certificate(localize_with_c(f, x, spec, c_mid), inst, context);
        }
        certificate(certify_gamma(f, x, spec), inst, context);
        certificate(certify_fixed_R(f, x, spec, gamma_threshold(spec.a)), inst, context);
        conversions(inst, x, spec, main.E, context);
    }

    void conversions(const GroundTruthInstance& inst, const ComplexVector& x, const PNormSpec& spec,
                     double E, const std::string& context) {
        const ComplexVector xi = match_root_vector(x, inst.roots);
        const bool matched = !xi.empty();
        const Polynomial& f = inst.polynomial;
        const ConditionType second{ConditionKind::second, NormForm::componentwise};
        const ConditionType first{ConditionKind::first, NormForm::componentwise};
        const double second_value = matched ? condition_value(second, f, x, spec, xi) : kInfinity;
        // d(xi) needs distinct components, which matched root-vectors have.
        const double first_value = matched ? condition_value(first, f, x, spec, xi) : kInfinity;

        const double tau = 1.0 / (1.0 + std::sqrt(spec.a));
        const double simple_limit = 1.0 / (1.0 + spec.a);
        const std::vector<double> fractions{0.25, 0.5, 1.0};
        const std::vector<double> first_radii{0.05, 0.2, 0.5, 1.0};

        auto third_holds = [&](const ConversionResult& conv) {
            if (!conv.domain_ok) return false;
            return conv.strict_required ? E < *conv.R_out : E <= *conv.R_out;
        };

        for (double R : first_radii) {
            const ConversionResult conv = convert_first_to_second(R, spec.n, spec.p);
            if (matched) {
                record("convert-1to2", second_value <= *conv.R_out, first_value <= R * (1.0 + kConclusionSlack),
                       context);
            }
        }
        for (double frac : fractions) {
            const double R = frac * tau;
            const ConversionResult conv = convert_second_to_third(R, spec.n, spec.p);
            record("convert-2to3", third_holds(conv), second_value <= R * (1.0 + kConclusionSlack), context);
        }
        for (double frac : fractions) {
            const double R = frac * simple_limit;
            const ConversionResult conv = convert_second_to_third_simple(R, spec.n, spec.p);
            record("convert-2to3s", third_holds(conv), second_value <= R * (1.0 + kConclusionSlack), context);
        }
        for (double R : first_radii) {
            const ConversionResult conv = convert_first_to_third(R, spec.n, spec.p);
            record("convert-1to3", third_holds(conv), first_value <= R * (1.0 + kConclusionSlack), context);
            const ConversionResult simple = convert_first_to_third_simple(R, spec.n, spec.p);
            record("convert-1to3s", third_holds(simple), first_value <= R * (1.0 + kConclusionSlack), context);
        }
    }

    void bin(double ratio) {
        const RealVector& edges = report_.histogram_edges;
        std::size_t k = edges.size() - 1;
        while (k > 0 && ratio < edges[k]) --k;
        ++report_.histogram_counts[k];
    }

    SurveyReport report_;
};

}  // namespace

SurveyReport survey(const SurveyConfig& config) {
    if (config.trials < 1) throw Error(ErrorKind::domain, "survey needs at least one trial");
    if (config.n_min < 2 || config.n_max < config.n_min) throw Error(ErrorKind::domain, "bad degree range");
    if (config.p_set.empty() || config.rhos.empty()) throw Error(ErrorKind::domain, "empty p or rho set");
    for (double p : config.p_set) conjugate_exponent(p);

    SurveyRun run(config);
    for (std::size_t t = 0; t < config.trials; ++t) run.trial(t);
    return std::move(run).finish();
}

}  // namespace wcert
