#pragma once

// Ground truth for testing certificates: polynomials expanded from known roots,
// seeded random instances, root-to-disk matching and the randomized survey.

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "wcert/certification.hpp"
#include "wcert/numerics.hpp"

namespace wcert {

/// Seeded generator shared by every randomized routine. The engine is
/// std::mt19937_64, whose output sequence is fixed by the standard; doubles are
/// built from the top 53 bits so results do not depend on the standard
/// library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform in the disk |z| <= radius.
    Complex in_disk(double radius);

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer, used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed) noexcept;

struct GroundTruthInstance {
    ComplexVector roots;
    Complex leading;
    Polynomial polynomial;
    double min_separation;

    /// max_i |f(xi_i)| / max_k |c_k|, the residual of the expansion at its roots.
    double relative_residual() const noexcept;
};

/// a0 * prod (z - xi_i) by repeated convolution. Throws invalid_instance for
/// repeated roots, a zero a0 or fewer than two roots.
GroundTruthInstance polynomial_from_roots(std::span<const Complex> roots, Complex a0);

/// Roots uniform in the square of half-width `box`, each redrawn until it is at
/// least min_sep from the roots already accepted; |a0| uniform in [0.5, 2].
GroundTruthInstance random_instance(std::size_t n, std::uint64_t seed, double min_sep, double box);

/// xi_i plus a perturbation uniform in the disk of radius rho * delta(xi).
ComplexVector perturbed_guess(const GroundTruthInstance& inst, double rho, std::uint64_t seed);

struct VerificationRecord {
    bool verified = false;
    bool bijection = false;
    bool contained = false;  // matched root inside its disk
    bool exclusive = false;  // no disk holds a second root
    bool disjoint = false;
    // matched_roots[i] is the root assigned to disk i (or to guess component i).
    ComplexVector matched_roots;
    std::vector<std::string> violations;
};

/// Relative slack on disk membership, covering rounding in the radii.
inline constexpr double kContainmentSlack = 1e-12;

/// Matches roots to disks by greedy nearest assignment and checks that the
/// match is a bijection, every disk holds its root and no other, and the disks
/// are pairwise disjoint.
VerificationRecord verify_certificate(const Certificate& cert, const GroundTruthInstance& inst);

/// Root-vector ordered to follow x by nearest assignment; empty if that
/// assignment is not a bijection.
ComplexVector match_root_vector(std::span<const Complex> x, std::span<const Complex> roots);

struct SurveyConfig {
    std::size_t n_min = 2;
    std::size_t n_max = 12;
    std::vector<double> p_set{1.0, 2.0, kInfinity};
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    std::vector<double> rhos{0.0, 1e-3, 1e-2, 3e-2, 0.1, 0.25};
    double min_sep = 0.25;
    double box = 2.0;

    bool operator==(const SurveyConfig&) const = default;
};

struct SurveyCounts {
    std::uint64_t satisfied = 0;
    std::uint64_t verified = 0;
    std::uint64_t violations = 0;

    bool operator==(const SurveyCounts&) const = default;
};

struct SurveyReport {
    SurveyConfig config;
    std::uint64_t trials = 0;
    std::uint64_t guesses = 0;
    std::uint64_t errors = 0;
    std::map<std::string, SurveyCounts> results;
    // Histogram of E / bound for the main theorem. counts[k] covers
    // [edges[k], edges[k+1]); the last bin is everything from edges.back() on.
    RealVector histogram_edges;
    std::vector<std::uint64_t> histogram_counts;
    std::vector<std::string> violation_log;

    std::uint64_t total_violations() const noexcept;
    bool operator==(const SurveyReport&) const = default;
};

/// Keys of SurveyReport::results.
std::vector<std::string> survey_checks();

SurveyReport survey(const SurveyConfig& config);

}  // namespace wcert
