#pragma once

// Computable localization certificates built on E_f(x) = ||W_f(x) / d(x)||_p.
//
// A satisfied certificate states that f has only simple zeros and that the
// closed disks |z - x_i| <= c |W_i(x)| are pairwise disjoint with exactly one
// zero of f in each.

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wcert/numerics.hpp"

namespace wcert {

/// Relative amount by which E is inflated before it is compared with a bound.
inline constexpr double kInflation = 1e-12;

/// Radicands of alpha with magnitude up to kRadicandSlack are rounding noise at
/// the double root t = 1/(1+sqrt(a))^2 and are treated as zero. This can only
/// raise alpha, by at most a relative 1e-7.
inline constexpr double kRadicandSlack = 1e-14;

struct InclusionDisk {
    Complex center;
    double radius = 0.0;

    bool contains(Complex z) const noexcept { return std::abs(z - center) <= radius; }
    bool operator==(const InclusionDisk&) const = default;
};

/// True iff |c_i - c_j| > r_i + r_j for every pair i != j.
bool pairwise_disjoint(std::span<const InclusionDisk> disks) noexcept;

enum class Theorem { main_localization, gamma_corollary, fixed_r_corollary, prop_localization };

std::string_view to_string(Theorem theorem) noexcept;
Theorem theorem_from_string(std::string_view name);

struct Certificate {
    Theorem theorem = Theorem::main_localization;
    double p = kInfinity;
    double q = 1.0;
    double a = 1.0;
    double b = 1.0;
    double E = 0.0;  // as computed; comparisons use E * (1 + inflation)
    double bound = 0.0;
    bool satisfied = false;
    bool strict_boundary_case = false;
    std::pair<double, double> c_interval{0.0, 0.0};
    double c_used = 0.0;
    double inflation = kInflation;
    std::vector<InclusionDisk> disks;
    // Human-readable cause when !satisfied. Not part of the serialized form.
    std::string reason;

    bool operator==(const Certificate& other) const;
};

/// ||W_f(x) / d(x)||_p without inflation.
double compute_E(const Polynomial& f, std::span<const Complex> x, const PNormSpec& spec);

/// 2 / (1 - (a-1)t + sqrt((1 - (a-1)t)^2 - 4t)), defined for 0 <= t <= 1/(1+sqrt(a))^2.
double alpha(double t, double a);
/// 2 / (1 - (a-1)t), defined for (a-1)t < 1.
double beta(double t, double a);
/// 1 / (1 - (a+1)t), defined for 0 <= t < 1/(a+1).
double gamma(double t, double a);

/// 1/(1+sqrt(a))^2, the threshold of the main localization theorem.
double main_threshold(double a) noexcept;
/// 1/(2(a+1)).
double gamma_threshold(double a) noexcept;

/// b * c * ||u / d(x)||_p < 1, which makes the disks |z - x_i| <= c|u_i| disjoint.
bool disjointness_check(std::span<const Complex> x, std::span<const Complex> u, double c,
                        const PNormSpec& spec);

/// Disks centered at x_i of radius (1/w_i) * sum_j w_j |W_j(x)|; their union holds every zero.
std::vector<InclusionDisk> braess_hadeler_disks(const Polynomial& f, std::span<const Complex> x,
                                                std::span<const double> weights);

/// Checks b c E < 1 and 1/c + aE/(1 - cE) <= 1 for a caller-chosen c >= 1.
Certificate localize_with_c(const Polynomial& f, std::span<const Complex> x, const PNormSpec& spec,
                            double c);

/// E <= 1/(1+sqrt(a))^2 with c in [alpha(E), beta(E)]; c_used defaults to alpha(E).
Certificate certify_main(const Polynomial& f, std::span<const Complex> x, const PNormSpec& spec);

/// Same with c_used overridden; c must lie in the admissible interval or the
/// certificate is returned unsatisfied.
Certificate certify_main(const Polynomial& f, std::span<const Complex> x, const PNormSpec& spec,
                         double c);

/// E <= 1/(2(a+1)) with c in [gamma(E), beta(E)]; c_used defaults to gamma(E).
Certificate certify_gamma(const Polynomial& f, std::span<const Complex> x, const PNormSpec& spec);

/// E <= R for 0 <= R <= 1/(2a+2); disks of radius |W_i| / (1 - (a+1)R).
Certificate certify_fixed_R(const Polynomial& f, std::span<const Complex> x, const PNormSpec& spec,
                            double R);

/// alpha(E) * E: some root-vector xi has ||(x - xi)/d(x)||_p at most this.
double root_proximity_bound(double E, double a);

}  // namespace wcert
