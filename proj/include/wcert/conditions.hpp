#pragma once

// Initial-condition types and closed-form conversion of their radii.
//
//   first:  ||(x - xi) / d(xi)||_p <= R   (or ||x - xi||_p / delta(xi) <= R)
//   second: ||(x - xi) / d(x)||_p  <= R   (or ||x - xi||_p / delta(x)  <= R)
//   third:  ||W_f(x) / d(x)||_p    <= R   (or ||W_f(x)||_p / delta(x)  <= R)
//
// Only the third type needs nothing beyond f and x, so it is the one a caller
// can actually check. The first two take the true root-vector and live here
// for tests and oracle work.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "wcert/numerics.hpp"

namespace wcert {

enum class ConditionKind { first, second, third };
enum class NormForm { componentwise, aggregate };

struct ConditionType {
    ConditionKind kind = ConditionKind::first;
    NormForm form = NormForm::componentwise;

    bool operator==(const ConditionType&) const = default;
};

std::string_view to_string(ConditionKind kind) noexcept;
ConditionKind condition_kind_from_string(std::string_view name);

struct ConversionResult {
    ConditionType source;
    ConditionType target;
    double R_in = 0.0;
    std::optional<double> R_out;  // absent iff !domain_ok
    bool domain_ok = false;
    // The target inequality must be strict: the n = 2, p = inf boundary case.
    bool strict_required = false;

    bool operator==(const ConversionResult&) const = default;
};

/// Whether ||(u-v)/d(u)||_p >= (1 - b||(u-v)/d(u)||_p) ||(u-v)/d(v)||_p, allowing
/// a relative rounding slack of 1e-12. Expected to hold for every input.
bool prop41_inequality_holds(std::span<const Complex> u, std::span<const Complex> v,
                             const PNormSpec& spec);

// Converters. Each maps a radius R of the source type to the radius (or the
// third-type threshold) of the target type. An R outside the domain gives
// domain_ok = false rather than an exception; a bad n or p still throws.

/// R / (1 + bR), for R > 0.
ConversionResult convert_first_to_second(double R, std::size_t n, double p);
/// g(R) = R(1 - R) / (1 + (a-1)R), for 0 < R <= 1/(1+sqrt(a)).
ConversionResult convert_second_to_third(double R, std::size_t n, double p);
/// R / (1 + (a+1)R), for 0 < R <= 1/(1+a).
ConversionResult convert_second_to_third_simple(double R, std::size_t n, double p);
/// R(1 + (b-1)R) / ((1 + bR)(1 + (a+b-1)R)), for 0 < R <= 1/(1-b+sqrt(a)).
ConversionResult convert_first_to_third(double R, std::size_t n, double p);
/// R / (1 + (a+b+1)R), for 0 < R <= 1/(a-b+1).
ConversionResult convert_first_to_third_simple(double R, std::size_t n, double p);

/// The map of convert_second_to_third and its inverse
/// h(t) = 2t / (1 - (a-1)t + sqrt((1 - (a-1)t)^2 - 4t)) on [0, 1/(1+sqrt(a))^2].
double second_to_third_map(double R, double a) noexcept;
double second_to_third_inverse(double t, double a);

enum class ClassicalTheorem { dochev, wang_zhao, pct };

/// dochev: (c-1)/(2c-1); wang_zhao: (c-1)/(4c-3) with c = 2^(1/(n-1)); pct: 1/(5n).
double classical_radius(ClassicalTheorem which, std::size_t n);

/// Evaluates the inequality of the given condition type. xi is required for the
/// first and second kinds.
bool check_condition(ConditionType type, const Polynomial& f, std::span<const Complex> x,
                     const PNormSpec& spec, double R,
                     std::optional<std::span<const Complex>> xi = std::nullopt);

/// The left-hand side of the inequality check_condition compares against R.
double condition_value(ConditionType type, const Polynomial& f, std::span<const Complex> x,
                       const PNormSpec& spec, std::optional<std::span<const Complex>> xi = std::nullopt);

/// ||W_f(x)||_inf < delta(x) / (5n). Needs only f and x.
bool pct_condition(const Polynomial& f, std::span<const Complex> x);

namespace testing {

/// ||x - xi||_inf < dochev_R(n) * delta(xi).
bool dochev_hypothesis(std::span<const Complex> x, std::span<const Complex> xi);

/// ||x - xi||_inf < wang_zhao_R(n) * delta(x).
bool wang_zhao_hypothesis(std::span<const Complex> x, std::span<const Complex> xi);

}  // namespace testing

}  // namespace wcert
