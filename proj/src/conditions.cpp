#include "wcert/conditions.hpp"

#include <cmath>
#include <limits>

#include "wcert/certification.hpp"
#include "wcert/error.hpp"
#include "wcert/weierstrass.hpp"

namespace wcert {

namespace {

constexpr double kEndpointSlack = 4.0 * std::numeric_limits<double>::epsilon();

constexpr ConditionType kFirst{ConditionKind::first, NormForm::componentwise};
constexpr ConditionType kSecond{ConditionKind::second, NormForm::componentwise};
constexpr ConditionType kThird{ConditionKind::third, NormForm::componentwise};

// R in (0, upper], with upper = inf meaning no finite limit.
ConversionResult start(ConditionType source, ConditionType target, double R, double upper) {
    ConversionResult out{source, target, R, std::nullopt, false, false};
    out.domain_ok = R > 0.0 && std::isfinite(R) && R <= upper * (1.0 + kEndpointSlack);
    return out;
}

bool at_endpoint(double R, double upper) noexcept {
    return std::isfinite(upper) && std::abs(R - upper) <= kEndpointSlack * upper;
}

RealVector moduli(std::span<const Complex> v) {
    RealVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::abs(v[i]);
    return out;
}

std::span<const Complex> require_reference(std::optional<std::span<const Complex>> xi,
                                           std::size_t n) {
    if (!xi) throw Error(ErrorKind::missing_reference, "first and second kinds need the root-vector");
    if (xi->size() != n) throw Error(ErrorKind::domain, "root-vector has the wrong length");
    return *xi;
}

}  // namespace

std::string_view to_string(ConditionKind kind) noexcept {
    switch (kind) {
        case ConditionKind::first: return "first";
        case ConditionKind::second: return "second";
        case ConditionKind::third: return "third";
    }
    return "unknown";
}

ConditionKind condition_kind_from_string(std::string_view name) {
    for (ConditionKind k : {ConditionKind::first, ConditionKind::second, ConditionKind::third}) {
        if (to_string(k) == name) return k;
    }
    throw Error(ErrorKind::domain, "unknown condition kind '" + std::string(name) + "'");
}

bool prop41_inequality_holds(std::span<const Complex> u, std::span<const Complex> v,
                             const PNormSpec& spec) {
    const ComplexVector diff = difference(u, v);
    const double lhs = p_norm(componentwise_ratio(diff, distance_vector(u)), spec);
    const double right_norm = p_norm(componentwise_ratio(diff, distance_vector(v)), spec);
    const double rhs = (1.0 - spec.b * lhs) * right_norm;
    return lhs + 1e-12 * std::max(lhs, std::abs(rhs)) >= rhs;
}

ConversionResult convert_first_to_second(double R, std::size_t n, double p) {
    const PNormSpec spec = PNormSpec::make(n, p);
    ConversionResult out = start(kFirst, kSecond, R, kInfinity);
    if (out.domain_ok) out.R_out = R / (1.0 + spec.b * R);
    return out;
}

double second_to_third_map(double R, double a) noexcept { return R * (1.0 - R) / (1.0 + (a - 1.0) * R); }

double second_to_third_inverse(double t, double a) {
    if (!(t >= 0.0)) throw Error(ErrorKind::domain, "inverse map requires t >= 0");
    // h(t) = t alpha(t).
    return t * alpha(t, a);
}

ConversionResult convert_second_to_third(double R, std::size_t n, double p) {
    const PNormSpec spec = PNormSpec::make(n, p);
    const double upper = 1.0 / (1.0 + std::sqrt(spec.a));
    ConversionResult out = start(kSecond, kThird, R, upper);
    if (!out.domain_ok) return out;
    out.R_out = second_to_third_map(R, spec.a);
    out.strict_required = spec.strict_boundary_case() && at_endpoint(R, upper);
    return out;
}

ConversionResult convert_second_to_third_simple(double R, std::size_t n, double p) {
    const PNormSpec spec = PNormSpec::make(n, p);
    const double upper = 1.0 / (1.0 + spec.a);
    ConversionResult out = start(kSecond, kThird, R, upper);
    if (!out.domain_ok) return out;
    out.R_out = R / (1.0 + (spec.a + 1.0) * R);
    out.strict_required = spec.strict_boundary_case() && at_endpoint(R, upper);
    return out;
}

ConversionResult convert_first_to_third(double R, std::size_t n, double p) {
    const PNormSpec spec = PNormSpec::make(n, p);
    const double a = spec.a;
    const double b = spec.b;
    // 1 - b + sqrt(a) vanishes only for n = 2, p = inf; no finite R is excluded there.
    const double denom = 1.0 - b + std::sqrt(a);
    const double upper = denom > 0.0 ? 1.0 / denom : kInfinity;
    ConversionResult out = start(kFirst, kThird, R, upper);
    if (!out.domain_ok) return out;
    out.R_out = R * (1.0 + (b - 1.0) * R) / ((1.0 + b * R) * (1.0 + (a + b - 1.0) * R));
    out.strict_required = denom <= 0.0;
    return out;
}

ConversionResult convert_first_to_third_simple(double R, std::size_t n, double p) {
    const PNormSpec spec = PNormSpec::make(n, p);
    const double denom = spec.a - spec.b + 1.0;
    const double upper = denom > 0.0 ? 1.0 / denom : kInfinity;
    ConversionResult out = start(kFirst, kThird, R, upper);
    if (!out.domain_ok) return out;
    out.R_out = R / (1.0 + (spec.a + spec.b + 1.0) * R);
    return out;
}

double classical_radius(ClassicalTheorem which, std::size_t n) {
    if (n < 2) throw Error(ErrorKind::domain, "degree must be at least 2");
    const double c = std::pow(2.0, 1.0 / static_cast<double>(n - 1));
    switch (which) {
        case ClassicalTheorem::dochev: return (c - 1.0) / (2.0 * c - 1.0);
        case ClassicalTheorem::wang_zhao: return (c - 1.0) / (4.0 * c - 3.0);
        case ClassicalTheorem::pct: return 1.0 / (5.0 * static_cast<double>(n));
    }
    throw Error(ErrorKind::domain, "unknown classical theorem");
}

double condition_value(ConditionType type, const Polynomial& f, std::span<const Complex> x,
                       const PNormSpec& spec, std::optional<std::span<const Complex>> xi) {
    if (x.size() != f.degree()) throw Error(ErrorKind::degenerate_guess, "guess length differs from degree");
    ComplexVector numerator;
    std::span<const Complex> base = x;
    switch (type.kind) {
        case ConditionKind::first:
            base = require_reference(xi, x.size());
            numerator = difference(x, base);
            break;
        case ConditionKind::second:
            numerator = difference(x, require_reference(xi, x.size()));
            break;
        case ConditionKind::third:
            numerator = weierstrass_correction(f, x);
            break;
    }
    if (type.form == NormForm::componentwise) {
        return p_norm(componentwise_ratio(numerator, distance_vector(base)), spec);
    }
    const double delta = separation(base);
    if (!(delta > 0.0)) throw Error(ErrorKind::degenerate_guess, "components coincide");
    return p_norm(moduli(numerator), spec) / delta;
}

bool check_condition(ConditionType type, const Polynomial& f, std::span<const Complex> x,
                     const PNormSpec& spec, double R, std::optional<std::span<const Complex>> xi) {
    return condition_value(type, f, x, spec, xi) <= R;
}

bool pct_condition(const Polynomial& f, std::span<const Complex> x) {
    const double delta = separation(x);
    if (!(delta > 0.0)) throw Error(ErrorKind::degenerate_guess, "components coincide");
    const ComplexVector w = weierstrass_correction(f, x);
    return max_modulus(w) < delta * classical_radius(ClassicalTheorem::pct, f.degree());
}

namespace testing {

bool dochev_hypothesis(std::span<const Complex> x, std::span<const Complex> xi) {
    const double delta = separation(xi);
    return max_modulus(difference(x, xi)) < classical_radius(ClassicalTheorem::dochev, x.size()) * delta;
}

bool wang_zhao_hypothesis(std::span<const Complex> x, std::span<const Complex> xi) {
    const double delta = separation(x);
    return max_modulus(difference(x, xi)) <
           classical_radius(ClassicalTheorem::wang_zhao, x.size()) * delta;
}

}  // namespace testing

}  // namespace wcert
