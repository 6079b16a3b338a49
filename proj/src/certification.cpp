#include "wcert/certification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wcert/error.hpp"
#include "wcert/weierstrass.hpp"

namespace wcert {

namespace {

constexpr double kEndpointSlack = 4.0 * std::numeric_limits<double>::epsilon();

struct Evaluation {
    ComplexVector w;
    double E = 0.0;
    double E_hi = 0.0;
};

Evaluation evaluate(const Polynomial& f, std::span<const Complex> x, const PNormSpec& spec) {
    const RealVector d = distance_vector(x);
    Evaluation ev;
    ev.w = weierstrass_correction(f, x);
    ev.E = p_norm(componentwise_ratio(ev.w, d), spec);
    ev.E_hi = ev.E * (1.0 + kInflation);
    return ev;
}

Certificate blank(Theorem theorem, const PNormSpec& spec) {
    Certificate cert;
    cert.theorem = theorem;
    cert.p = spec.p;
    cert.q = spec.q;
    cert.a = spec.a;
    cert.b = spec.b;
    cert.c_interval = {1.0, 1.0};
    cert.c_used = 1.0;
    return cert;
}

void emit_disks(Certificate& cert, std::span<const Complex> x, const ComplexVector& w) {
    cert.disks.clear();
    cert.disks.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        cert.disks.push_back({x[i], cert.c_used * std::abs(w[i])});
    }
    // The inequalities imply disjointness in exact arithmetic; re-check the
    // rounded radii so a certificate never ships overlapping disks.
    if (!pairwise_disjoint(cert.disks)) {
        cert.satisfied = false;
        cert.reason = "emitted disks overlap after rounding";
        cert.disks.clear();
    }
}

bool within_threshold(double E_hi, double bound, bool strict) noexcept {
    return strict ? E_hi < bound : E_hi <= bound;
}

std::string threshold_reason(const Certificate& cert) {
    return std::string("E*(1+inflation) = ") + std::to_string(cert.E * (1.0 + cert.inflation)) +
           (cert.strict_boundary_case ? " is not strictly below " : " exceeds ") + "bound " +
           std::to_string(cert.bound);
}

Certificate interval_certificate(Theorem theorem, const Polynomial& f, std::span<const Complex> x,
                                 const PNormSpec& spec) {
    const Evaluation ev = evaluate(f, x, spec);
    Certificate cert = blank(theorem, spec);
    cert.E = ev.E;
    cert.strict_boundary_case = spec.strict_boundary_case();
    const bool use_gamma = theorem == Theorem::gamma_corollary;
    cert.bound = use_gamma ? gamma_threshold(spec.a) : main_threshold(spec.a);
    cert.satisfied = within_threshold(ev.E_hi, cert.bound, cert.strict_boundary_case);
    if (!cert.satisfied) {
        cert.reason = threshold_reason(cert);
        return cert;
    }
    const double lo = use_gamma ? gamma(ev.E_hi, spec.a) : alpha(ev.E_hi, spec.a);
    // alpha and beta meet at the main threshold; keep the interval non-empty there.
    const double hi = std::max(lo, beta(ev.E_hi, spec.a));
    cert.c_interval = {lo, hi};
    cert.c_used = lo;
    emit_disks(cert, x, ev.w);
    return cert;
}

}  // namespace

bool pairwise_disjoint(std::span<const InclusionDisk> disks) noexcept {
    for (std::size_t i = 0; i < disks.size(); ++i) {
        for (std::size_t j = i + 1; j < disks.size(); ++j) {
            if (!(std::abs(disks[i].center - disks[j].center) > disks[i].radius + disks[j].radius)) {
                return false;
            }
        }
    }
    return true;
}

std::string_view to_string(Theorem theorem) noexcept {
    switch (theorem) {
        case Theorem::main_localization: return "main-localization";
        case Theorem::gamma_corollary: return "gamma-corollary";
        case Theorem::fixed_r_corollary: return "fixed-R-corollary";
        case Theorem::prop_localization: return "prop-localization";
    }
    return "unknown";
}

Theorem theorem_from_string(std::string_view name) {
    for (Theorem t : {Theorem::main_localization, Theorem::gamma_corollary, Theorem::fixed_r_corollary,
                      Theorem::prop_localization}) {
        if (to_string(t) == name) return t;
    }
    throw Error(ErrorKind::domain, "unknown theorem '" + std::string(name) + "'");
}

bool Certificate::operator==(const Certificate& other) const {
    return theorem == other.theorem && p == other.p && q == other.q && a == other.a && b == other.b &&
           E == other.E && bound == other.bound && satisfied == other.satisfied &&
           strict_boundary_case == other.strict_boundary_case && c_interval == other.c_interval &&
           c_used == other.c_used && inflation == other.inflation && disks == other.disks;
}

double compute_E(const Polynomial& f, std::span<const Complex> x, const PNormSpec& spec) {
    return evaluate(f, x, spec).E;
}

double alpha(double t, double a) {
    if (!(t >= 0.0) || !std::isfinite(t) || !(a >= 1.0)) {
        throw Error(ErrorKind::domain, "alpha requires t >= 0 and a >= 1");
    }
    const double s = 1.0 - (a - 1.0) * t;
    // s^2 - 4t, factored so the zero at 1/(1+sqrt(a))^2 is not lost to cancellation.
    const double r = std::sqrt(a);
    double radicand = (1.0 - (r - 1.0) * (r - 1.0) * t) * (1.0 - (r + 1.0) * (r + 1.0) * t);
    if (std::abs(radicand) <= kRadicandSlack) radicand = 0.0;
    if (radicand < 0.0 || !(s > 0.0)) {
        throw Error(ErrorKind::domain, "alpha requires t <= 1/(1+sqrt(a))^2, got t = " + std::to_string(t));
    }
    return 2.0 / (s + std::sqrt(radicand));
}

double beta(double t, double a) {
    if (!(t >= 0.0) || !std::isfinite(t) || !(a >= 1.0) || !((a - 1.0) * t < 1.0)) {
        throw Error(ErrorKind::domain, "beta requires t >= 0 and (a-1)t < 1");
    }
    return 2.0 / (1.0 - (a - 1.0) * t);
}

double gamma(double t, double a) {
    if (!(t >= 0.0) || !std::isfinite(t) || !(a >= 1.0) || !((a + 1.0) * t < 1.0)) {
        throw Error(ErrorKind::domain, "gamma requires 0 <= t < 1/(a+1)");
    }
    return 1.0 / (1.0 - (a + 1.0) * t);
}

double main_threshold(double a) noexcept {
    const double s = 1.0 + std::sqrt(a);
    return 1.0 / (s * s);
}

double gamma_threshold(double a) noexcept { return 1.0 / (2.0 * (a + 1.0)); }

bool disjointness_check(std::span<const Complex> x, std::span<const Complex> u, double c,
                        const PNormSpec& spec) {
    if (!(c >= 0.0) || !std::isfinite(c)) throw Error(ErrorKind::domain, "c must be finite and >= 0");
    const RealVector d = distance_vector(x);
    const double E = p_norm(componentwise_ratio(u, d), spec);
    return spec.b * c * E * (1.0 + kInflation) < 1.0;
}

std::vector<InclusionDisk> braess_hadeler_disks(const Polynomial& f, std::span<const Complex> x,
                                                std::span<const double> weights) {
    if (weights.size() != x.size()) {
        throw Error(ErrorKind::invalid_weights, "need one weight per component");
    }
    for (double w : weights) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw Error(ErrorKind::invalid_weights, "weights must be positive and finite");
        }
    }
    const ComplexVector w = weierstrass_correction(f, x);
    double total = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) total += weights[j] * std::abs(w[j]);
    std::vector<InclusionDisk> disks;
    disks.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) disks.push_back({x[i], total / weights[i]});
    return disks;
}

Certificate localize_with_c(const Polynomial& f, std::span<const Complex> x, const PNormSpec& spec,
                            double c) {
    if (!(c >= 1.0) || !std::isfinite(c)) throw Error(ErrorKind::domain, "c must be finite and >= 1");
    const Evaluation ev = evaluate(f, x, spec);
    Certificate cert = blank(Theorem::prop_localization, spec);
    cert.E = ev.E;
    cert.bound = 1.0 / (spec.b * c);
    cert.c_interval = {c, c};
    cert.c_used = c;

    if (!(spec.b * c * ev.E_hi < 1.0)) {
        cert.reason = "b*c*E is not below 1";
        return cert;
    }
    const double slack = 1.0 - c * ev.E_hi;
    if (!(1.0 / c + spec.a * ev.E_hi / slack <= 1.0)) {
        cert.reason = "1/c + a*E/(1 - c*E) exceeds 1";
        return cert;
    }
    cert.satisfied = true;
    emit_disks(cert, x, ev.w);
    return cert;
}

Certificate certify_main(const Polynomial& f, std::span<const Complex> x, const PNormSpec& spec) {
    return interval_certificate(Theorem::main_localization, f, x, spec);
}

Certificate certify_main(const Polynomial& f, std::span<const Complex> x, const PNormSpec& spec,
                         double c) {
    Certificate cert = interval_certificate(Theorem::main_localization, f, x, spec);
    if (!cert.satisfied) return cert;
    if (!(c >= cert.c_interval.first && c <= cert.c_interval.second)) {
        cert.satisfied = false;
        cert.reason = "c = " + std::to_string(c) + " lies outside [alpha(E), beta(E)]";
        cert.disks.clear();
        return cert;
    }
    cert.c_used = c;
    emit_disks(cert, x, weierstrass_correction(f, x));
    return cert;
}

Certificate certify_gamma(const Polynomial& f, std::span<const Complex> x, const PNormSpec& spec) {
    return interval_certificate(Theorem::gamma_corollary, f, x, spec);
}

Certificate certify_fixed_R(const Polynomial& f, std::span<const Complex> x, const PNormSpec& spec,
                            double R) {
    const double limit = gamma_threshold(spec.a);
    if (!(R >= 0.0) || !(R <= limit * (1.0 + kEndpointSlack))) {
        throw Error(ErrorKind::domain, "R must lie in [0, 1/(2a+2)]");
    }
    R = std::min(R, limit);
    const Evaluation ev = evaluate(f, x, spec);
    Certificate cert = blank(Theorem::fixed_r_corollary, spec);
    cert.E = ev.E;
    cert.bound = R;
    cert.strict_boundary_case = spec.strict_boundary_case() && R == limit;
    cert.c_used = gamma(R, spec.a);
    cert.c_interval = {cert.c_used, cert.c_used};
    cert.satisfied = within_threshold(ev.E_hi, R, cert.strict_boundary_case);
    if (!cert.satisfied) {
        cert.reason = threshold_reason(cert);
        return cert;
    }
    emit_disks(cert, x, ev.w);
    return cert;
}

double root_proximity_bound(double E, double a) {
    if (!(E >= 0.0) || !(E <= main_threshold(a) * (1.0 + kEndpointSlack))) {
        throw Error(ErrorKind::domain, "proximity bound requires 0 <= E <= 1/(1+sqrt(a))^2");
    }
    return alpha(E, a) * E;
}

}  // namespace wcert
