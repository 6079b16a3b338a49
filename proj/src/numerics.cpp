#include "wcert/numerics.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "wcert/error.hpp"

namespace wcert {

Polynomial::Polynomial(ComplexVector coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 3) {
        throw Error(ErrorKind::invalid_polynomial,
                    "degree must be at least 2, got " +
                        std::to_string(static_cast<long>(coeffs_.size()) - 1));
    }
    if (!(std::abs(coeffs_.front()) > 0.0)) {
        throw Error(ErrorKind::invalid_polynomial, "leading coefficient is zero");
    }
    for (const Complex& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw Error(ErrorKind::invalid_polynomial, "non-finite coefficient");
        }
    }
}

Complex Polynomial::operator()(Complex z) const noexcept {
    Complex acc = coeffs_.front();
    for (std::size_t k = 1; k < coeffs_.size(); ++k) acc = acc * z + coeffs_[k];
    return acc;
}

Complex horner_eval(const Polynomial& f, Complex z) noexcept { return f(z); }

double conjugate_exponent(double p) {
    if (std::isnan(p) || p < 1.0) {
        throw Error(ErrorKind::invalid_exponent, "p must lie in [1, inf]");
    }
    if (p == 1.0) return kInfinity;
    if (p == kInfinity) return 1.0;
    return p / (p - 1.0);
}

double parse_exponent(std::string_view text) {
    std::string lowered(text);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lowered == "inf" || lowered == "infinity") return kInfinity;

    double value = 0.0;
    const char* first = lowered.data();
    const char* last = first + lowered.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || lowered.empty()) {
        throw Error(ErrorKind::invalid_exponent, "cannot parse exponent '" + std::string(text) + "'");
    }
    if (!std::isfinite(value) || value < 1.0) {
        throw Error(ErrorKind::invalid_exponent, "p must lie in [1, inf]");
    }
    return value;
}

std::string format_exponent(double p) {
    if (p == kInfinity) return "inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p);
    return std::string(buf, ptr);
}

NormConstants norm_constants(std::size_t n, double p) {
    if (n < 2) throw Error(ErrorKind::domain, "degree must be at least 2");
    const double q = conjugate_exponent(p);
    if (q == kInfinity) return {1.0, 1.0};
    const double inv_q = 1.0 / q;
    return {std::pow(static_cast<double>(n - 1), inv_q), std::pow(2.0, inv_q)};
}

PNormSpec PNormSpec::make(std::size_t n, double p) {
    const NormConstants k = norm_constants(n, p);
    return {p, conjugate_exponent(p), n, k.a, k.b};
}

RealVector distance_vector(std::span<const Complex> x) {
    const std::size_t n = x.size();
    if (n < 2) throw Error(ErrorKind::degenerate_guess, "need at least two components");
    RealVector d(n, kInfinity);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dist = std::abs(x[i] - x[j]);
            if (!(dist > 0.0)) {
                throw Error(ErrorKind::degenerate_guess,
                            "components " + std::to_string(i) + " and " + std::to_string(j) +
                                " coincide");
            }
            d[i] = std::min(d[i], dist);
            d[j] = std::min(d[j], dist);
        }
    }
    return d;
}

double separation(std::span<const Complex> x) noexcept {
    double delta = kInfinity;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            delta = std::min(delta, std::abs(x[i] - x[j]));
        }
    }
    return delta == kInfinity ? 0.0 : delta;
}

bool has_distinct_components(std::span<const Complex> x) noexcept {
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            if (x[i] == x[j]) return false;
        }
    }
    return true;
}

RealVector componentwise_ratio(std::span<const Complex> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw Error(ErrorKind::domain, "componentwise ratio of vectors with different lengths");
    }
    RealVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(y[i] != 0.0)) throw Error(ErrorKind::degenerate_guess, "zero denominator entry");
        out[i] = std::abs(x[i]) / y[i];
    }
    return out;
}

double p_norm(std::span<const double> v, double p) noexcept {
    double scale = 0.0;
    for (double e : v) scale = std::max(scale, std::abs(e));
    if (p == kInfinity || scale == 0.0 || !std::isfinite(scale)) return scale;
    double sum = 0.0;
    if (p == 1.0) {
        for (double e : v) sum += std::abs(e);
        return sum;
    }
    for (double e : v) sum += std::pow(std::abs(e) / scale, p);
    return scale * std::pow(sum, 1.0 / p);
}

double p_norm(std::span<const double> v, const PNormSpec& spec) noexcept { return p_norm(v, spec.p); }

double max_modulus(std::span<const Complex> v) noexcept {
    double m = 0.0;
    for (const Complex& z : v) m = std::max(m, std::abs(z));
    return m;
}

ComplexVector difference(std::span<const Complex> x, std::span<const Complex> y) {
    if (x.size() != y.size()) throw Error(ErrorKind::domain, "vectors have different lengths");
    ComplexVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
    return out;
}

std::vector<std::size_t> nearest_assignment(std::span<const Complex> source,
                                            std::span<const Complex> targets) {
    std::vector<std::size_t> out(source.size(), 0);
    for (std::size_t i = 0; i < source.size(); ++i) {
        double best = kInfinity;
        for (std::size_t j = 0; j < targets.size(); ++j) {
            const double dist = std::abs(source[i] - targets[j]);
            if (dist < best) {
                best = dist;
                out[i] = j;
            }
        }
    }
    return out;
}

bool is_permutation_index(std::span<const std::size_t> assignment, std::size_t n) noexcept {
    if (assignment.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (std::size_t j : assignment) {
        if (j >= n || seen[j]) return false;
        seen[j] = true;
    }
    return true;
}

}  // namespace wcert
