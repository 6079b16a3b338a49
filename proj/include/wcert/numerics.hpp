#pragma once

// Complex-field primitives: polynomials, p-norms, nearest-neighbour distances.

#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wcert {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using RealVector = std::vector<double>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A polynomial of degree n >= 2 stored leading-to-constant, so coeffs()[0]
/// is the leading coefficient a0.
class Polynomial {
public:
    explicit Polynomial(ComplexVector coeffs);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    Complex leading() const noexcept { return coeffs_.front(); }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    /// Horner evaluation, one pass over the coefficients.
    Complex operator()(Complex z) const noexcept;

    bool operator==(const Polynomial&) const = default;

private:
    ComplexVector coeffs_;
};

Complex horner_eval(const Polynomial& f, Complex z) noexcept;

/// Conjugate exponent with q = inf for p = 1 and q = 1 for p = inf.
/// Throws invalid_exponent for p < 1 or NaN.
double conjugate_exponent(double p);

/// Parses "inf"/"infinity" (any case) or a decimal >= 1.
double parse_exponent(std::string_view text);

/// Renders p as "inf" or the shortest round-tripping decimal.
std::string format_exponent(double p);

struct NormConstants {
    double a;  // (n-1)^(1/q)
    double b;  // 2^(1/q)
};

NormConstants norm_constants(std::size_t n, double p);

/// The exponent p together with everything derived from it for degree n.
struct PNormSpec {
    double p;
    double q;
    std::size_t n;
    double a;
    double b;

    static PNormSpec make(std::size_t n, double p);

    bool is_max_norm() const noexcept { return p == kInfinity; }
    /// n = 2 with the max norm, where the localization bounds must hold strictly.
    bool strict_boundary_case() const noexcept { return n == 2 && is_max_norm(); }
};

/// d_i(x) = min_{j != i} |x_i - x_j|. Throws degenerate_guess on duplicates.
RealVector distance_vector(std::span<const Complex> x);

/// delta(x) = min_{i != j} |x_i - x_j|, zero when components repeat.
double separation(std::span<const Complex> x) noexcept;

/// True iff every pair of components differs (exact comparison).
bool has_distinct_components(std::span<const Complex> x) noexcept;

/// (|x_1| / y_1, ..., |x_n| / y_n).
RealVector componentwise_ratio(std::span<const Complex> x, std::span<const double> y);

/// p-norm with max-factoring, so large p neither overflows nor underflows.
double p_norm(std::span<const double> v, double p) noexcept;
double p_norm(std::span<const double> v, const PNormSpec& spec) noexcept;

/// Max-modulus of a complex vector.
double max_modulus(std::span<const Complex> v) noexcept;

ComplexVector difference(std::span<const Complex> x, std::span<const Complex> y);

/// Greedy nearest assignment: result[i] is the index of the target nearest to
/// source[i]. Repeated indices mean the assignment is not a bijection.
std::vector<std::size_t> nearest_assignment(std::span<const Complex> source,
                                            std::span<const Complex> targets);

bool is_permutation_index(std::span<const std::size_t> assignment, std::size_t n) noexcept;

}  // namespace wcert
