#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "wcert/numerics.hpp"

namespace wcert {

/// W_i(x) = f(x_i) / (a0 * prod_{j != i} (x_i - x_j)).
///
/// The denominator product is accumulated left-to-right without rescaling,
/// which is adequate up to degree ~50 for inputs of moderate magnitude.
/// Throws degenerate_guess for repeated components or a length mismatch and
/// nonfinite_arithmetic when any intermediate overflows.
ComplexVector weierstrass_correction(const Polynomial& f, std::span<const Complex> x);

/// x - W_f(x).
ComplexVector weierstrass_step(const Polynomial& f, std::span<const Complex> x);

enum class IterationStatus { converged, max_iterations, diverged_nonfinite };

std::string_view to_string(IterationStatus status) noexcept;

struct IterateOptions {
    int max_iter = 100;
    double tol = 1e-12;
};

struct IterationTrace {
    // iterates[k] is x^k; correction_norms[k] is ||W_f(x^k)||_inf when it could
    // be evaluated, so the two have equal length except after a failed step.
    std::vector<ComplexVector> iterates;
    RealVector correction_norms;
    IterationStatus status = IterationStatus::max_iterations;
    // Filled only when a reference root-vector is supplied: errors[k] is
    // ||x^k - xi||_inf after matching xi to x^k by nearest assignment, and
    // error_ratios[k] = errors[k+1] / errors[k]^2 for every k with errors[k] > 0.
    RealVector errors;
    RealVector error_ratios;

    std::size_t steps() const noexcept { return iterates.empty() ? 0 : iterates.size() - 1; }
    const ComplexVector& final_iterate() const { return iterates.back(); }
};

/// Runs x^{k+1} = x^k - W_f(x^k) until ||W_f(x^k)||_inf <= tol * max(1, ||x^k||_inf)
/// or max_iter steps were taken. Invalid x0 or options throw; failures in later
/// steps end the trace with diverged_nonfinite.
IterationTrace iterate(const Polynomial& f, std::span<const Complex> x0, const IterateOptions& options,
                       std::optional<std::span<const Complex>> reference = std::nullopt);

}  // namespace wcert
