#include "wcert/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wcert/error.hpp"

namespace wcert {

namespace {

bool finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double matched_error(std::span<const Complex> x, std::span<const Complex> reference) {
    const auto assignment = nearest_assignment(x, reference);
    double err = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        err = std::max(err, std::abs(x[i] - reference[assignment[i]]));
    }
    return err;
}

}  // namespace

ComplexVector weierstrass_correction(const Polynomial& f, std::span<const Complex> x) {
    const std::size_t n = f.degree();
    if (x.size() != n) {
        throw Error(ErrorKind::degenerate_guess, "guess has " + std::to_string(x.size()) +
                                                     " components for a degree " +
                                                     std::to_string(n) + " polynomial");
    }
    ComplexVector w(n);
    const Complex a0 = f.leading();
    for (std::size_t i = 0; i < n; ++i) {
        Complex denom = a0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const Complex diff = x[i] - x[j];
            if (diff == Complex{}) {
                throw Error(ErrorKind::degenerate_guess,
                            "components " + std::to_string(i) + " and " + std::to_string(j) +
                                " coincide");
            }
            denom *= diff;
        }
        const Complex value = f(x[i]);
        if (!finite(value) || !finite(denom) || denom == Complex{}) {
            throw Error(ErrorKind::nonfinite_arithmetic,
                        "correction " + std::to_string(i) + " is not finite");
        }
        w[i] = value / denom;
        if (!finite(w[i])) {
            throw Error(ErrorKind::nonfinite_arithmetic,
                        "correction " + std::to_string(i) + " is not finite");
        }
    }
    return w;
}

ComplexVector weierstrass_step(const Polynomial& f, std::span<const Complex> x) {
    const ComplexVector w = weierstrass_correction(f, x);
    ComplexVector next(x.begin(), x.end());
    for (std::size_t i = 0; i < next.size(); ++i) next[i] -= w[i];
    return next;
}

std::string_view to_string(IterationStatus status) noexcept {
    switch (status) {
        case IterationStatus::converged: return "converged";
        case IterationStatus::max_iterations: return "max-iterations";
        case IterationStatus::diverged_nonfinite: return "diverged-nonfinite";
    }
    return "unknown";
}

IterationTrace iterate(const Polynomial& f, std::span<const Complex> x0, const IterateOptions& options,
                       std::optional<std::span<const Complex>> reference) {
    if (options.max_iter < 1) throw Error(ErrorKind::domain, "max_iter must be at least 1");
    if (!(options.tol > 0.0)) throw Error(ErrorKind::domain, "tol must be positive");
    if (reference && reference->size() != f.degree()) {
        throw Error(ErrorKind::domain, "reference root-vector has the wrong length");
    }

    IterationTrace trace;
    trace.iterates.emplace_back(x0.begin(), x0.end());
    // Validates x0; errors at the start are the caller's problem, not divergence.
    ComplexVector w = weierstrass_correction(f, x0);

    for (int k = 0;; ++k) {
        const ComplexVector& x = trace.iterates.back();
        const double wnorm = max_modulus(w);
        trace.correction_norms.push_back(wnorm);
        if (reference) trace.errors.push_back(matched_error(x, *reference));

        if (wnorm <= options.tol * std::max(1.0, max_modulus(x))) {
            trace.status = IterationStatus::converged;
            break;
        }
        if (k == options.max_iter) {
            trace.status = IterationStatus::max_iterations;
            break;
        }

        ComplexVector next = x;
        for (std::size_t i = 0; i < next.size(); ++i) next[i] -= w[i];
        trace.iterates.push_back(std::move(next));
        try {
            w = weierstrass_correction(f, trace.iterates.back());
        } catch (const Error&) {
            trace.status = IterationStatus::diverged_nonfinite;
            if (reference) trace.errors.push_back(matched_error(trace.iterates.back(), *reference));
            break;
        }
    }

    for (std::size_t k = 0; k + 1 < trace.errors.size(); ++k) {
        if (trace.errors[k] > 0.0) {
            trace.error_ratios.push_back(trace.errors[k + 1] / (trace.errors[k] * trace.errors[k]));
        }
    }
    return trace;
}

}  // namespace wcert
