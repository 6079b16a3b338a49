#include "wcert/error.hpp"

namespace wcert {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_exponent: return "invalid-exponent";
        case ErrorKind::invalid_polynomial: return "invalid-polynomial";
        case ErrorKind::degenerate_guess: return "degenerate-guess";
        case ErrorKind::nonfinite_arithmetic: return "nonfinite-arithmetic";
        case ErrorKind::domain: return "domain";
        case ErrorKind::invalid_weights: return "invalid-weights";
        case ErrorKind::invalid_instance: return "invalid-instance";
        case ErrorKind::instance_generation: return "instance-generation";
        case ErrorKind::missing_reference: return "missing-reference";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace wcert
