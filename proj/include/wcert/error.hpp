#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wcert {

enum class ErrorKind {
    invalid_exponent,
    invalid_polynomial,
    degenerate_guess,
    nonfinite_arithmetic,
    domain,
    invalid_weights,
    invalid_instance,
    instance_generation,
    missing_reference,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace wcert
