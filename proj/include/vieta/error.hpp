#pragma once

#include <stdexcept>
#include <string>

namespace vieta {

// Domain error categories shared by all modules. The CLI maps any Error to
// exit code 1; usage problems are handled separately (exit code 2).
enum class ErrorKind {
    invalid_leading_coefficient,
    index_out_of_range,
    degenerate_input,
    arity_mismatch,
    numeric_failure,
    lexical,
    parse,
    heterogeneous_equation,
    unsupported_equation,
    missing_binding,
    bound_unknown,
    out_of_range,
    parity,
    geometry,
    construction_failure,
    trace_verification,
    degenerate_configuration,
    unsupported_degree,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_leading_coefficient: return "invalid-leading-coefficient";
        case ErrorKind::index_out_of_range: return "index-out-of-range";
        case ErrorKind::degenerate_input: return "degenerate-input";
        case ErrorKind::arity_mismatch: return "arity-mismatch";
        case ErrorKind::numeric_failure: return "numeric-failure";
        case ErrorKind::lexical: return "lexical-error";
        case ErrorKind::parse: return "parse-error";
        case ErrorKind::heterogeneous_equation: return "heterogeneous-equation";
        case ErrorKind::unsupported_equation: return "unsupported-equation";
        case ErrorKind::missing_binding: return "missing-binding";
        case ErrorKind::bound_unknown: return "bound-unknown";
        case ErrorKind::out_of_range: return "out-of-range";
        case ErrorKind::parity: return "parity-error";
        case ErrorKind::geometry: return "geometry-error";
        case ErrorKind::construction_failure: return "construction-failure";
        case ErrorKind::trace_verification: return "trace-verification";
        case ErrorKind::degenerate_configuration: return "degenerate-configuration";
        case ErrorKind::unsupported_degree: return "unsupported-degree";
    }
    return "unknown";
}

} // namespace vieta
