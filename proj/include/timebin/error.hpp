#pragma once

#include <stdexcept>
#include <string>

namespace timebin {

/// Error categories shared by the whole library. `kind` strings are part of
/// the CLI contract (they appear verbatim in emitted error JSON), so treat
/// them as stable identifiers.
enum class ErrorKind {
    invalid_parameter,
    window_overflow,
    step_count_too_coarse,
    quadrature_nonconvergence,
    unequal_velocities,
    empty_field,
    parse_error,
    unknown_key,
    missing_required_key,
    unit_mismatch,
    io_error,
};

inline const char* error_kind_name(ErrorKind k)
{
    switch (k) {
        case ErrorKind::invalid_parameter: return "invalid-parameter";
        case ErrorKind::window_overflow: return "window-overflow";
        case ErrorKind::step_count_too_coarse: return "step-count-too-coarse";
        case ErrorKind::quadrature_nonconvergence: return "quadrature-nonconvergence";
        case ErrorKind::unequal_velocities: return "unequal-velocities";
        case ErrorKind::empty_field: return "empty-field";
        case ErrorKind::parse_error: return "parse-error";
        case ErrorKind::unknown_key: return "unknown-key";
        case ErrorKind::missing_required_key: return "missing-required-key";
        case ErrorKind::unit_mismatch: return "unit-mismatch";
        case ErrorKind::io_error: return "io-error";
    }
    return "unknown";
}

/// Exit-code category for the CLI: configuration problems exit 1, runtime
/// (solver/analysis/output) problems exit 2.
inline bool is_config_error(ErrorKind k)
{
    switch (k) {
        case ErrorKind::parse_error:
        case ErrorKind::unknown_key:
        case ErrorKind::missing_required_key:
        case ErrorKind::unit_mismatch:
        case ErrorKind::invalid_parameter:
            return true;
        default:
            return false;
    }
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    const char* kind_name() const { return error_kind_name(kind_); }

private:
    ErrorKind kind_;
};

}
