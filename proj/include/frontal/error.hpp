#pragma once

#include <stdexcept>
#include <string>

namespace frontal {

enum class ErrorKind {
    spec,
    unsupported_order,
    unsupported_singularity,
    degenerate_curve,
    dimension,
    domain,
    accuracy,
    frame_construction,
    pathological_curve,
    lift_inconsistency,
    precondition,
    endpoint_singular,
    generation,
    io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Raised when an adaptive integration runs out of panels before reaching the
// requested tolerance. Carries the best estimate so callers can still report it.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double best_estimate, double error_estimate)
        : Error(ErrorKind::accuracy, what),
          best_estimate_(best_estimate),
          error_estimate_(error_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

}  // namespace frontal
