#pragma once

#include <stdexcept>
#include <string>

namespace graphbreak {

// Errors split by how the CLI maps them to exit codes: bad inputs exit
// with 2, failures of the numerics themselves exit with 3.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class NumericalError : public std::runtime_error {
public:
    NumericalError(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct NonZeroMean : ValidationError {
    explicit NonZeroMean(const std::string& msg) : ValidationError("NonZeroMean", msg) {}
};
struct WrongDimension : ValidationError {
    explicit WrongDimension(const std::string& msg) : ValidationError("WrongDimension", msg) {}
};
struct ResolutionTooLow : ValidationError {
    explicit ResolutionTooLow(const std::string& msg) : ValidationError("ResolutionTooLow", msg) {}
};
struct OutOfRange : ValidationError {
    explicit OutOfRange(const std::string& msg) : ValidationError("OutOfRange", msg) {}
};
struct InfeasibleGeometry : ValidationError {
    explicit InfeasibleGeometry(const std::string& msg) : ValidationError("InfeasibleGeometry", msg) {}
};
struct ModeIncompatible : ValidationError {
    explicit ModeIncompatible(const std::string& msg) : ValidationError("ModeIncompatible", msg) {}
};
struct EmptyCloud : ValidationError {
    explicit EmptyCloud(const std::string& msg) : ValidationError("EmptyCloud", msg) {}
};
struct BadConfig : ValidationError {
    explicit BadConfig(const std::string& msg) : ValidationError("BadConfig", msg) {}
};

struct ApproximationFailed : NumericalError {
    explicit ApproximationFailed(const std::string& msg) : NumericalError("ApproximationFailed", msg) {}
};
struct NonMonotoneG : NumericalError {
    explicit NonMonotoneG(const std::string& msg) : NumericalError("NonMonotoneG", msg) {}
};
struct NonInvertibleG : NumericalError {
    explicit NonInvertibleG(const std::string& msg) : NumericalError("NonInvertibleG", msg) {}
};
struct HypothesisFailed : NumericalError {
    explicit HypothesisFailed(const std::string& msg) : NumericalError("HypothesisFailed", msg) {}
};
struct Overflow : NumericalError {
    explicit Overflow(const std::string& msg) : NumericalError("Overflow", msg) {}
};
struct MaxIterExceeded : NumericalError {
    explicit MaxIterExceeded(const std::string& msg) : NumericalError("MaxIterExceeded", msg) {}
};

}  // namespace graphbreak
