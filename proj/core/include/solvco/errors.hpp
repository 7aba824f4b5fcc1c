#ifndef SOLVCO_ERRORS_HPP
#define SOLVCO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace solvco {

// Malformed input (bad JSON, bad scalar grammar, dimension cap exceeded).
// The CLI maps these to exit code 1.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

enum class ErrorCode {
    DivisionByZero,
    UnboundParameter,
    DenominatorVanishes,
    NonSquare,
    NotSemisimple,
    NotCommuting,
    FieldTooSmall,
    JacobiFails,
    NotSolvable,
    RegularElementNotFound,
    HullBracketInvalid,
    WeightNotClosed,
    NotComposable,
    NotSymplectic,
    OddDimension,
    NonCommutingAction,
    UnsupportedTranscendence,
    UndecidableWithParameters,
    QuasiIsoFails,
};

const char* error_code_name(ErrorCode code);

// Typed mathematical failure (undecidable, unsupported, or inconsistent
// input at the mathematical level).  The CLI maps these to exit code 2.
// `payload` carries the machine-checkable witness (offending polynomial
// factor, triple of indices, ...) as a string.
class MathError : public std::runtime_error {
public:
    MathError(ErrorCode code, const std::string& what, std::string payload = {})
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          code_(code),
          payload_(std::move(payload)) {}

    ErrorCode code() const { return code_; }
    const std::string& payload() const { return payload_; }

private:
    ErrorCode code_;
    std::string payload_;
};

} // namespace solvco

#endif
