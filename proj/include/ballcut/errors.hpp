#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ballcut {

/// Stable error identifiers shared by the library and the command line.
enum class ErrorCode {
    IncompatibleModes,
    DivisionByZero,
    IndeterminateAtPrecision,
    NonRepresentableRoot,
    DimensionMismatch,
    PureElement,
    Unrealizable,
    PoleAtRealization,
    NewtonNoConvergence,
    SyntaxError,
    UnknownIdentifier,
    InvalidArgument,
    ConstantFunction,
    IsolationFailed,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(what), code_(code), position_(position) {}

    ErrorCode code() const noexcept { return code_; }

    /// Byte offset into the parsed text, for syntax errors.
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace ballcut
