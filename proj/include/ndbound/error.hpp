#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ndbound {

enum class ErrorCode {
    EmptyVector,
    OutOfRange,
    NonFinite,
    TooManyNeighbors,
    NoConvergence,
    BadPair,
    BlockOutOfRange,
    NotSquare,
    TooFewReps,
    SlotCapExceeded,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorCode code);

// Structured failure raised by every library operation. `index` names the
// offending element when one exists (validation errors, bad pair indices).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::optional<std::size_t> index = std::nullopt)
        : std::runtime_error(std::move(message)), code_(code), index_(index) {}

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> index_;
};

}  // namespace ndbound
