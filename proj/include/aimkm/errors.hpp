#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace aimkm {

/// Malformed or unusable input data (bad CSV, non-finite values, empty input).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what,
                       std::optional<std::size_t> line = std::nullopt,
                       std::optional<std::size_t> column = std::nullopt)
        : std::runtime_error(what), line_(line), column_(column) {}

    /// 1-based line of the offending row, when known.
    std::optional<std::size_t> line() const { return line_; }
    /// 1-based field index within the row, when known.
    std::optional<std::size_t> column() const { return column_; }

private:
    std::optional<std::size_t> line_;
    std::optional<std::size_t> column_;
};

/// Failure to read from or write to a stream or file.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by exhaustive routines when the instance is too large to enumerate.
class InfeasibleSizeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace aimkm
