#pragma once

#include <stdexcept>
#include <string>

namespace pidom {

/// Malformed textual input (edge lists, labelings, family specs).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Parameters outside the range any known formula or construction covers.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Graph too large for exhaustive search without an explicit override.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pidom
