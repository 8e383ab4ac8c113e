#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordeg {

// Raised by edge-list parsing; carries the 1-based line of the offending input.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Raised when a verification-only routine is asked to exceed its size cap.
class limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ordeg
