#pragma once

#include <stdexcept>
#include <string>

namespace qx {

enum class ErrorKind {
    parameter,          // invalid arguments or infeasible request
    parse,              // malformed input text
    generation,         // randomized construction exceeded its retry cap
    capacity,           // request exceeds a hard resource cap
    unsupported_depth,  // operation defined for p = 1 only
    coverage,           // a required class is missing from a map
    numerical,          // non-finite value encountered
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace qx
