#pragma once

#include <stdexcept>
#include <string>

namespace multibase {

// Invalid inputs: bad base systems, out-of-range parameters.
// Mapped to exit code 2 by the CLI.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// Numeric failures: unreachable tolerances, failed saddle brackets.
// Mapped to exit code 3 by the CLI.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// Resource limits: table memory caps, oracle size caps.
// Mapped to exit code 4 by the CLI.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

} // namespace multibase
