#pragma once

#include <stdexcept>
#include <string>

namespace stfb {

// Invalid parameter or precondition violation. Maps to exit/status code 2.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical method failed to reach its accuracy contract. Maps to exit/status code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace stfb
