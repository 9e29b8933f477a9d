#pragma once

#include <stdexcept>
#include <string>

namespace chem {

// Base error for all toolkit failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Data failed dictionary validation. The CLI maps this to exit code 2.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

} // namespace chem
