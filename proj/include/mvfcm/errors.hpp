#pragma once

#include <stdexcept>
#include <string>

namespace mvfcm {

// Invalid input shape, configuration value or file content.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Unreadable or unwritable file.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// The solver produced a non-finite objective.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mvfcm
