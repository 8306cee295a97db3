#pragma once

#include <stdexcept>
#include <string>

namespace tauber {

// Violation of a numeric or algebraic contract (division by zero, pole
// order out of range, uncertifiable product tail, quadrature failure, ...).
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem-level failure: unreadable/unwritable path, malformed file.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tauber
