#ifndef WOUND_ERRORS_HPP
#define WOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wound {

// Invalid parameters, mismatched structures, malformed input.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration would exceed the configured candidate budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A checked identity or witness failed to verify.
struct verify_error : std::runtime_error {
    explicit verify_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace wound

#endif
