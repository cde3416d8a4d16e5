#pragma once

#include <stdexcept>
#include <string>

namespace ahtk {

/// Bad user input: malformed files, unknown vertices, broken invariants.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The base graph contains a 3-cycle or 4-cycle, so homotopy lifting is unavailable.
class girth_violation : public validation_error {
public:
    explicit girth_violation(const std::string& msg) : validation_error(msg) {}
};

/// A column-wise lift assembled into a grid that is not a graph homomorphism.
/// Signals an invalid input square (or a bug) rather than bad user data.
class internal_inconsistency : public std::runtime_error {
public:
    explicit internal_inconsistency(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ahtk
