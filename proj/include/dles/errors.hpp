#pragma once

#include <stdexcept>
#include <string>

namespace dles {

/// Input violates an operation's precondition (empty set, bad SE size, colour outside the bi-cone).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Non-finite intermediate in a numeric routine.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Request for a feature the colour pipeline does not define (non-flat colour SEs).
class UnsupportedFeature : public std::logic_error {
public:
    explicit UnsupportedFeature(const std::string& what) : std::logic_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dles
