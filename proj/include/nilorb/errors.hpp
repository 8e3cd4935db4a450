#pragma once

#include <stdexcept>
#include <string>

namespace nilorb {

// Violated precondition or mathematical constraint (CLI exit code 1).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad JSON, bad flag values (CLI exit code 2).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace nilorb
