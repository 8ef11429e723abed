#pragma once

#include <stdexcept>
#include <string>

namespace polydom {

/// Precondition violated by the caller (bad n, unknown vertex, mismatched graph).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An algorithm was handed an input outside its contract (e.g. a non-band graph).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Internal invariant broken; indicates a bug in this library.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed text input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace polydom
