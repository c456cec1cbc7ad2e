#pragma once

#include <stdexcept>
#include <string>

namespace epframe {

/// Input document could not be parsed. `line` is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// An exhaustive search ran out of its configured budget. Always explicit,
/// never a silently truncated answer.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& message) : std::runtime_error(message) {}
};

/// A constructive extraction could not produce the promised object
/// (e.g. a component without an even cycle).
class ExtractionError : public std::runtime_error {
public:
    explicit ExtractionError(const std::string& message) : std::runtime_error(message) {}
};

/// A certificate document is malformed or does not refer to the given graph.
class CertificateError : public std::runtime_error {
public:
    explicit CertificateError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace epframe
