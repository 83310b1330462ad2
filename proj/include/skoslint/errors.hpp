#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skoslint {

// Location-carrying diagnostic produced by the parsers. In lenient mode
// these are collected instead of thrown.
struct ParseDiagnostic {
    std::size_t line = 0;
    std::size_t column = 0;
    std::string message;

    std::string to_string() const {
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
               message;
    }
};

class SyntaxError : public std::runtime_error {
public:
    explicit SyntaxError(ParseDiagnostic d)
        : std::runtime_error(d.to_string()), diagnostic_(std::move(d)) {}

    const ParseDiagnostic& diagnostic() const { return diagnostic_; }

private:
    ParseDiagnostic diagnostic_;
};

// Raised for syntactically valid input using constructs outside the
// supported Turtle subset (collections, quoted triples).
class UnsupportedFeature : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

class NoConceptsError : public std::runtime_error {
public:
    NoConceptsError() : std::runtime_error("graph contains no concepts; cannot infer namespace") {}
};

class InvalidThresholdError : public std::invalid_argument {
public:
    explicit InvalidThresholdError(double t)
        : std::invalid_argument("similarity threshold must lie in (0,1], got " +
                                std::to_string(t)) {}
};

class DuplicateIssueError : public std::logic_error {
public:
    explicit DuplicateIssueError(const std::string& id)
        : std::logic_error("duplicate issue result: " + id) {}
};

class EndpointUnreachableError : public std::runtime_error {
public:
    explicit EndpointUnreachableError(const std::string& endpoint)
        : std::runtime_error("SPARQL endpoint unreachable: " + endpoint) {}
};

}  // namespace skoslint
