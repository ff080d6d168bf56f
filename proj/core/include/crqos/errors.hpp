#pragma once

#include <stdexcept>
#include <string>

namespace crqos {

/// Bad user input: out-of-range parameters, inconsistent experiment specs.
/// The CLI maps this (and std::domain_error) to exit code 1.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed config file. Carries the 1-based line number of the offence.
struct ParseError : ValidationError {
    ParseError(const std::string& msg, int line_no)
        : ValidationError(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    int line;
};

/// Filesystem failure while reading or writing results. CLI exit code 2.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace crqos
