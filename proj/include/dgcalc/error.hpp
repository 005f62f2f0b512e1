#pragma once

#include <stdexcept>
#include <string>

namespace dgcalc {

/// Engine-level contract violation (universe mismatch, missing assignment, ...).
struct DgError : std::runtime_error {
    explicit DgError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Syntax or semantic error in an input file, with position.
struct ParseError : std::runtime_error {
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

}  // namespace dgcalc
