#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace jgrog {

enum class ErrorKind {
    invalid_graph,  // malformed vertex/arc/edge data
    cap_exceeded,   // enumeration or search limit hit
    out_of_domain,  // argument outside the range an operation is defined on
    illegal_move,   // predation batch or strategy step not permitted
    parse,          // malformed input file
    internal,       // postcondition failure, indicates a bug
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Raised by strategy replay; carries the 0-based index of the offending batch.
class StrategyError : public Error {
public:
    StrategyError(std::size_t step, const std::string& what)
        : Error(ErrorKind::illegal_move, "step " + std::to_string(step) + ": " + what),
          step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

}  // namespace jgrog
