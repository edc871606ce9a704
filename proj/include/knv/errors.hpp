#pragma once

#include <stdexcept>
#include <string>

namespace knv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural misuse: zero denominator, division by the zero operator,
// auxiliary dependents where only u is allowed.
struct DomainError : Error {
    using Error::Error;
};

// A point evaluation hit a vanishing denominator (and retries ran out).
struct EvaluationError : Error {
    using Error::Error;
};

// Linearly dependent input where independence is required.
struct DegenerateInput : Error {
    using Error::Error;
};

// A tail-times-tail product whose density is not integrable in the ring.
struct NonIntegrableTailProduct : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
          line(line_),
          column(col_) {}
};

}  // namespace knv
