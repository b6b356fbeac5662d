#pragma once

#include <stdexcept>
#include <string>

namespace wyner {

// Invalid argument supplied by a caller (bad p, k out of range, K mismatch...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed textual input: realization strings, fractions, CSV rows.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A state that well-formed inputs can never produce.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace wyner
