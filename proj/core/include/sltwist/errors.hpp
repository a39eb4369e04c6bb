#pragma once

#include <stdexcept>
#include <string>

namespace sltwist {

// Bad user input: inadmissible pair, tau out of range, malformed target.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Integration, bracketing or root-finding broke down.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sltwist
