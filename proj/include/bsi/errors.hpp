#pragma once

#include <stdexcept>
#include <string>

namespace bsi {

// Malformed or out-of-contract input (dimensions, preconditions, file formats).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An iterative routine failed to converge or produced non-finite output.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bsi
