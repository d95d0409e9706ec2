#pragma once

#include <stdexcept>
#include <string>

namespace bdae {

/// Shapes of images, patch matrices or operators do not agree.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A linear solve could not be carried out (e.g. a singular normal matrix).
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An image file is unreadable, corrupt, or in an unsupported format.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bdae
