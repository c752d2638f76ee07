#pragma once

#include <stdexcept>
#include <string>

namespace shadowline {

// Input or hypothesis violations (CLI exit code 2).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A result cannot be produced at the requested precision (exit code 3).
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematical abstention: the computation ran but the answer is
// undetermined at the tracked precision (exit code 4).
struct abstention_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace shadowline
