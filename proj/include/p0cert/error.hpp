#pragma once

#include <stdexcept>
#include <string>

namespace p0cert {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Incompatible shapes, out-of-range indices, malformed arguments.
struct dimension_error : error {
    using error::error;
};

// Malformed input documents (CLI exit code 3).
struct input_error : error {
    using error::error;
};

// An internal cross-check failed. This signals a bug in the tool, never
// bad user input (CLI exit code 4).
struct consistency_error : error {
    using error::error;
};

}  // namespace p0cert
