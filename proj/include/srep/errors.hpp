#pragma once

#include <stdexcept>
#include <string>

namespace srep {

// Error taxonomy mirrors the CLI exit codes: usage 1, I/O 2, numeric 3.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid domain objects (bad grids, non-finite coords, zero-length spokes).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input files; carries line/field context in the message.
struct parse_error : io_error {
    using io_error::io_error;
};

} // namespace srep
