#pragma once

#include <stdexcept>

namespace astrogate {

// Error categories map onto CLI exit codes: config 1, simulation 2, I/O 3.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SimulationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace astrogate
