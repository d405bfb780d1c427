#pragma once

#include <stdexcept>

namespace sigenv {

// Input could not be parsed or loaded (bad file, unsupported codec, ...).
struct ingest_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Signal admits no envelope (zero everywhere, no pulses, missing sign, ...).
struct degenerate_signal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Extrema geometry carries no curvature information (all segments horizontal).
// Callers fall back to treating every extremum as an anchor.
struct degenerate_geometry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sigenv
