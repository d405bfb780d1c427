#pragma once

#include "sigenv/wave.hpp"

#include <vector>

namespace sigenv {

/**
 * One extremum per pulse: the sample index, the absolute amplitude at
 * that index, and the sign of the pulse it came from.
 */
struct ExtremaPoint {
    int index = 0;        // position in the source wave
    double magnitude = 0; // |sample| at index, always > 0
    int sign = 0;         // +1 or -1

    bool operator==(const ExtremaPoint&) const = default;
};

/**
 * The ordered extremum set of a wave, one point per pulse, strictly
 * increasing in index. When built from a full wave, consecutive points
 * alternate sign; sign-filtered subsets do not.
 */
struct PulseSet {
    std::vector<ExtremaPoint> points;
    int source_length = 0; // n of the originating wave

    int count() const { return static_cast<int>(points.size()); }
};

// Split a wave into pulses and pick one extremum per pulse.
//
// A pulse is a maximal group of uniformly-signed nonzero samples; exact
// zeros act as transparent boundaries and belong to no pulse, so a zero
// that the wave merely touches (no sign change across it) does not split
// a pulse in two. Per pulse the point is the first sample attaining the
// largest magnitude. Leading/trailing partial pulses are kept.
//
// Throws degenerate_signal("no pulses found") when every sample is zero.
PulseSet segment_pulses(const Wave& w);

// Subsequence of points with the requested sign (+1 or -1), order kept.
// Throws degenerate_signal("no pulses of requested sign") when empty.
PulseSet filter_by_sign(const PulseSet& ps, int sign);

} // namespace sigenv
