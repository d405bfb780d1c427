#pragma once

#include "sigenv/envelope.hpp"
#include "sigenv/wave.hpp"

#include <vector>

namespace sigenv {

/**
 * Pseudo-cycle locations read off the frontier anchors. The midline
 * pairs the k-th positive anchor with the k-th negative anchor, up to
 * the shorter list.
 */
struct CycleSegmentation {
    std::vector<int> positive_positions; // superior-frontier anchor indices
    std::vector<int> negative_positions; // inferior-frontier anchor indices
    std::vector<double> midline;         // pairwise averages
};

/**
 * Length-normalized mean of the pseudo-cycle segments.
 */
struct AverageWaveform {
    int length = 0;                // resample length L
    std::vector<double> mean_cycle; // exactly L samples
    int cycle_count = 0;           // segments averaged
};

// Anchor positions of both frontiers plus their pairwise midline.
// Throws degenerate_signal when either frontier has fewer than 2
// anchors.
CycleSegmentation segment_cycles(const Wave& w, const FrontierPair& f);

// Split the wave at consecutive superior-frontier anchors, resample
// each segment to L = round(mean segment length) points at positions
// i * len / L (one cycle, right endpoint open), and average pointwise.
// Requires at least 2 positive positions.
AverageWaveform average_waveform(const Wave& w, const CycleSegmentation& seg);

} // namespace sigenv
