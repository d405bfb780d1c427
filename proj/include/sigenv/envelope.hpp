#pragma once

#include "sigenv/geometry.hpp"
#include "sigenv/pulses.hpp"
#include "sigenv/wave.hpp"

#include <optional>
#include <vector>

namespace sigenv {

struct Anchor {
    int index = 0;        // sample index in the source wave
    double amplitude = 0; // original wave units, signed per frontier mode

    bool operator==(const Anchor&) const = default;
};

/**
 * Envelope of one wave: the extrema the rolling circle selected, the
 * full-length linear interpolation through them, and the curvature
 * estimate that drove the selection (absent when the geometry was flat
 * or had a single point, in which case every extremum is an anchor).
 *
 * The envelope equals the anchor amplitude exactly at each anchor
 * index, is affine between consecutive anchors, and extends as a
 * constant before the first and after the last anchor.
 */
struct EnvelopeResult {
    std::vector<Anchor> anchors;
    std::vector<double> envelope;
    std::optional<CurvatureEstimate> radius_used;
};

// Independent positive and negative envelopes of the same wave.
struct FrontierPair {
    EnvelopeResult superior; // from positive pulses, values >= 0
    EnvelopeResult inferior; // from negative pulses, values <= 0
};

struct CarrierResult {
    std::vector<double> carrier; // w / envelope, 0 where the envelope vanishes
};

/**
 * Greedy rolling-circle scan over a normalized geometry.
 *
 * Starting from the first point as pivot, a candidate joins the anchor
 * set when the radius-r circle through pivot and candidate (arriving
 * from above) contains no later point strictly inside; the candidate
 * then becomes the pivot. A chord longer than the diameter admits no
 * circle, so nothing blocks the candidate and it is accepted. The first
 * and last points are always selected.
 *
 * Returns indices into g.points, strictly increasing.
 */
std::vector<int> retrieve_envelope(const NormalizedGeometry& g, double r);

// Full pipeline: segment pulses, normalize, estimate the radius, select
// anchors, interpolate. Degenerate flat geometry keeps every extremum.
EnvelopeResult extract_envelope(const Wave& w);

// Same pipeline starting from an existing pulse set (the normalization
// and radius are computed on exactly these points).
EnvelopeResult extract_envelope(const PulseSet& ps);

// Run the pipeline independently on the positive and the negative
// pulses; the inferior result is negated back to non-positive values.
// Throws degenerate_signal naming the missing frontier when the wave
// has pulses of only one sign.
FrontierPair extract_frontiers(const Wave& w);

// Element-wise w / envelope with a guard: samples where the envelope is
// below 1e-12 * max|w| become 0. |carrier| is exactly 1 at anchor
// indices.
CarrierResult recover_carrier(const Wave& w, const EnvelopeResult& e);

} // namespace sigenv
