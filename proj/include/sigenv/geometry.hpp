#pragma once

#include "sigenv/pulses.hpp"

#include <optional>
#include <vector>

namespace sigenv {

struct Point2 {
    double x = 0;
    double y = 0;

    bool operator==(const Point2&) const = default;
};

/**
 * Extrema points mapped into a unitless frame where both axes carry the
 * sample-index unit. The abscissa keeps the original indices; the
 * ordinate is the pulse magnitude multiplied by y_scale, chosen so the
 * mean ordinate equals the mean horizontal spacing. An average pulse
 * then spans a square, which is what makes a single circle radius a
 * meaningful curvature threshold for the whole wave.
 */
struct NormalizedGeometry {
    std::vector<Point2> points; // x strictly increasing
    double y_scale = 0;         // index units per amplitude unit

    int count() const { return static_cast<int>(points.size()); }
};

/**
 * Average equivalent-circle radius of a difference-vector set, plus how
 * many vectors contributed and how many the near-horizontal guard
 * excluded.
 */
struct CurvatureEstimate {
    double radius = 0; // index units, > 0
    int terms_used = 0;
    int terms_skipped = 0;
};

// Map a pulse set (m >= 2 points) into the unitless square frame:
// x_j = i_j, y_j = |w_j| * s with
//   s = ((i_last - i_first) / (m - 1)) / (mean magnitude).
// Throws std::invalid_argument("insufficient points for geometry") for
// m < 2.
NormalizedGeometry normalize_points(const PulseSet& ps);

// Vectors between consecutive points, v_k = points[k+1] - points[k].
// All returned vectors have positive x.
std::vector<Point2> difference_vectors(const NormalizedGeometry& g);

/**
 * Equivalent-circle radius of each difference vector, averaged.
 *
 * A vector v turns the tangent of a circle by the angle it makes with
 * the horizontal while advancing v.x, so the circle doing the same has
 * radius v.x * |v| / |v.y|. Vectors flatter than
 * eps = 1e-9 * (mean v.x) are excluded from the average instead of
 * contributing near-infinite radii.
 *
 * Throws degenerate_geometry("degenerate geometry: all segments
 * horizontal") when every vector is excluded; callers treat that wave
 * as perfectly periodic and keep every extremum.
 */
CurvatureEstimate average_radius(const std::vector<Point2>& vectors);

// Center of the radius-r circle through a and b that arrives from
// y -> +infinity, i.e. the candidate with the greater ordinate. Returns
// nullopt when the chord is longer than the diameter (no such circle).
// Throws std::invalid_argument("coincident points") when a == b.
std::optional<Point2> circle_center(double r, const Point2& a, const Point2& b);

// Strictly-inside test with relative slack: true iff
// |p - center|^2 < r^2 * (1 - 1e-9). Points on the boundary are not
// inside, and near-tangent configurations do not flap with rounding.
bool point_in_circle(const Point2& center, double r, const Point2& p);

} // namespace sigenv
