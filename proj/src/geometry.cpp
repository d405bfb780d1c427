#include "sigenv/geometry.hpp"

#include "sigenv/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace sigenv {

namespace {
constexpr double kFlatGuardRel = 1e-9;   // of mean horizontal spacing
constexpr double kInsideSlackRel = 1e-9; // of r^2
} // namespace

NormalizedGeometry normalize_points(const PulseSet& ps) {
    const int m = ps.count();
    if (m < 2) {
        throw std::invalid_argument("insufficient points for geometry");
    }

    double magnitude_sum = 0.0;
    for (const ExtremaPoint& p : ps.points) {
        magnitude_sum += p.magnitude;
    }
    const double mean_spacing =
        (ps.points.back().index - ps.points.front().index) / static_cast<double>(m - 1);
    const double mean_magnitude = magnitude_sum / m;
    const double scale = mean_spacing / mean_magnitude;

    NormalizedGeometry g;
    g.y_scale = scale;
    g.points.reserve(static_cast<std::size_t>(m));
    for (const ExtremaPoint& p : ps.points) {
        g.points.push_back({static_cast<double>(p.index), p.magnitude * scale});
    }
    return g;
}

std::vector<Point2> difference_vectors(const NormalizedGeometry& g) {
    if (g.count() < 2) {
        throw std::invalid_argument("insufficient points for geometry");
    }
    std::vector<Point2> vs;
    vs.reserve(g.points.size() - 1);
    for (std::size_t k = 0; k + 1 < g.points.size(); ++k) {
        vs.push_back({g.points[k + 1].x - g.points[k].x,
                      g.points[k + 1].y - g.points[k].y});
    }
    return vs;
}

CurvatureEstimate average_radius(const std::vector<Point2>& vectors) {
    if (vectors.empty()) {
        throw std::invalid_argument("average_radius requires at least one vector");
    }
    double dx_sum = 0.0;
    for (const Point2& v : vectors) {
        if (!(v.x > 0.0)) {
            throw std::invalid_argument("difference vectors must advance in x");
        }
        dx_sum += v.x;
    }
    const double flat_eps = kFlatGuardRel * (dx_sum / static_cast<double>(vectors.size()));

    CurvatureEstimate est;
    double radius_sum = 0.0;
    for (const Point2& v : vectors) {
        const double rise = std::fabs(v.y);
        if (rise < flat_eps) {
            ++est.terms_skipped;
            continue;
        }
        radius_sum += v.x * std::hypot(v.x, v.y) / rise;
        ++est.terms_used;
    }
    if (est.terms_used == 0) {
        throw degenerate_geometry("degenerate geometry: all segments horizontal");
    }
    est.radius = radius_sum / est.terms_used;
    return est;
}

std::optional<Point2> circle_center(double r, const Point2& a, const Point2& b) {
    if (a == b) {
        throw std::invalid_argument("coincident points");
    }
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double chord = std::hypot(dx, dy);
    if (chord > 2.0 * r) {
        return std::nullopt; // chord longer than diameter
    }
    const double half = chord / 2.0;
    // chord <= 2r, so the radicand is non-negative up to rounding
    const double offset = std::sqrt(std::max(0.0, r * r - half * half));
    const Point2 mid{a.x + dx / 2.0, a.y + dy / 2.0};
    // unit normal to the chord; its y component is dx / chord
    const double nx = -dy / chord;
    const double ny = dx / chord;
    if (ny >= 0.0) {
        return Point2{mid.x + offset * nx, mid.y + offset * ny};
    }
    return Point2{mid.x - offset * nx, mid.y - offset * ny};
}

bool point_in_circle(const Point2& center, double r, const Point2& p) {
    const double dx = p.x - center.x;
    const double dy = p.y - center.y;
    return dx * dx + dy * dy < r * r * (1.0 - kInsideSlackRel);
}

} // namespace sigenv
