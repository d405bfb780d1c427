#include "sigenv/envelope.hpp"

#include "sigenv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sigenv {

namespace {
constexpr double kCarrierGuardRel = 1e-12; // of max |w|

// Linear interpolation through the anchors, constant outside their span.
// Anchor samples are assigned directly so the envelope matches them
// bit-for-bit.
std::vector<double> interpolate_anchors(const std::vector<Anchor>& anchors, int n) {
    std::vector<double> env(static_cast<std::size_t>(n));
    const Anchor& first = anchors.front();
    const Anchor& last = anchors.back();
    std::fill(env.begin(), env.begin() + first.index, first.amplitude);
    std::fill(env.begin() + last.index, env.end(), last.amplitude);
    for (std::size_t k = 0; k + 1 < anchors.size(); ++k) {
        const Anchor& a = anchors[k];
        const Anchor& b = anchors[k + 1];
        env[static_cast<std::size_t>(a.index)] = a.amplitude;
        const double span = b.index - a.index;
        for (int i = a.index + 1; i < b.index; ++i) {
            env[static_cast<std::size_t>(i)] =
                a.amplitude + (b.amplitude - a.amplitude) * ((i - a.index) / span);
        }
    }
    env[static_cast<std::size_t>(last.index)] = last.amplitude;
    return env;
}

EnvelopeResult result_from_selection(const PulseSet& ps, std::vector<int> selected,
                                     std::optional<CurvatureEstimate> estimate) {
    EnvelopeResult out;
    out.radius_used = estimate;
    out.anchors.reserve(selected.size());
    for (int k : selected) {
        const ExtremaPoint& p = ps.points[static_cast<std::size_t>(k)];
        out.anchors.push_back({p.index, p.magnitude});
    }
    out.envelope = interpolate_anchors(out.anchors, ps.source_length);
    return out;
}
} // namespace

std::vector<int> retrieve_envelope(const NormalizedGeometry& g, double r) {
    const int m = g.count();
    if (m < 2) {
        throw std::invalid_argument("insufficient points for geometry");
    }
    if (!(r > 0.0)) {
        throw std::invalid_argument("radius must be positive");
    }

    std::vector<int> selected{0};
    int pivot = 0;
    int candidate = 1;
    while (candidate < m) {
        const auto center = circle_center(r, g.points[static_cast<std::size_t>(pivot)],
                                          g.points[static_cast<std::size_t>(candidate)]);
        bool empty = true;
        if (center) {
            for (int i = candidate + 1; i < m; ++i) {
                if (point_in_circle(*center, r, g.points[static_cast<std::size_t>(i)])) {
                    empty = false;
                    break;
                }
            }
        }
        if (empty) {
            selected.push_back(candidate);
            pivot = candidate;
        }
        ++candidate;
    }
    return selected;
}

EnvelopeResult extract_envelope(const PulseSet& ps) {
    const int m = ps.count();
    if (m == 0) {
        throw degenerate_signal("no pulses found");
    }
    if (m == 1) {
        // Single extremum: constant envelope at its magnitude.
        return result_from_selection(ps, {0}, std::nullopt);
    }

    const NormalizedGeometry g = normalize_points(ps);
    std::vector<int> selected;
    std::optional<CurvatureEstimate> estimate;
    try {
        estimate = average_radius(difference_vectors(g));
        selected = retrieve_envelope(g, estimate->radius);
    } catch (const degenerate_geometry&) {
        // Perfectly flat geometry: every extremum already lies on the
        // envelope.
        selected.resize(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) {
            selected[static_cast<std::size_t>(k)] = k;
        }
    }
    return result_from_selection(ps, std::move(selected), estimate);
}

EnvelopeResult extract_envelope(const Wave& w) {
    return extract_envelope(segment_pulses(w));
}

FrontierPair extract_frontiers(const Wave& w) {
    const PulseSet ps = segment_pulses(w);

    PulseSet positive;
    PulseSet negative;
    try {
        positive = filter_by_sign(ps, +1);
    } catch (const degenerate_signal&) {
        throw degenerate_signal("superior frontier unavailable: no positive pulses");
    }
    try {
        negative = filter_by_sign(ps, -1);
    } catch (const degenerate_signal&) {
        throw degenerate_signal("inferior frontier unavailable: no negative pulses");
    }

    FrontierPair out;
    out.superior = extract_envelope(positive);
    EnvelopeResult inferior = extract_envelope(negative);
    for (Anchor& a : inferior.anchors) {
        a.amplitude = -a.amplitude;
    }
    for (double& v : inferior.envelope) {
        v = -v;
    }
    out.inferior = std::move(inferior);
    return out;
}

CarrierResult recover_carrier(const Wave& w, const EnvelopeResult& e) {
    if (static_cast<int>(e.envelope.size()) != w.size()) {
        throw std::invalid_argument("envelope length does not match wave length");
    }
    double peak = 0.0;
    for (double s : w.samples()) {
        peak = std::max(peak, std::fabs(s));
    }
    const double guard = kCarrierGuardRel * peak;

    CarrierResult out;
    out.carrier.resize(e.envelope.size());
    for (std::size_t i = 0; i < e.envelope.size(); ++i) {
        const double env = e.envelope[i];
        out.carrier[i] = env >= guard ? w.samples()[i] / env : 0.0;
    }
    return out;
}

} // namespace sigenv
