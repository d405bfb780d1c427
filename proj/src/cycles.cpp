#include "sigenv/cycles.hpp"

#include "sigenv/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace sigenv {

CycleSegmentation segment_cycles(const Wave& /*w*/, const FrontierPair& f) {
    if (f.superior.anchors.size() < 2) {
        throw degenerate_signal("superior frontier has fewer than 2 anchors");
    }
    if (f.inferior.anchors.size() < 2) {
        throw degenerate_signal("inferior frontier has fewer than 2 anchors");
    }

    CycleSegmentation seg;
    for (const Anchor& a : f.superior.anchors) {
        seg.positive_positions.push_back(a.index);
    }
    for (const Anchor& a : f.inferior.anchors) {
        seg.negative_positions.push_back(a.index);
    }
    const std::size_t paired =
        std::min(seg.positive_positions.size(), seg.negative_positions.size());
    seg.midline.reserve(paired);
    for (std::size_t k = 0; k < paired; ++k) {
        seg.midline.push_back((seg.positive_positions[k] + seg.negative_positions[k]) / 2.0);
    }
    return seg;
}

AverageWaveform average_waveform(const Wave& w, const CycleSegmentation& seg) {
    const std::vector<int>& cuts = seg.positive_positions;
    if (cuts.size() < 2) {
        throw std::invalid_argument("average_waveform requires at least one segment");
    }

    const int segments = static_cast<int>(cuts.size()) - 1;
    const double mean_length =
        (cuts.back() - cuts.front()) / static_cast<double>(segments);
    const int length = std::max(1, static_cast<int>(std::lround(mean_length)));

    AverageWaveform avg;
    avg.length = length;
    avg.cycle_count = segments;
    avg.mean_cycle.assign(static_cast<std::size_t>(length), 0.0);

    const std::vector<double>& x = w.samples();
    for (int s = 0; s < segments; ++s) {
        const int begin = cuts[static_cast<std::size_t>(s)];
        const int seg_len = cuts[static_cast<std::size_t>(s + 1)] - begin;
        for (int i = 0; i < length; ++i) {
            // position within [begin, next cut), right endpoint open so
            // consecutive segments tile one full cycle each
            const double t = begin + static_cast<double>(i) * seg_len / length;
            const int lo = static_cast<int>(t);
            const double frac = t - lo;
            const double value =
                frac == 0.0
                    ? x[static_cast<std::size_t>(lo)]
                    : x[static_cast<std::size_t>(lo)] * (1.0 - frac) +
                          x[static_cast<std::size_t>(lo + 1)] * frac;
            avg.mean_cycle[static_cast<std::size_t>(i)] += value;
        }
    }
    for (double& v : avg.mean_cycle) {
        v /= segments;
    }
    return avg;
}

} // namespace sigenv
