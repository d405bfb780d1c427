#include "sigenv/pulses.hpp"

#include "sigenv/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace sigenv {

PulseSet segment_pulses(const Wave& w) {
    PulseSet out;
    out.source_length = w.size();

    const std::vector<double>& x = w.samples();
    int run_sign = 0;       // sign of the open pulse, 0 when none
    int best_index = -1;    // extremum of the open pulse
    double best_magnitude = 0.0;

    auto close_run = [&] {
        if (run_sign != 0) {
            out.points.push_back({best_index, best_magnitude, run_sign});
        }
    };

    for (int i = 0; i < w.size(); ++i) {
        const double v = x[static_cast<std::size_t>(i)];
        const int s = (v > 0.0) - (v < 0.0);
        if (s == 0) {
            continue; // zeros belong to no pulse and do not end one
        }
        if (s != run_sign) {
            close_run();
            run_sign = s;
            best_index = i;
            best_magnitude = std::fabs(v);
        } else if (std::fabs(v) > best_magnitude) {
            best_index = i;
            best_magnitude = std::fabs(v);
        }
    }
    close_run();

    if (out.points.empty()) {
        throw degenerate_signal("no pulses found");
    }
    return out;
}

PulseSet filter_by_sign(const PulseSet& ps, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("sign must be +1 or -1");
    }
    PulseSet out;
    out.source_length = ps.source_length;
    for (const ExtremaPoint& p : ps.points) {
        if (p.sign == sign) {
            out.points.push_back(p);
        }
    }
    if (out.points.empty()) {
        throw degenerate_signal("no pulses of requested sign");
    }
    return out;
}

} // namespace sigenv
