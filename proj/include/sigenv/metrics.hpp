#pragma once

#include "sigenv/baselines.hpp"
#include "sigenv/wave.hpp"

#include <array>
#include <string>
#include <vector>

namespace sigenv {

/**
 * One comparison row: how a method did on a signal, and how long a
 * single extraction took.
 */
struct ComparisonRecord {
    std::string signal_name;
    std::string method;
    double error_per_frame = 0;
    double elapsed_seconds = 0;
};

struct PlausibilityCheck {
    std::string name;
    bool pass = false;
    double measure = 0; // the quantity the check compared
};

using PlausibilityReport = std::array<PlausibilityCheck, 4>;

// Mean over i of (e_i / 2 - |w_i|)^2. The envelope halved should pass
// near the mean rectified wave, so a perfect smooth envelope of the
// unit sinusoid scores 0.75 - 2/pi. Expects w normalized to [-1, 1].
double error_per_frame(const Wave& w, const std::vector<double>& envelope);

// Compute the method's envelope for a wave.
std::vector<double> run_method(const Wave& w, Method method,
                               const BaselineConfig& cfg = {});

// The four physical-plausibility checks, evaluated on the given wave:
//  1. bounded:    max(envelope) <= max(|w|)
//  2. band:       anchor count <= extremum count (proxy for the
//                 envelope not exceeding the wave's frequency range)
//  3. flatness:   max(e) - min(e) <= 1e-6 * max(|w|), meaningful when
//                 the caller passes an exactly periodic wave
//  4. scaling:    envelope(3w) = 3 * envelope(w) within 1e-12 relative,
//                 with identical anchor indices
PlausibilityReport plausibility_suite(const Wave& w, Method method,
                                      const BaselineConfig& cfg = {});

// Wall-clock seconds of one envelope extraction, median of 5 runs.
// File I/O is excluded; the full pipeline of the method is included.
double time_method(const Wave& w, Method method, const BaselineConfig& cfg = {});

// One record per method on the same (already normalized) wave.
std::vector<ComparisonRecord> compare_methods(const Wave& w,
                                              const std::string& signal_name,
                                              const BaselineConfig& cfg = {});

} // namespace sigenv
