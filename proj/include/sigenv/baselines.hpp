#pragma once

#include "sigenv/wave.hpp"

#include <complex>
#include <vector>

namespace sigenv {

enum class Method {
    present,   // rolling-circle extraction from this library
    smoothing, // Savitzky-Golay on |w|
    lowpass,   // zero-phase Butterworth on |w|
    hilbert,   // analytic-signal modulus of the rectified pre-filtered wave
};

const char* method_name(Method m);

/**
 * Reference configurations of the three conventional demodulators.
 * Windows and cutoffs are the comparison defaults; the CLI can override
 * them.
 */
struct BaselineConfig {
    int sg_window = 3001;             // odd, > sg_degree
    int sg_degree = 3;
    int butter_order = 2;             // only order 2 is implemented
    double lowpass_cutoff_hz = 10.0;  // < fps / 2
    double hilbert_prefilter_hz = 100.0;
};

// Savitzky-Golay least-squares smoothing of |w|, with mirror padding of
// half a window on each side so short signals still work.
std::vector<double> envelope_smoothing(const Wave& w, const BaselineConfig& cfg = {});

// Order-2 Butterworth low-pass (bilinear transform), run forward then
// backward over |w| so the result has zero phase lag.
std::vector<double> envelope_lowpass(const Wave& w, const BaselineConfig& cfg = {});

// Pre-filter the wave, rectify, and take the modulus of the discrete
// analytic signal.
std::vector<double> envelope_hilbert(const Wave& w, const BaselineConfig& cfg = {});

// Discrete analytic signal via the one-sided-spectrum FFT construction:
// the real part is x itself, the imaginary part its Hilbert transform.
std::vector<std::complex<double>> analytic_signal(const std::vector<double>& x);

// Single-pass building blocks, exposed for reuse and direct testing.
std::vector<double> savitzky_golay_kernel(int window, int degree);
std::vector<double> butterworth_lowpass_zero_phase(const std::vector<double>& x,
                                                   double cutoff_hz, int fps);

} // namespace sigenv
