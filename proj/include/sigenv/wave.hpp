#pragma once

#include <span>
#include <vector>

namespace sigenv {

/**
 * A finite real-valued signal with its frame rate.
 *
 * Samples are dimensionless amplitudes, nominally in [-1, 1] once
 * normalized. Time is carried as the sample index everywhere in this
 * library; seconds only appear at the CLI boundary via i = t * fps.
 * Instances are immutable after construction and safe to share across
 * threads.
 */
class Wave {
public:
    // Throws std::invalid_argument if samples is empty, contains a
    // non-finite value, or fps < 1.
    Wave(std::vector<double> samples, int fps);

    const std::vector<double>& samples() const { return samples_; }
    int fps() const { return fps_; }
    int size() const { return static_cast<int>(samples_.size()); }

private:
    std::vector<double> samples_;
    int fps_;
};

// Rescale so the absolute maximum is exactly 1. Idempotent.
// Throws degenerate_signal("degenerate signal: zero everywhere") if the
// wave has no nonzero sample.
Wave normalize_wave(const Wave& w);

// Evaluate c0 + c1*t + c2*t^2 + ... by Horner's rule.
double eval_polynomial(std::span<const double> coeffs, double t);

// Amplitude-modulated test tone: sample i = E(i/n) * sin(2*pi*cycles*i/n)
// where E is the polynomial with the given coefficients on [0, 1). The
// true envelope is known by construction, which makes this the ground
// truth for recovery tests. Requires n >= 2 and carrier_cycles > 0.
Wave synth_am_sinusoid(double carrier_cycles, std::span<const double> envelope_coeffs,
                       int n, int fps);

// Additive Gaussian noise with standard deviation sigma, deterministic
// for a given seed.
Wave add_gaussian_noise(const Wave& w, double sigma, unsigned seed);

} // namespace sigenv
