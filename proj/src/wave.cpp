#include "sigenv/wave.hpp"

#include "sigenv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace sigenv {

Wave::Wave(std::vector<double> samples, int fps)
    : samples_(std::move(samples)), fps_(fps) {
    if (samples_.empty()) {
        throw std::invalid_argument("wave must contain at least one sample");
    }
    for (double s : samples_) {
        if (!std::isfinite(s)) {
            throw std::invalid_argument("wave contains a non-finite sample");
        }
    }
    if (fps_ < 1) {
        throw std::invalid_argument("fps must be a positive integer");
    }
}

Wave normalize_wave(const Wave& w) {
    double peak = 0.0;
    for (double s : w.samples()) {
        peak = std::max(peak, std::fabs(s));
    }
    if (peak == 0.0) {
        throw degenerate_signal("degenerate signal: zero everywhere");
    }
    std::vector<double> scaled(w.samples());
    for (double& s : scaled) {
        s /= peak;
    }
    return Wave(std::move(scaled), w.fps());
}

double eval_polynomial(std::span<const double> coeffs, double t) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

Wave synth_am_sinusoid(double carrier_cycles, std::span<const double> envelope_coeffs,
                       int n, int fps) {
    if (n < 2) {
        throw std::invalid_argument("synth_am_sinusoid: n must be >= 2");
    }
    if (!(carrier_cycles > 0.0)) {
        throw std::invalid_argument("synth_am_sinusoid: carrier_cycles must be positive");
    }
    std::vector<double> samples(static_cast<std::size_t>(n));
    const double phase_step = 2.0 * std::numbers::pi * carrier_cycles / n;
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / n;
        samples[static_cast<std::size_t>(i)] =
            eval_polynomial(envelope_coeffs, t) * std::sin(phase_step * i);
    }
    return Wave(std::move(samples), fps);
}

Wave add_gaussian_noise(const Wave& w, double sigma, unsigned seed) {
    if (!(sigma >= 0.0)) {
        throw std::invalid_argument("noise sigma must be non-negative");
    }
    std::mt19937 rng(seed);
    std::normal_distribution<double> noise(0.0, sigma);
    std::vector<double> samples(w.samples());
    for (double& s : samples) {
        s += noise(rng);
    }
    return Wave(std::move(samples), w.fps());
}

} // namespace sigenv
