#include "sigenv/baselines.hpp"

#include <fftw3.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace sigenv {

namespace {

std::vector<double> rectified(const Wave& w) {
    std::vector<double> out(w.samples());
    for (double& v : out) {
        v = std::fabs(v);
    }
    return out;
}

// Reflect an out-of-range index back into [0, n-1] without repeating the
// edge sample (..., x2, x1, | x0, x1, ..., xn-1 |, xn-2, ...). Works for
// any pad length, even far beyond n.
int mirror_index(int i, int n) {
    if (n == 1) {
        return 0;
    }
    const int period = 2 * (n - 1);
    int j = i % period;
    if (j < 0) {
        j += period;
    }
    return j < n ? j : period - j;
}

void validate_savgol(const BaselineConfig& cfg) {
    if (cfg.sg_window < 1 || cfg.sg_window % 2 == 0) {
        throw std::invalid_argument("sg_window must be a positive odd integer");
    }
    if (cfg.sg_degree < 0 || cfg.sg_degree >= cfg.sg_window) {
        throw std::invalid_argument("sg_degree must satisfy 0 <= degree < window");
    }
}

void validate_cutoff(double cutoff_hz, int fps) {
    if (!(cutoff_hz > 0.0) || !(cutoff_hz < fps / 2.0)) {
        throw std::invalid_argument("cutoff frequency must lie in (0, fps/2)");
    }
}

struct Biquad {
    double b0, b1, b2; // numerator
    double a1, a2;     // denominator (a0 normalized to 1)
};

// Order-2 Butterworth low-pass via the bilinear transform with
// frequency prewarping. Unit gain at DC.
Biquad design_butterworth2(double cutoff_hz, int fps) {
    const double warped = std::tan(std::numbers::pi * cutoff_hz / fps);
    const double w2 = warped * warped;
    const double k = std::numbers::sqrt2 * warped;
    const double norm = 1.0 / (w2 + k + 1.0);
    return Biquad{
        w2 * norm,
        2.0 * w2 * norm,
        w2 * norm,
        2.0 * (w2 - 1.0) * norm,
        (w2 - k + 1.0) * norm,
    };
}

// Direct form II transposed, state preloaded with the steady-state
// response to x[0] so a constant input produces a constant output from
// the first sample.
void filter_in_place(const Biquad& f, std::vector<double>& x) {
    double z1 = (f.b1 - f.a1 + f.b2 - f.a2) * x.front();
    double z2 = (f.b2 - f.a2) * x.front();
    for (double& v : x) {
        const double in = v;
        const double out = f.b0 * in + z1;
        z1 = f.b1 * in - f.a1 * out + z2;
        z2 = f.b2 * in - f.a2 * out;
        v = out;
    }
}

// FFTW plan creation is not thread-safe; execution is.
std::mutex fftw_plan_mutex;

} // namespace

const char* method_name(Method m) {
    switch (m) {
    case Method::present:
        return "present";
    case Method::smoothing:
        return "smoothing";
    case Method::lowpass:
        return "lowpass";
    case Method::hilbert:
        return "hilbert";
    }
    return "unknown";
}

std::vector<double> savitzky_golay_kernel(int window, int degree) {
    if (window < 1 || window % 2 == 0 || degree < 0 || degree >= window) {
        throw std::invalid_argument("invalid Savitzky-Golay configuration");
    }
    const int half = window / 2;
    const int terms = degree + 1;

    // Least-squares polynomial fit evaluated at the window center. The
    // abscissa is scaled to [-1, 1] to keep the normal equations well
    // conditioned for higher degrees.
    std::vector<double> moments(static_cast<std::size_t>(2 * degree + 1), 0.0);
    const double scale = half > 0 ? 1.0 / half : 1.0;
    for (int j = -half; j <= half; ++j) {
        double p = 1.0;
        const double t = j * scale;
        for (int q = 0; q <= 2 * degree; ++q) {
            moments[static_cast<std::size_t>(q)] += p;
            p *= t;
        }
    }

    std::vector<double> normal(static_cast<std::size_t>(terms * terms));
    for (int p = 0; p < terms; ++p) {
        for (int q = 0; q < terms; ++q) {
            normal[static_cast<std::size_t>(p * terms + q)] =
                moments[static_cast<std::size_t>(p + q)];
        }
    }

    // Solve (A^T A) coeffs = e0 by Gaussian elimination with partial
    // pivoting; the system is (degree+1)^2, tiny.
    std::vector<double> rhs(static_cast<std::size_t>(terms), 0.0);
    rhs[0] = 1.0;
    for (int col = 0; col < terms; ++col) {
        int pivot = col;
        for (int row = col + 1; row < terms; ++row) {
            if (std::fabs(normal[static_cast<std::size_t>(row * terms + col)]) >
                std::fabs(normal[static_cast<std::size_t>(pivot * terms + col)])) {
                pivot = row;
            }
        }
        for (int q = 0; q < terms; ++q) {
            std::swap(normal[static_cast<std::size_t>(col * terms + q)],
                      normal[static_cast<std::size_t>(pivot * terms + q)]);
        }
        std::swap(rhs[static_cast<std::size_t>(col)], rhs[static_cast<std::size_t>(pivot)]);
        const double diag = normal[static_cast<std::size_t>(col * terms + col)];
        if (diag == 0.0) {
            throw std::invalid_argument("singular Savitzky-Golay system");
        }
        for (int row = 0; row < terms; ++row) {
            if (row == col) {
                continue;
            }
            const double factor =
                normal[static_cast<std::size_t>(row * terms + col)] / diag;
            for (int q = col; q < terms; ++q) {
                normal[static_cast<std::size_t>(row * terms + q)] -=
                    factor * normal[static_cast<std::size_t>(col * terms + q)];
            }
            rhs[static_cast<std::size_t>(row)] -= factor * rhs[static_cast<std::size_t>(col)];
        }
    }
    for (int q = 0; q < terms; ++q) {
        rhs[static_cast<std::size_t>(q)] /= normal[static_cast<std::size_t>(q * terms + q)];
    }

    std::vector<double> kernel(static_cast<std::size_t>(window));
    for (int j = -half; j <= half; ++j) {
        double p = 1.0;
        const double t = j * scale;
        double value = 0.0;
        for (int q = 0; q < terms; ++q) {
            value += rhs[static_cast<std::size_t>(q)] * p;
            p *= t;
        }
        kernel[static_cast<std::size_t>(j + half)] = value;
    }
    return kernel;
}

std::vector<double> envelope_smoothing(const Wave& w, const BaselineConfig& cfg) {
    validate_savgol(cfg);
    const std::vector<double> kernel = savitzky_golay_kernel(cfg.sg_window, cfg.sg_degree);
    const std::vector<double> x = rectified(w);
    const int n = w.size();
    const int half = cfg.sg_window / 2;

    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // symmetric kernel: pair the two mirrored taps
        double acc = kernel[static_cast<std::size_t>(half)] *
                     x[static_cast<std::size_t>(mirror_index(i, n))];
        for (int j = 1; j <= half; ++j) {
            acc += kernel[static_cast<std::size_t>(half + j)] *
                   (x[static_cast<std::size_t>(mirror_index(i - j, n))] +
                    x[static_cast<std::size_t>(mirror_index(i + j, n))]);
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

std::vector<double> butterworth_lowpass_zero_phase(const std::vector<double>& x,
                                                   double cutoff_hz, int fps) {
    if (x.empty()) {
        throw std::invalid_argument("cannot filter an empty signal");
    }
    validate_cutoff(cutoff_hz, fps);
    const Biquad f = design_butterworth2(cutoff_hz, fps);

    std::vector<double> y(x);
    filter_in_place(f, y);
    std::reverse(y.begin(), y.end());
    filter_in_place(f, y);
    std::reverse(y.begin(), y.end());
    return y;
}

std::vector<double> envelope_lowpass(const Wave& w, const BaselineConfig& cfg) {
    if (cfg.butter_order != 2) {
        throw std::invalid_argument("only Butterworth order 2 is implemented");
    }
    return butterworth_lowpass_zero_phase(rectified(w), cfg.lowpass_cutoff_hz, w.fps());
}

std::vector<std::complex<double>> analytic_signal(const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    if (n < 2) {
        throw std::invalid_argument("analytic signal requires at least 2 samples");
    }

    std::vector<std::complex<double>> spectrum(static_cast<std::size_t>(n), {0.0, 0.0});
    std::vector<std::complex<double>> result(static_cast<std::size_t>(n));
    {
        std::scoped_lock lock(fftw_plan_mutex);
        fftw_plan forward = fftw_plan_dft_r2c_1d(
            n, const_cast<double*>(x.data()),
            reinterpret_cast<fftw_complex*>(spectrum.data()), FFTW_ESTIMATE);
        fftw_execute(forward);
        fftw_destroy_plan(forward);
    }

    // One-sided spectrum: keep DC (and Nyquist for even n), double the
    // positive frequencies, zero the negative half.
    const int half = n / 2;
    for (int k = 1; k < half; ++k) {
        spectrum[static_cast<std::size_t>(k)] *= 2.0;
    }
    if (n % 2 == 1) {
        spectrum[static_cast<std::size_t>(half)] *= 2.0;
    }
    for (int k = half + 1; k < n; ++k) {
        spectrum[static_cast<std::size_t>(k)] = {0.0, 0.0};
    }

    {
        std::scoped_lock lock(fftw_plan_mutex);
        fftw_plan backward = fftw_plan_dft_1d(
            n, reinterpret_cast<fftw_complex*>(spectrum.data()),
            reinterpret_cast<fftw_complex*>(result.data()), FFTW_BACKWARD, FFTW_ESTIMATE);
        fftw_execute(backward);
        fftw_destroy_plan(backward);
    }

    const double inv_n = 1.0 / n;
    for (auto& v : result) {
        v *= inv_n;
    }
    return result;
}

std::vector<double> envelope_hilbert(const Wave& w, const BaselineConfig& cfg) {
    std::vector<double> filtered = butterworth_lowpass_zero_phase(
        w.samples(), cfg.hilbert_prefilter_hz, w.fps());
    for (double& v : filtered) {
        v = std::fabs(v);
    }
    const auto analytic = analytic_signal(filtered);

    std::vector<double> out(analytic.size());
    for (std::size_t i = 0; i < analytic.size(); ++i) {
        out[i] = std::abs(analytic[i]);
    }
    return out;
}

} // namespace sigenv
