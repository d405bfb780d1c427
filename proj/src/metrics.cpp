#include "sigenv/metrics.hpp"

#include "sigenv/envelope.hpp"
#include "sigenv/pulses.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace sigenv {

namespace {

double max_abs(const std::vector<double>& x) {
    double peak = 0.0;
    for (double v : x) {
        peak = std::max(peak, std::fabs(v));
    }
    return peak;
}

Wave scaled(const Wave& w, double c) {
    std::vector<double> s(w.samples());
    for (double& v : s) {
        v *= c;
    }
    return Wave(std::move(s), w.fps());
}

} // namespace

double error_per_frame(const Wave& w, const std::vector<double>& envelope) {
    if (envelope.size() != w.samples().size()) {
        throw std::invalid_argument("envelope length does not match wave length");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < envelope.size(); ++i) {
        const double d = envelope[i] / 2.0 - std::fabs(w.samples()[i]);
        acc += d * d;
    }
    return acc / static_cast<double>(envelope.size());
}

std::vector<double> run_method(const Wave& w, Method method, const BaselineConfig& cfg) {
    switch (method) {
    case Method::present:
        return extract_envelope(w).envelope;
    case Method::smoothing:
        return envelope_smoothing(w, cfg);
    case Method::lowpass:
        return envelope_lowpass(w, cfg);
    case Method::hilbert:
        return envelope_hilbert(w, cfg);
    }
    throw std::invalid_argument("unknown method");
}

PlausibilityReport plausibility_suite(const Wave& w, Method method,
                                      const BaselineConfig& cfg) {
    const double wave_peak = max_abs(w.samples());
    const std::vector<double> env = run_method(w, method, cfg);

    PlausibilityReport report;

    const double env_max = *std::max_element(env.begin(), env.end());
    report[0] = {"bounded magnitude", env_max <= wave_peak, env_max};

    std::size_t anchor_count = 0;
    std::size_t extremum_count = segment_pulses(w).points.size();
    if (method == Method::present) {
        anchor_count = extract_envelope(w).anchors.size();
    }
    report[1] = {"frequency range (anchor proxy)", anchor_count <= extremum_count,
                 static_cast<double>(anchor_count)};

    const double env_min = *std::min_element(env.begin(), env.end());
    const double flatness = env_max - env_min;
    report[2] = {"periodic flatness", flatness <= 1e-6 * wave_peak, flatness};

    const double c = 3.0;
    const std::vector<double> env_scaled = run_method(scaled(w, c), method, cfg);
    double worst = 0.0;
    const double denom = c * env_max;
    for (std::size_t i = 0; i < env.size(); ++i) {
        worst = std::max(worst, std::fabs(env_scaled[i] - c * env[i]));
    }
    bool scaling_ok = denom > 0.0 && worst <= 1e-12 * denom;
    if (method == Method::present) {
        const auto a = extract_envelope(w).anchors;
        const auto b = extract_envelope(scaled(w, c)).anchors;
        scaling_ok = scaling_ok && a.size() == b.size();
        for (std::size_t i = 0; scaling_ok && i < a.size(); ++i) {
            scaling_ok = a[i].index == b[i].index;
        }
    }
    report[3] = {"scale equivariance", scaling_ok, worst};

    return report;
}

double time_method(const Wave& w, Method method, const BaselineConfig& cfg) {
    std::array<double, 5> runs{};
    for (double& elapsed : runs) {
        const auto start = std::chrono::steady_clock::now();
        volatile double sink = run_method(w, method, cfg).back();
        (void)sink;
        const auto stop = std::chrono::steady_clock::now();
        elapsed = std::chrono::duration<double>(stop - start).count();
    }
    std::sort(runs.begin(), runs.end());
    return runs[runs.size() / 2];
}

std::vector<ComparisonRecord> compare_methods(const Wave& w,
                                              const std::string& signal_name,
                                              const BaselineConfig& cfg) {
    std::vector<ComparisonRecord> records;
    for (Method method : {Method::present, Method::smoothing, Method::lowpass,
                          Method::hilbert}) {
        ComparisonRecord rec;
        rec.signal_name = signal_name;
        rec.method = method_name(method);
        rec.error_per_frame = error_per_frame(w, run_method(w, method, cfg));
        rec.elapsed_seconds = time_method(w, method, cfg);
        records.push_back(std::move(rec));
    }
    return records;
}

} // namespace sigenv
