#include "sigenv/cli.hpp"

#include "sigenv/baselines.hpp"
#include "sigenv/cycles.hpp"
#include "sigenv/envelope.hpp"
#include "sigenv/errors.hpp"
#include "sigenv/io.hpp"
#include "sigenv/metrics.hpp"
#include "sigenv/wave.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace sigenv {

namespace {

namespace fs = std::filesystem;

struct SynthSpec {
    double cycles = 20.0;
    std::vector<double> coeffs{1.0};
    int n = 44100;
    int fps = 44100;
    double noise = 0.0; // sigma as a fraction of the clean peak
    unsigned seed = 1;
};

// "am:cycles=20,coeffs=1:0.5:-0.25,n=44100,fps=44100,noise=0.1,seed=7"
SynthSpec parse_synth_spec(const std::string& spec) {
    const std::string prefix = "am:";
    if (spec.rfind(prefix, 0) != 0) {
        throw std::invalid_argument("synth spec must start with 'am:'");
    }
    SynthSpec out;
    std::stringstream body(spec.substr(prefix.size()));
    std::string pair;
    while (std::getline(body, pair, ',')) {
        const auto eq = pair.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("synth spec entries must be key=value: " + pair);
        }
        const std::string key = pair.substr(0, eq);
        const std::string value = pair.substr(eq + 1);
        if (key == "cycles") {
            out.cycles = std::stod(value);
        } else if (key == "coeffs") {
            out.coeffs.clear();
            std::stringstream cs(value);
            std::string coeff;
            while (std::getline(cs, coeff, ':')) {
                out.coeffs.push_back(std::stod(coeff));
            }
            if (out.coeffs.empty()) {
                throw std::invalid_argument("synth spec coeffs must not be empty");
            }
        } else if (key == "n") {
            out.n = std::stoi(value);
        } else if (key == "fps") {
            out.fps = std::stoi(value);
        } else if (key == "noise") {
            out.noise = std::stod(value);
        } else if (key == "seed") {
            out.seed = static_cast<unsigned>(std::stoul(value));
        } else {
            throw std::invalid_argument("unknown synth spec key: " + key);
        }
    }
    return out;
}

Wave synthesize(const SynthSpec& spec) {
    Wave w = synth_am_sinusoid(spec.cycles, spec.coeffs, spec.n, spec.fps);
    if (spec.noise > 0.0) {
        double peak = 0.0;
        for (double s : w.samples()) {
            peak = std::max(peak, std::fabs(s));
        }
        w = add_gaussian_noise(w, spec.noise * peak, spec.seed);
    }
    return w;
}

Wave load_input(const std::string& input, const std::string& synth_spec, int csv_fps) {
    if (!synth_spec.empty()) {
        return synthesize(parse_synth_spec(synth_spec));
    }
    if (input.empty()) {
        throw std::invalid_argument("an input file or --synth spec is required");
    }
    const fs::path path(input);
    if (path.extension() == ".csv") {
        const auto columns = read_csv(path);
        const CsvColumn* samples = &columns.front();
        for (const CsvColumn& c : columns) {
            if (c.name == "sample") {
                samples = &c;
            }
        }
        return Wave(samples->values, csv_fps);
    }
    return read_wav(path);
}

fs::path sibling_output(const fs::path& base, const std::string& suffix) {
    fs::path out = base;
    out.replace_filename(base.stem().string() + suffix + base.extension().string());
    return out;
}

std::optional<Method> parse_method(const std::string& name) {
    if (name == "present") {
        return Method::present;
    }
    if (name == "smoothing") {
        return Method::smoothing;
    }
    if (name == "lowpass") {
        return Method::lowpass;
    }
    if (name == "hilbert") {
        return Method::hilbert;
    }
    return std::nullopt; // "all"
}

std::vector<double> index_column(std::size_t n) {
    std::vector<double> idx(n);
    for (std::size_t i = 0; i < n; ++i) {
        idx[i] = static_cast<double>(i);
    }
    return idx;
}

int cmd_extract(const Wave& w, const std::string& output, const std::string& mode,
                const std::string& method_name, const BaselineConfig& cfg,
                std::ostream& out) {
    const fs::path out_path(output);

    if (mode == "frontiers") {
        if (method_name != "present") {
            throw std::invalid_argument("frontier extraction only supports --method present");
        }
        const FrontierPair f = extract_frontiers(w);
        std::vector<CsvColumn> columns{
            {"index", index_column(w.samples().size())},
            {"sample", w.samples()},
            {"envelope", f.superior.envelope},
            {"inferior", f.inferior.envelope},
        };
        write_csv(out_path, columns);

        std::vector<CsvColumn> anchors{{"index", {}}, {"amplitude", {}}, {"frontier", {}}};
        for (const Anchor& a : f.superior.anchors) {
            anchors[0].values.push_back(a.index);
            anchors[1].values.push_back(a.amplitude);
            anchors[2].values.push_back(1.0);
        }
        for (const Anchor& a : f.inferior.anchors) {
            anchors[0].values.push_back(a.index);
            anchors[1].values.push_back(a.amplitude);
            anchors[2].values.push_back(-1.0);
        }
        write_csv(sibling_output(out_path, "_anchors"), anchors);
        out << "wrote " << out_path.string() << " and "
            << sibling_output(out_path, "_anchors").string() << "\n";
        return 0;
    }

    const auto method = parse_method(method_name);
    if (!method) {
        throw std::invalid_argument("--method all is only valid for compare");
    }
    if (*method == Method::present) {
        const EnvelopeResult e = extract_envelope(w);
        std::vector<CsvColumn> columns{
            {"index", index_column(w.samples().size())},
            {"sample", w.samples()},
            {"envelope", e.envelope},
        };
        write_csv(out_path, columns);

        std::vector<CsvColumn> anchors{{"index", {}}, {"amplitude", {}}};
        for (const Anchor& a : e.anchors) {
            anchors[0].values.push_back(a.index);
            anchors[1].values.push_back(a.amplitude);
        }
        write_csv(sibling_output(out_path, "_anchors"), anchors);
        out << "wrote " << out_path.string() << " and "
            << sibling_output(out_path, "_anchors").string() << "\n";
        return 0;
    }

    std::vector<CsvColumn> columns{
        {"index", index_column(w.samples().size())},
        {"sample", w.samples()},
        {"envelope", run_method(w, *method, cfg)},
    };
    write_csv(out_path, columns);
    out << "wrote " << out_path.string() << "\n";
    return 0;
}

int cmd_cycles(const Wave& w, const std::string& output, std::ostream& out) {
    const FrontierPair f = extract_frontiers(w);
    const CycleSegmentation seg = segment_cycles(w, f);
    const AverageWaveform avg = average_waveform(w, seg);

    const fs::path out_path(output);
    write_csv(out_path, std::vector<CsvColumn>{
                            {"index", index_column(avg.mean_cycle.size())},
                            {"amplitude", avg.mean_cycle},
                        });

    // positions file is truncated to the paired prefix so all columns
    // stay the same length
    const std::size_t paired = seg.midline.size();
    std::vector<CsvColumn> positions{
        {"k", index_column(paired)}, {"positive", {}}, {"negative", {}}, {"midline", {}}};
    for (std::size_t k = 0; k < paired; ++k) {
        positions[1].values.push_back(seg.positive_positions[k]);
        positions[2].values.push_back(seg.negative_positions[k]);
        positions[3].values.push_back(seg.midline[k]);
    }
    write_csv(sibling_output(out_path, "_positions"), positions);
    out << "wrote " << out_path.string() << " ("
        << avg.cycle_count << " cycles, length " << avg.length << ") and "
        << sibling_output(out_path, "_positions").string() << "\n";
    return 0;
}

int cmd_compare(const Wave& w, const std::string& signal_name, const std::string& output,
                const std::string& method_name, const BaselineConfig& cfg,
                std::ostream& out) {
    const Wave normalized = normalize_wave(w);
    std::vector<ComparisonRecord> records;
    if (const auto method = parse_method(method_name); method && method_name != "all") {
        ComparisonRecord rec;
        rec.signal_name = signal_name;
        rec.method = sigenv::method_name(*method);
        rec.error_per_frame = error_per_frame(normalized, run_method(normalized, *method, cfg));
        rec.elapsed_seconds = time_method(normalized, *method, cfg);
        records.push_back(std::move(rec));
    } else {
        records = compare_methods(normalized, signal_name, cfg);
    }
    write_comparison_csv(output, records);
    for (const ComparisonRecord& r : records) {
        out << r.signal_name << " " << r.method << ": error_per_frame=" << r.error_per_frame
            << " elapsed_seconds=" << r.elapsed_seconds << "\n";
    }
    return 0;
}

int cmd_synth(const SynthSpec& spec, const std::string& output, std::ostream& out) {
    const Wave w = synthesize(spec);
    const fs::path out_path(output);
    if (out_path.extension() == ".wav") {
        write_wav16(out_path, w);
    } else {
        write_csv(out_path, std::vector<CsvColumn>{
                                {"index", index_column(w.samples().size())},
                                {"sample", w.samples()},
                            });
    }
    out << "wrote " << out_path.string() << " (" << w.size() << " samples at "
        << w.fps() << " fps)\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parameter-free temporal envelope extraction for discrete signals"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    std::string synth_spec;
    std::string mode = "single";
    std::string method = "present";
    int csv_fps = 44100;
    BaselineConfig cfg;

    auto add_io = [&](CLI::App* sub, bool needs_input) {
        if (needs_input) {
            sub->add_option("input", input, "input signal (.wav or .csv)");
            sub->add_option("--synth", synth_spec,
                            "synthesize instead of reading a file, e.g. "
                            "\"am:cycles=20,coeffs=1:0.5,n=44100,fps=44100\"");
            sub->add_option("--fps", csv_fps, "frame rate to assume for CSV input");
        }
        sub->add_option("--output", output, "output CSV path")->required();
    };
    auto add_config = [&](CLI::App* sub) {
        sub->add_option("--method", method, "present|smoothing|lowpass|hilbert|all")
            ->check(CLI::IsMember({"present", "smoothing", "lowpass", "hilbert", "all"}));
        sub->add_option("--sg-window", cfg.sg_window, "Savitzky-Golay window width");
        sub->add_option("--sg-degree", cfg.sg_degree, "Savitzky-Golay polynomial degree");
        sub->add_option_function<double>(
            "--cutoff-hz",
            [&cfg](double hz) {
                cfg.lowpass_cutoff_hz = hz;
                cfg.hilbert_prefilter_hz = hz;
            },
            "Butterworth cutoff override for the low-pass and Hilbert pre-filters");
    };

    CLI::App* extract = app.add_subcommand("extract", "extract the envelope of a signal");
    add_io(extract, true);
    add_config(extract);
    extract->add_option("--mode", mode, "single|frontiers")
        ->check(CLI::IsMember({"single", "frontiers"}));

    CLI::App* frontiers =
        app.add_subcommand("frontiers", "extract the superior and inferior frontiers");
    add_io(frontiers, true);

    CLI::App* cycles =
        app.add_subcommand("cycles", "locate pseudo-cycles and average their waveform");
    add_io(cycles, true);

    CLI::App* compare =
        app.add_subcommand("compare", "compare the present method against the baselines");
    add_io(compare, true);
    add_config(compare);

    CLI::App* synth = app.add_subcommand("synth", "write a synthetic AM test signal");
    synth->add_option("--synth", synth_spec, "synthesis spec, e.g. \"am:cycles=20,coeffs=1\"")
        ->required();
    synth->add_option("--output", output, "output path (.wav or .csv)")->required();

    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (synth->parsed()) {
            return cmd_synth(parse_synth_spec(synth_spec), output, out);
        }
        const Wave w = load_input(input, synth_spec, csv_fps);
        const std::string signal_name =
            input.empty() ? std::string("synth") : fs::path(input).stem().string();
        if (extract->parsed()) {
            return cmd_extract(w, output, mode, method, cfg, out);
        }
        if (frontiers->parsed()) {
            return cmd_extract(w, output, "frontiers", "present", cfg, out);
        }
        if (cycles->parsed()) {
            return cmd_cycles(w, output, out);
        }
        if (compare->parsed()) {
            return cmd_compare(w, signal_name, output, method, cfg, out);
        }
        err << "error: no subcommand given\n";
        return 1;
    } catch (const ingest_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const degenerate_signal& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace sigenv
