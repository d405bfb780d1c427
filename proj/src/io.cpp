#include "sigenv/io.hpp"

#include "sigenv/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sigenv {

namespace {

std::uint32_t read_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
           static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}

std::uint16_t read_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | p[1] << 8);
}

void write_u32(std::ostream& os, std::uint32_t v) {
    const std::array<char, 4> bytes{static_cast<char>(v & 0xff),
                                    static_cast<char>(v >> 8 & 0xff),
                                    static_cast<char>(v >> 16 & 0xff),
                                    static_cast<char>(v >> 24 & 0xff)};
    os.write(bytes.data(), bytes.size());
}

void write_u16(std::ostream& os, std::uint16_t v) {
    const std::array<char, 2> bytes{static_cast<char>(v & 0xff),
                                    static_cast<char>(v >> 8 & 0xff)};
    os.write(bytes.data(), bytes.size());
}

} // namespace

Wave read_wav(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw ingest_error("cannot open file: " + path.string());
    }
    std::vector<unsigned char> data{std::istreambuf_iterator<char>(file),
                                    std::istreambuf_iterator<char>()};

    if (data.size() < 12 || std::memcmp(data.data(), "RIFF", 4) != 0 ||
        std::memcmp(data.data() + 8, "WAVE", 4) != 0) {
        throw ingest_error("malformed WAV header (not a RIFF/WAVE file): " + path.string());
    }

    bool have_fmt = false;
    std::uint16_t channels = 0;
    std::uint16_t bits = 0;
    std::uint32_t sample_rate = 0;
    const unsigned char* pcm = nullptr;
    std::size_t pcm_bytes = 0;

    std::size_t pos = 12;
    while (pos + 8 <= data.size()) {
        const unsigned char* chunk = data.data() + pos;
        const std::uint32_t chunk_size = read_u32(chunk + 4);
        if (pos + 8 + chunk_size > data.size()) {
            throw ingest_error("truncated WAV file: " + path.string());
        }
        if (std::memcmp(chunk, "fmt ", 4) == 0) {
            if (chunk_size < 16) {
                throw ingest_error("malformed WAV header (short fmt chunk): " + path.string());
            }
            const std::uint16_t codec = read_u16(chunk + 8);
            channels = read_u16(chunk + 10);
            sample_rate = read_u32(chunk + 12);
            bits = read_u16(chunk + 22);
            if (codec != 1) {
                throw ingest_error("unsupported codec (only PCM is supported): " +
                                   path.string());
            }
            if (bits != 16) {
                throw ingest_error("unsupported sample format (only 16-bit PCM): " +
                                   path.string());
            }
            if (channels == 0 || sample_rate == 0) {
                throw ingest_error("malformed WAV header (zero channels or rate): " +
                                   path.string());
            }
            have_fmt = true;
        } else if (std::memcmp(chunk, "data", 4) == 0) {
            pcm = chunk + 8;
            pcm_bytes = chunk_size;
        }
        pos += 8 + chunk_size + (chunk_size % 2); // chunks are word-aligned
    }

    if (!have_fmt || pcm == nullptr) {
        throw ingest_error("truncated WAV file (missing fmt or data chunk): " +
                           path.string());
    }

    const std::size_t frame_bytes = static_cast<std::size_t>(channels) * 2;
    const std::size_t frames = pcm_bytes / frame_bytes;
    if (frames == 0) {
        throw ingest_error("WAV file contains no samples: " + path.string());
    }

    std::vector<double> samples(frames);
    for (std::size_t f = 0; f < frames; ++f) {
        double acc = 0.0;
        for (std::size_t c = 0; c < channels; ++c) {
            const unsigned char* s = pcm + f * frame_bytes + c * 2;
            const auto value = static_cast<std::int16_t>(read_u16(s));
            acc += value / 32768.0;
        }
        samples[f] = acc / channels;
    }
    return Wave(std::move(samples), static_cast<int>(sample_rate));
}

void write_wav16(const std::filesystem::path& path, const Wave& w) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open file for writing: " + path.string());
    }
    const std::uint32_t data_bytes = static_cast<std::uint32_t>(w.samples().size()) * 2;

    file.write("RIFF", 4);
    write_u32(file, 36 + data_bytes);
    file.write("WAVE", 4);
    file.write("fmt ", 4);
    write_u32(file, 16);
    write_u16(file, 1); // PCM
    write_u16(file, 1); // mono
    write_u32(file, static_cast<std::uint32_t>(w.fps()));
    write_u32(file, static_cast<std::uint32_t>(w.fps()) * 2);
    write_u16(file, 2);
    write_u16(file, 16);
    file.write("data", 4);
    write_u32(file, data_bytes);

    for (double s : w.samples()) {
        const double scaled = std::clamp(s, -1.0, 1.0) * 32768.0;
        const auto q = static_cast<std::int16_t>(
            std::clamp(std::lround(scaled), -32768L, 32767L));
        write_u16(file, static_cast<std::uint16_t>(q));
    }
    if (!file) {
        throw std::runtime_error("failed to write: " + path.string());
    }
}

void write_csv(const std::filesystem::path& path, std::span<const CsvColumn> columns) {
    if (columns.empty()) {
        throw std::invalid_argument("cannot write a CSV with no columns");
    }
    const std::size_t rows = columns.front().values.size();
    for (const CsvColumn& c : columns) {
        if (c.values.size() != rows) {
            throw std::invalid_argument("CSV columns must have equal length");
        }
    }

    std::ofstream file(path);
    if (!file) {
        throw std::runtime_error("cannot open file for writing: " + path.string());
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
        file << (c == 0 ? "" : ",") << columns[c].name;
    }
    file << '\n';

    std::array<char, 32> buf{};
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            std::snprintf(buf.data(), buf.size(), "%.9g", columns[c].values[r]);
            file << (c == 0 ? "" : ",") << buf.data();
        }
        file << '\n';
    }
    if (!file) {
        throw std::runtime_error("failed to write: " + path.string());
    }
}

std::vector<CsvColumn> read_csv(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) {
        throw ingest_error("cannot open file: " + path.string());
    }
    std::string line;
    if (!std::getline(file, line)) {
        throw ingest_error("empty CSV file: " + path.string());
    }

    std::vector<CsvColumn> columns;
    {
        std::stringstream header(line);
        std::string name;
        while (std::getline(header, name, ',')) {
            columns.push_back({name, {}});
        }
    }
    if (columns.empty()) {
        throw ingest_error("CSV file has no columns: " + path.string());
    }

    while (std::getline(file, line)) {
        if (line.empty()) {
            continue;
        }
        std::stringstream row(line);
        std::string cell;
        std::size_t c = 0;
        while (std::getline(row, cell, ',')) {
            if (c >= columns.size()) {
                throw ingest_error("CSV row has too many fields: " + path.string());
            }
            columns[c++].values.push_back(std::stod(cell));
        }
        if (c != columns.size()) {
            throw ingest_error("CSV row has too few fields: " + path.string());
        }
    }
    return columns;
}

void write_comparison_csv(const std::filesystem::path& path,
                          std::span<const ComparisonRecord> records) {
    std::ofstream file(path);
    if (!file) {
        throw std::runtime_error("cannot open file for writing: " + path.string());
    }
    file << "signal,method,error_per_frame,elapsed_seconds\n";
    std::array<char, 64> buf{};
    for (const ComparisonRecord& r : records) {
        std::snprintf(buf.data(), buf.size(), "%.9g,%.9g", r.error_per_frame,
                      r.elapsed_seconds);
        file << r.signal_name << ',' << r.method << ',' << buf.data() << '\n';
    }
    if (!file) {
        throw std::runtime_error("failed to write: " + path.string());
    }
}

} // namespace sigenv
