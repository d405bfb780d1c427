#pragma once

#include "sigenv/metrics.hpp"
#include "sigenv/wave.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace sigenv {

struct CsvColumn {
    std::string name;
    std::vector<double> values;
};

// Read a RIFF/WAVE file containing 16-bit PCM. Samples are scaled to
// [-1, 1) by 1/32768 and channels are mixed down by arithmetic mean.
// Throws ingest_error with a distinct message for a malformed header,
// an unsupported codec, or a truncated file.
Wave read_wav(const std::filesystem::path& path);

// Write a mono 16-bit PCM file; samples are clamped to [-1, 1] and
// quantized by 32768. Mainly used by the synth command and tests.
void write_wav16(const std::filesystem::path& path, const Wave& w);

// Header line then one row per entry; floats carry 9 significant
// digits, enough to round-trip through read_csv at that precision.
// Columns must be non-empty and of equal length.
void write_csv(const std::filesystem::path& path, std::span<const CsvColumn> columns);

std::vector<CsvColumn> read_csv(const std::filesystem::path& path);

// signal,method,error_per_frame,elapsed_seconds — one row per record.
void write_comparison_csv(const std::filesystem::path& path,
                          std::span<const ComparisonRecord> records);

} // namespace sigenv
