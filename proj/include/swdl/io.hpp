#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace swdl {

class SampledSignal;
struct LctResult;
struct TFGrid;
struct RadonMap;
struct RateAmplitude;
struct MomentReport;
struct BoundReport;

namespace io {

inline constexpr const char* library_version = "0.1.0";

/// Shortest round-trip decimal form, locale independent ("." always).
std::string format_double(double value);

/// Locale-independent parse; throws ConfigError on malformed input.
double parse_double(const std::string& text);

std::vector<std::string> split_csv_line(const std::string& line);

std::string trim(const std::string& text);

/// FNV-1a 64-bit over a text blob; used to stamp manifests.
std::uint64_t fnv1a(const std::string& text);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

// CSV payloads. All writers emit full double precision with '.' decimals and
// are byte-deterministic for identical inputs.
void write_sampled_signal_csv(const std::filesystem::path& path, const SampledSignal& s);
SampledSignal read_sampled_signal_csv(const std::filesystem::path& path);

void write_lct_csv(const std::filesystem::path& path, const LctResult& r);

/// Long-format "t,u,re,im,abs" rows, t-major.
void write_tfgrid_csv(const std::filesystem::path& path, const TFGrid& g);

/// 8-bit P5 heatmap of |W| normalized to its peak; row = t index ascending,
/// column = u index ascending.
void write_tfgrid_pgm(const std::filesystem::path& path, const TFGrid& g);

void write_radon_csv(const std::filesystem::path& path, const RadonMap& m);
void write_rate_amplitude_csv(const std::filesystem::path& path, const RateAmplitude& r);

std::string moment_report_kv(const MomentReport& r);
std::string bound_report_kv(const BoundReport& r);
void write_reports_csv(const std::filesystem::path& path, const MomentReport& m,
                       const std::vector<BoundReport>& bounds);

} // namespace io
} // namespace swdl
