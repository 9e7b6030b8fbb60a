#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "itbatch/fitting.hpp"
#include "itbatch/measurement.hpp"
#include "itbatch/model.hpp"
#include "itbatch/optimizer.hpp"
#include "itbatch/simulator.hpp"

namespace itbatch {

// Malformed input file content. what() is "<source>:<line>: <reason>" when
// the problem is tied to a line.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Every file format here may start with a "# schema=N" line; a missing line
// means version 1, any other version is rejected.
inline constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Params file: "key = value" lines, '#' comments. Required keys: t_k, t_i,
// t_a, t_l, k_c, b_c. t_b defaults to t_a. m_base / m_node are optional but
// must appear together.
// ---------------------------------------------------------------------------
struct ParamsFile {
    TimingParameters timing;
    std::optional<MemoryModel> memory;
};

ParamsFile parse_params_text(std::string_view text, std::string_view source = "<params>");
ParamsFile parse_params(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Measurement CSV: header "batch_size,run_index,seconds", one sample per row.
// run_index counts 0, 1, 2, ... separately for every batch size. Points come
// back in ascending batch size.
// ---------------------------------------------------------------------------
MeasurementSeries parse_measurements_text(std::string_view text,
                                          std::string_view source = "<measurements>");
MeasurementSeries parse_measurements(const std::filesystem::path& path);
void write_measurements(std::ostream& out, const MeasurementSeries& series);

// ---------------------------------------------------------------------------
// Trace CSV: header "timestamp,kind,batch_index,kernel_index", timestamps
// with 9 decimals, empty fields for absent indices.
// ---------------------------------------------------------------------------
void write_trace(std::ostream& out, const EventTrace& trace);
std::vector<TraceEvent> parse_trace_text(std::string_view text,
                                         std::string_view source = "<trace>");

// ---------------------------------------------------------------------------
// Result lines printed by the CLI.
// ---------------------------------------------------------------------------
std::string format_scientific(double value);  // 6 significant digits
std::string format_summary(const TraceSummary& s);
std::string format_fit(const FitResult& fit);
std::string format_recommendation(const Recommendation& rec);
std::string format_speedup(const SpeedupEstimate& s);

std::string read_file(const std::filesystem::path& path);

}  // namespace itbatch
