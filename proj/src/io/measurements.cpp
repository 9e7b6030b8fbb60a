#include <map>
#include <ostream>

#include "text.hpp"

namespace itbatch {

namespace {
constexpr std::string_view kHeader = "batch_size,run_index,seconds";
}

MeasurementSeries parse_measurements_text(std::string_view text, std::string_view source) {
    using detail::fail_at;
    std::map<std::uint64_t, std::vector<double>> groups;
    bool header_seen = false;

    for (const auto& line : detail::split_lines(text)) {
        const std::string_view body = detail::trim(line.text);
        if (!header_seen) {
            if (body.empty()) continue;
            if (detail::consume_schema_line(line, source)) continue;
            if (body != kHeader) {
                fail_at(source, line.number, "expected header '" + std::string(kHeader) + "'");
            }
            header_seen = true;
            continue;
        }
        if (body.empty()) continue;

        const auto fields = detail::split_fields(body);
        if (fields.size() != 3) fail_at(source, line.number, "expected 3 fields");
        const auto batch = detail::parse_unsigned(fields[0]);
        if (!batch || *batch == 0) fail_at(source, line.number, "batch_size must be a positive integer");
        const auto run = detail::parse_unsigned(fields[1]);
        if (!run) fail_at(source, line.number, "run_index must be a non-negative integer");
        const auto seconds = detail::parse_double(fields[2]);
        if (!seconds || *seconds <= 0.0) fail_at(source, line.number, "seconds must be > 0");

        auto& samples = groups[*batch];
        if (*run != samples.size()) {
            fail_at(source, line.number,
                    "run_index " + std::to_string(*run) + " for batch_size " +
                        std::to_string(*batch) + " should be " + std::to_string(samples.size()));
        }
        samples.push_back(*seconds);
    }
    if (!header_seen) throw DataError(std::string(source) + ": missing header");
    if (groups.empty()) throw DataError(std::string(source) + ": no data rows");

    MeasurementSeries series;
    series.label = std::string(source);
    for (auto& [batch, samples] : groups) series.points.push_back({batch, std::move(samples)});
    return series;
}

MeasurementSeries parse_measurements(const std::filesystem::path& path) {
    auto series = parse_measurements_text(read_file(path), path.string());
    series.label = path.stem().string();
    return series;
}

void write_measurements(std::ostream& out, const MeasurementSeries& series) {
    out << "# schema=" << kSchemaVersion << '\n' << kHeader << '\n';
    for (const auto& p : series.points) {
        for (std::size_t r = 0; r < p.samples.size(); ++r) {
            out << p.batch_size << ',' << r << ',' << format_scientific(p.samples[r]) << '\n';
        }
    }
}

}  // namespace itbatch
