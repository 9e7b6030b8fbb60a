#include <fmt/format.h>

#include <ostream>

#include "text.hpp"

namespace itbatch {

namespace {

constexpr std::string_view kHeader = "timestamp,kind,batch_index,kernel_index";

std::string optional_index(const std::optional<std::uint64_t>& index) {
    return index ? std::to_string(*index) : std::string();
}

}  // namespace

void write_trace(std::ostream& out, const EventTrace& trace) {
    out << "# schema=" << kSchemaVersion << '\n' << kHeader << '\n';
    for (const auto& e : trace.events) {
        out << fmt::format("{:.9f},{},{},{}\n", e.timestamp, to_string(e.kind),
                           optional_index(e.batch_index), optional_index(e.kernel_index));
    }
}

std::vector<TraceEvent> parse_trace_text(std::string_view text, std::string_view source) {
    using detail::fail_at;
    std::vector<TraceEvent> events;
    bool header_seen = false;

    for (const auto& line : detail::split_lines(text)) {
        const std::string_view body = detail::trim(line.text);
        if (body.empty()) continue;
        if (!header_seen) {
            if (detail::consume_schema_line(line, source)) continue;
            if (body != kHeader) {
                fail_at(source, line.number, "expected header '" + std::string(kHeader) + "'");
            }
            header_seen = true;
            continue;
        }
        const auto fields = detail::split_fields(body);
        if (fields.size() != 4) fail_at(source, line.number, "expected 4 fields");

        TraceEvent e;
        const auto ts = detail::parse_double(fields[0]);
        if (!ts) fail_at(source, line.number, "malformed timestamp");
        e.timestamp = *ts;
        try {
            e.kind = event_kind_from_string(fields[1]);
        } catch (const std::invalid_argument& ex) {
            fail_at(source, line.number, ex.what());
        }
        for (std::size_t f = 2; f < 4; ++f) {
            if (fields[f].empty()) continue;
            const auto index = detail::parse_unsigned(fields[f]);
            if (!index) fail_at(source, line.number, "malformed index '" + std::string(fields[f]) + "'");
            (f == 2 ? e.batch_index : e.kernel_index) = *index;
        }
        events.push_back(e);
    }
    if (!header_seen) throw DataError(std::string(source) + ": missing header");
    return events;
}

}  // namespace itbatch
