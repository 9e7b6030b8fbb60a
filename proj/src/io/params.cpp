#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include "text.hpp"

namespace itbatch {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace {

constexpr std::array<std::string_view, 9> kKnownKeys{
    "t_k", "t_i", "t_a", "t_l", "t_b", "k_c", "b_c", "m_base", "m_node"};
constexpr std::array<std::string_view, 6> kRequiredKeys{"t_k", "t_i", "t_a", "t_l", "k_c", "b_c"};

}  // namespace

ParamsFile parse_params_text(std::string_view text, std::string_view source) {
    using detail::fail_at;
    std::map<std::string, double, std::less<>> values;

    const auto lines = detail::split_lines(text);
    for (const auto& line : lines) {
        if (line.number == 1 && detail::consume_schema_line(line, source)) continue;
        std::string_view body = line.text.substr(0, line.text.find('#'));
        body = detail::trim(body);
        if (body.empty()) continue;

        const auto eq = body.find('=');
        if (eq == std::string_view::npos) fail_at(source, line.number, "expected 'key = value'");
        const std::string key(detail::trim(body.substr(0, eq)));
        const std::string_view raw = detail::trim(body.substr(eq + 1));

        if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
            fail_at(source, line.number, "unknown key '" + key + "'");
        }
        if (values.contains(key)) fail_at(source, line.number, "duplicate key '" + key + "'");
        const auto value = detail::parse_double(raw);
        if (!value) {
            fail_at(source, line.number, "malformed number '" + std::string(raw) + "' for " + key);
        }
        if (*value < 0.0) fail_at(source, line.number, key + " must be >= 0");
        values.emplace(key, *value);
    }

    for (std::string_view key : kRequiredKeys) {
        if (!values.contains(key)) {
            throw DataError(std::string(source) + ": missing required key '" + std::string(key) + "'");
        }
    }

    ParamsFile file;
    auto& t = file.timing;
    t.kernel = values.at("t_k");
    t.intra_graph_gap = values.at("t_i");
    t.inter_graph_gap = values.at("t_a");
    t.launch_latency = values.at("t_l");
    t.baseline_gap = values.contains("t_b") ? values.at("t_b") : t.inter_graph_gap;
    t.creation_per_node = values.at("k_c");
    t.creation_base = values.at("b_c");

    const bool has_base = values.contains("m_base");
    const bool has_node = values.contains("m_node");
    if (has_base != has_node) {
        throw DataError(std::string(source) + ": m_base and m_node must be given together");
    }
    if (has_base) file.memory = MemoryModel{values.at("m_base"), values.at("m_node")};
    return file;
}

ParamsFile parse_params(const std::filesystem::path& path) {
    return parse_params_text(read_file(path), path.string());
}

}  // namespace itbatch
