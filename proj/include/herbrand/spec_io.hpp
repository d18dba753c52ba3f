#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "herbrand/voltage_cover.hpp"

namespace herbrand {

using Json = nlohmann::ordered_json;

struct EdgeRecord {
  std::string from;
  std::string to;
  /// Voltage on the from -> to direction; absent in base-only files.
  std::optional<std::uint32_t> voltage;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// On-disk cover specification:
///   {"name"?, "description"?, "p", "vertices": [labels], "edges": [{"from", "to", "voltage"?}]}
struct CoverSpecFile {
  std::string name;
  std::string description;
  std::uint32_t p = 0;
  std::vector<std::string> vertices;
  std::vector<EdgeRecord> edges;

  friend bool operator==(const CoverSpecFile&, const CoverSpecFile&) = default;
};

/// Structural parsing only. Throws SpecParseError.
CoverSpecFile parse_cover_spec(const Json& j);
CoverSpecFile parse_cover_spec_text(const std::string& text);
CoverSpecFile load_cover_spec(const std::filesystem::path& path);

Json to_json(const CoverSpecFile& spec);

/// Base graph with labelled vertices; edge k of the file is undirected edge k.
/// Throws UnknownVertex or SpecParseError (duplicate labels).
SerreGraph base_graph(const CoverSpecFile& spec);

/// Throws UnknownVertex, InvalidVoltage (missing or out-of-range voltage) or
/// std::invalid_argument (p not an odd prime).
VoltageSpec to_voltage_spec(const CoverSpecFile& spec);

/// Same base with the given forward voltages.
CoverSpecFile with_voltages(CoverSpecFile spec, const std::vector<std::uint32_t>& voltages);

}  // namespace herbrand
