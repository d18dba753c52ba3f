#include "herbrand/spec_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "herbrand/errors.hpp"

namespace herbrand {

namespace {

template <typename T>
T field(const Json& j, const char* key, const char* where) {
  if (!j.contains(key)) throw SpecParseError(std::string(where) + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw SpecParseError(std::string(where) + ": \"" + key + "\" has the wrong type");
  }
}

}  // namespace

CoverSpecFile parse_cover_spec(const Json& j) {
  if (!j.is_object()) throw SpecParseError("cover spec must be a JSON object");
  CoverSpecFile spec;
  if (j.contains("name")) spec.name = field<std::string>(j, "name", "spec");
  if (j.contains("description")) spec.description = field<std::string>(j, "description", "spec");
  const auto p = field<std::int64_t>(j, "p", "spec");
  if (p < 3 || p > 65521) throw SpecParseError("p = " + std::to_string(p) + " is out of range");
  spec.p = static_cast<std::uint32_t>(p);
  spec.vertices = field<std::vector<std::string>>(j, "vertices", "spec");
  if (!j.contains("edges") || !j.at("edges").is_array()) throw SpecParseError("spec: \"edges\" must be an array");
  for (const Json& e : j.at("edges")) {
    if (!e.is_object()) throw SpecParseError("edge records must be objects");
    EdgeRecord rec{field<std::string>(e, "from", "edge"), field<std::string>(e, "to", "edge"), std::nullopt};
    if (e.contains("voltage")) {
      const auto v = field<std::int64_t>(e, "voltage", "edge");
      if (v < 0 || v > 0xffffffffLL) throw SpecParseError("edge voltage out of range");
      rec.voltage = static_cast<std::uint32_t>(v);
    }
    spec.edges.push_back(std::move(rec));
  }
  return spec;
}

CoverSpecFile parse_cover_spec_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_cover_spec(j);
}

CoverSpecFile load_cover_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cover_spec_text(buf.str());
}

Json to_json(const CoverSpecFile& spec) {
  Json j;
  if (!spec.name.empty()) j["name"] = spec.name;
  if (!spec.description.empty()) j["description"] = spec.description;
  j["p"] = spec.p;
  j["vertices"] = spec.vertices;
  Json edges = Json::array();
  for (const auto& e : spec.edges) {
    Json r;
    r["from"] = e.from;
    r["to"] = e.to;
    if (e.voltage) r["voltage"] = *e.voltage;
    edges.push_back(std::move(r));
  }
  j["edges"] = std::move(edges);
  return j;
}

SerreGraph base_graph(const CoverSpecFile& spec) {
  SerreGraph g;
  std::set<std::string> seen;
  for (const auto& label : spec.vertices) {
    if (label.empty()) throw SpecParseError("empty vertex label");
    if (!seen.insert(label).second) throw SpecParseError("duplicate vertex label \"" + label + "\"");
    g.add_vertex(label);
  }
  for (const auto& e : spec.edges) {
    const auto from = g.find(e.from);
    const auto to = g.find(e.to);
    if (!from) throw UnknownVertex("unknown vertex \"" + e.from + "\"");
    if (!to) throw UnknownVertex("unknown vertex \"" + e.to + "\"");
    g.add_edge(*from, *to);
  }
  return g;
}

VoltageSpec to_voltage_spec(const CoverSpecFile& spec) {
  SerreGraph g = base_graph(spec);
  std::vector<std::uint32_t> forward;
  for (const auto& e : spec.edges) {
    if (!e.voltage) throw InvalidVoltage("edge " + e.from + " -> " + e.to + " has no voltage");
    if (*e.voltage == 0 || *e.voltage >= spec.p) {
      throw InvalidVoltage("voltage " + std::to_string(*e.voltage) + " not in [1, " + std::to_string(spec.p - 1) +
                           "]");
    }
    forward.push_back(*e.voltage);
  }
  VoltageSpec v = VoltageSpec::from_orientation(std::move(g), spec.p, forward);
  validate(v);
  return v;
}

CoverSpecFile with_voltages(CoverSpecFile spec, const std::vector<std::uint32_t>& voltages) {
  if (voltages.size() != spec.edges.size()) throw InvalidVoltage("one voltage per edge required");
  for (std::size_t k = 0; k < voltages.size(); ++k) spec.edges[k].voltage = voltages[k];
  return spec;
}

}  // namespace herbrand
