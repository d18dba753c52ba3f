#include "herbrand/census.hpp"

#include "herbrand/errors.hpp"

namespace herbrand {

std::string census_key(const std::vector<std::uint32_t>& voltages) {
  std::string key;
  for (std::size_t k = 0; k < voltages.size(); ++k) {
    if (k > 0) key += ",";
    key += std::to_string(voltages[k]);
  }
  return key;
}

std::string CensusRow::key() const { return census_key(voltages); }

Json to_json(const CensusRow& row) {
  const auto verdict = [](const Check& c) { return Json(to_string(c.verdict)); };
  Json j;
  j["key"] = row.key();
  j["voltages"] = row.voltages;
  j["connected"] = row.connected;
  j["voltages_generate"] = row.voltages_generate;
  if (row.connected) {
    Json pic = Json::array();
    for (const auto& d : row.pic0) pic.push_back(big(d));
    j["pic0"] = pic;
    j["vanishing"] = row.vanishing;
  } else {
    j["pic0"] = nullptr;
    j["vanishing"] = nullptr;
  }
  j["verdicts"] = {{"main11", verdict(row.main11)}, {"main22", verdict(row.main22)}, {"fitting", verdict(row.fitting)}};
  return j;
}

std::vector<std::uint32_t> census_assignment(std::uint64_t index, std::size_t edges, std::uint32_t p) {
  std::vector<std::uint32_t> v(edges);
  for (std::size_t k = edges; k-- > 0;) {
    v[k] = static_cast<std::uint32_t>(index % (p - 1)) + 1;
    index /= p - 1;
  }
  return v;
}

CensusRow census_row(const CoverSpecFile& base, const std::vector<std::uint32_t>& voltages,
                     const AnalysisOptions& options) {
  CensusRow row;
  row.voltages = voltages;
  const VoltageSpec spec = to_voltage_spec(with_voltages(base, voltages));
  row.voltages_generate = voltages_generate_group(spec);
  const DerivedCover cover = derive(spec);
  row.connected = cover.connected();
  const TheoremReport report = build_report(cover, options);
  row.main11 = report.main11;
  row.main22 = report.main22;
  row.fitting = report.fitting;
  if (row.connected) {
    row.pic0 = report.pic0;
    for (const auto& r : report.rows) {
      if (r.h_mod_p == 0) row.vanishing.push_back(r.i);
    }
  }
  return row;
}

CensusRun run_census(const CoverSpecFile& base, std::uint32_t p, const CensusOptions& options,
                     const std::set<std::string>& existing, const std::function<void(const CensusRow&)>& sink) {
  CoverSpecFile spec = base;
  spec.p = p;
  CensusRun run;
  const std::size_t edges = spec.edges.size();
  run.total = 1;
  for (std::size_t k = 0; k < edges; ++k) {
    if (run.total > UINT64_MAX / (p - 1)) throw std::overflow_error("census size overflows 64 bits");
    run.total *= p - 1;
  }
  for (std::uint64_t index = options.start; index < run.total; ++index) {
    const auto voltages = census_assignment(index, edges, p);
    if (existing.count(census_key(voltages)) != 0) {
      ++run.skipped_existing;
      continue;
    }
    if (run.processed == options.budget) {
      run.cursor = index;
      break;
    }
    sink(census_row(spec, voltages, options.analysis));
    ++run.processed;
  }
  return run;
}

}  // namespace herbrand
