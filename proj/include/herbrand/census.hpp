#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "herbrand/herbrand.hpp"

namespace herbrand {

struct CensusRow {
  std::vector<std::uint32_t> voltages;
  /// BFS on the derived graph.
  bool connected = false;
  /// Generated-subgroup criterion on the base, independent of the derived graph.
  bool voltages_generate = false;
  std::vector<BigInt> pic0;
  std::vector<std::size_t> vanishing;
  Check main11, main22, fitting;

  std::string key() const;
};

/// "a,b,c" from the forward voltages.
std::string census_key(const std::vector<std::uint32_t>& voltages);

Json to_json(const CensusRow& row);

struct CensusOptions {
  /// Assignments processed in one run.
  std::uint64_t budget = 100'000;
  /// Index of the first assignment (lexicographic, first edge most significant).
  std::uint64_t start = 0;
  AnalysisOptions analysis;
};

struct CensusRun {
  /// (p - 1)^E.
  std::uint64_t total = 0;
  std::uint64_t processed = 0;
  std::uint64_t skipped_existing = 0;
  /// Next unprocessed index when the budget ran out.
  std::optional<std::uint64_t> cursor;
};

/// Voltages of the index-th assignment.
std::vector<std::uint32_t> census_assignment(std::uint64_t index, std::size_t edges, std::uint32_t p);

CensusRow census_row(const CoverSpecFile& base, const std::vector<std::uint32_t>& voltages,
                     const AnalysisOptions& options = {});

/// Enumerates voltage assignments on the base graph at prime p, skipping keys
/// already in `existing`, and hands each new row to `sink` in index order.
CensusRun run_census(const CoverSpecFile& base, std::uint32_t p, const CensusOptions& options,
                     const std::set<std::string>& existing, const std::function<void(const CensusRow&)>& sink);

}  // namespace herbrand
