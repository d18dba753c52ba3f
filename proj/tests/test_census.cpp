#include <doctest.h>

#include <set>

#include "herbrand/census.hpp"
#include "support.hpp"

using namespace herbrand;

namespace {

CoverSpecFile bouquet() { return load_cover_spec(test::data_path("examples/bouquet2_base.json")); }

}  // namespace

TEST_CASE("assignments are enumerated lexicographically") {
  CHECK(census_assignment(0, 2, 5) == std::vector<std::uint32_t>{1, 1});
  CHECK(census_assignment(1, 2, 5) == std::vector<std::uint32_t>{1, 2});
  CHECK(census_assignment(4, 2, 5) == std::vector<std::uint32_t>{2, 1});
  CHECK(census_assignment(15, 2, 5) == std::vector<std::uint32_t>{4, 4});
  CHECK(census_key({4, 3}) == "4,3");
}

TEST_CASE("full census of the two-loop bouquet at p = 5") {
  std::vector<CensusRow> rows;
  const CensusRun run = run_census(bouquet(), 5, {}, {}, [&](const CensusRow& r) { rows.push_back(r); });
  CHECK(run.total == 16);
  CHECK(run.processed == 16);
  CHECK_FALSE(run.cursor.has_value());
  REQUIRE(rows.size() == 16);
  for (const auto& r : rows) {
    CHECK(r.connected == r.voltages_generate);
    CHECK(r.main11.verdict != Verdict::Fail);
    CHECK(r.main22.verdict != Verdict::Fail);
    CHECK(r.fitting.verdict != Verdict::Fail);
    CHECK((r.main11.verdict == Verdict::Skipped) == !r.connected);
  }
  CHECK_FALSE(rows[0].connected);  // (1, 1)
  CHECK(to_json(rows[0])["pic0"].is_null());
  const auto find = [&](const std::string& key) {
    for (const auto& r : rows)
      if (r.key() == key) return r;
    FAIL("missing row " << key);
    return CensusRow{};
  };
  CHECK(find("4,3").pic0 == std::vector<BigInt>{3, 12});
  CHECK(find("4,3").vanishing.empty());
  CHECK(find("2,3").pic0 == std::vector<BigInt>{2, 2, 8});
  CHECK(to_json(find("2,3"))["key"] == "2,3");
}

TEST_CASE("census resumes from a cursor and skips existing keys") {
  CensusOptions opts;
  opts.budget = 10;
  std::set<std::string> seen;
  const CensusRun first = run_census(bouquet(), 5, opts, {}, [&](const CensusRow& r) { seen.insert(r.key()); });
  CHECK(first.processed == 10);
  REQUIRE(first.cursor.has_value());
  CHECK(*first.cursor == 10);
  opts.budget = 100;
  std::size_t more = 0;
  const CensusRun second = run_census(bouquet(), 5, opts, seen, [&](const CensusRow& r) {
    CHECK(seen.count(r.key()) == 0);
    ++more;
  });
  CHECK(second.skipped_existing == 10);
  CHECK(more == 6);
  opts.start = 14;
  CHECK(run_census(bouquet(), 5, opts, {}, [](const CensusRow&) {}).processed == 2);
}

TEST_CASE("census over the base of the second example finds the vanishing character") {
  CoverSpecFile base = load_cover_spec(test::data_path("examples/example2.json"));
  for (auto& e : base.edges) e.voltage.reset();
  bool found = false;
  run_census(base, 5, {}, {}, [&](const CensusRow& r) {
    CHECK(r.main22.verdict != Verdict::Fail);
    if (r.key() == "2,4,2,1") {
      found = true;
      CHECK(r.vanishing == std::vector<std::size_t>{2});
      CHECK(r.pic0 == std::vector<BigInt>{7, 420});
    }
  });
  CHECK(found);
}
