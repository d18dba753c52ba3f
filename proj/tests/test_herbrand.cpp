#include <doctest.h>

#include "herbrand/herbrand.hpp"
#include "support.hpp"

using namespace herbrand;

namespace {

TheoremReport report(int k) { return build_report(derive(test::example(k)), {}, "example" + std::to_string(k)); }

const ReportRow& row(const TheoremReport& r, std::size_t i) { return r.rows.at(i - 1); }

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

void check_all_pass(const TheoremReport& r) {
  CHECK_FALSE(r.any_failure());
  for (const Check& c : r.global_checks()) {
    INFO(c.reason);
    CHECK(c.verdict == Verdict::Pass);
  }
  for (const auto& row : r.rows) {
    CHECK(row.main11.verdict == Verdict::Pass);
    CHECK(row.main22.verdict == Verdict::Pass);
    CHECK(row.reduction.verdict == Verdict::Pass);
  }
}

}  // namespace

TEST_CASE("verdict combination") {
  CHECK(combine({Check::pass(), Check::pass()}, "x").verdict == Verdict::Pass);
  CHECK(combine({Check::pass(), Check::skipped("s")}, "x").verdict == Verdict::Skipped);
  CHECK(combine({Check::skipped("s"), Check::fail("f")}, "x").verdict == Verdict::Fail);
  CHECK(std::string(to_string(Verdict::Skipped)) == "SKIPPED");
}

TEST_CASE("bouquet over F_5") {
  const TheoremReport r = report(1);
  check_all_pass(r);
  CHECK(r.pic0 == std::vector<BigInt>{3, 12});
  CHECK(r.dim_C == 0);
  CHECK(r.rows.size() == 3);
  CHECK(render_table(r) ==
        "psi = gamma^i | e_psi C | h(1, psi) in F_5\n1 | 0 | 1\n2 | 0 | 4\n3 | 0 | 1\n");
}

TEST_CASE("bouquet voltages (2, 3) as residues") {
  const TheoremReport r = build_report(derive(test::example1_literal()));
  check_all_pass(r);
  CHECK(r.pic0 == std::vector<BigInt>{2, 2, 8});
  CHECK(r.kappa_base == 1);  // a bouquet has one spanning tree; #Pic^0(Y) = 32
  CHECK(row(r, 1).h_mod_p == 4);
  CHECK(row(r, 2).h_mod_p == 3);
  CHECK(row(r, 3).h_mod_p == 4);
}

TEST_CASE("two vertices over F_5") {
  const TheoremReport r = report(2);
  check_all_pass(r);
  CHECK(r.pic0 == std::vector<BigInt>{7, 420});
  CHECK(r.dim_C == 1);
  CHECK(row(r, 2).dim_C == 1);
  CHECK(row(r, 2).h_mod_p == 0);
  CHECK(row(r, 2).order_A == 5);
  CHECK(row(r, 2).valuation == 1u);
  CHECK(starts_with(row(r, 2).h_lift, "4·5 + "));
  CHECK(row(r, 1).h_mod_p != 0);
  CHECK(row(r, 3).h_mod_p != 0);
}

TEST_CASE("two vertices over F_11 with a cyclic-squared eigenspace") {
  const TheoremReport r = report(3);
  check_all_pass(r);
  CHECK(r.pic0 == std::vector<BigInt>{2, 2, 2, 2, 2, 2, 2, 2, 2, 242, 1210});
  CHECK(r.dim_C == 2);
  for (std::size_t i = 1; i <= 9; ++i) {
    const bool vanishes = i == 1 || i == 9;
    CHECK((row(r, i).h_mod_p == 0) == vanishes);
    CHECK(row(r, i).order_A == (vanishes ? 121 : 1));
    CHECK(row(r, i).dim_C == (vanishes ? 1u : 0u));
  }
  CHECK(starts_with(row(r, 1).h_lift, "2·11² + 7·11³ + 9·11⁴ + "));
  CHECK(row(r, 1).valuation == 2u);
}

TEST_CASE("two vertices over F_11 with a two-dimensional eigenspace") {
  const TheoremReport r = report(4);
  check_all_pass(r);
  CHECK(r.pic0 == std::vector<BigInt>{11, 11, 1353, 27060});
  CHECK(r.sylow_exponents == std::vector<unsigned>{1, 1, 1, 1});
  CHECK(r.dim_C == 4);
  for (std::size_t i : {3u, 7u}) {
    CHECK(row(r, i).dim_C == 2);
    CHECK(row(r, i).h_mod_p == 0);
    CHECK(row(r, i).order_A == 121);
  }
  CHECK(starts_with(row(r, 3).h_lift, "9·11² + 7·11⁴ + 9·11⁵ + "));
  CHECK(r.inequality.vanishing == 2);
  CHECK(r.inequality.base_rank == 0);
  CHECK(r.inequality.holds);
  CHECK(r.inequality.strict);
  const std::string table = render_table(r);
  CHECK(table.find("\n3 | F_11^2 | 0\n") != std::string::npos);
  CHECK(table.find("\n7 | F_11^2 | 0\n") != std::string::npos);
}

TEST_CASE("fitting identity and order accounting on the examples") {
  for (int k = 1; k <= 4; ++k) {
    CHECK(verify_fitting_identity(derive(test::example(k))).verdict == Verdict::Pass);
    const CoverAnalysis a = analyze(derive(test::example(k)));
    BigInt product = 1;
    for (const auto& r : verify_main22(a)) product *= r.order_A;
    // The trivial eigenspace carries the rest of A.
    const TrivialCharacterCheck t = trivial_character_check(a.quotient.sylow, a.cover.base(), a.p());
    CHECK(product * t.eigenspace_order == a.quotient.sylow.order());
    for (const auto& r : verify_main11(a)) CHECK(r.enumerated);
  }
}

TEST_CASE("explicit precision is honoured and doubled only when needed") {
  AnalysisOptions options;
  options.precision = 1;
  const TheoremReport r = build_report(derive(test::example(3)), options);
  check_all_pass(r);
  CHECK(row(r, 1).precision == 4);  // 1 -> 2 -> 4 finds valuation 2
  CHECK(row(r, 2).precision == 1);
  options.max_doublings = 0;
  const TheoremReport starved = build_report(derive(test::example(3)), options);
  CHECK(starved.main22.verdict == Verdict::Fail);
  CHECK(row(starved, 1).main22.verdict == Verdict::Fail);
}

TEST_CASE("serialization is deterministic") {
  const Json a = to_json(report(4));
  const Json b = to_json(report(4));
  CHECK(a.dump() == b.dump());
  CHECK(a["cover"]["name"] == "example4");
  CHECK(a["pic0"] == Json::parse("[11, 11, 1353, 27060]"));
  CHECK(a["A"] == Json::parse("[11, 11, 11, 11]"));
  CHECK(a["rows"][2]["i"] == 3);
  CHECK(a["rows"][2]["dimC"] == 2);
  CHECK(a["global"]["main22"]["verdict"] == "PASS");
  CHECK_FALSE(a.contains("diagnostics"));
  CHECK(big(pow(BigInt(2), 70)) == Json("1180591620717411303424"));
  CHECK(big(BigInt(-5)) == Json(-5));
}

TEST_CASE("disconnected covers are skipped, not failed") {
  const TheoremReport r = build_report(derive(test::spec(5, 1, {{0, 0, 1}, {0, 0, 4}})));
  CHECK_FALSE(r.connected);
  CHECK_FALSE(r.any_failure());
  for (const Check& c : r.global_checks()) CHECK(c.verdict == Verdict::Skipped);
  CHECK(verify_fitting_identity(derive(test::spec(5, 1, {{0, 0, 1}}))).verdict == Verdict::Skipped);
}
