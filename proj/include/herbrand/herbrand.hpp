#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "herbrand/picard.hpp"
#include "herbrand/spec_io.hpp"
#include "herbrand/zeta.hpp"

namespace herbrand {

enum class Verdict { Pass, Fail, Skipped };

const char* to_string(Verdict v);

struct Check {
  Verdict verdict = Verdict::Skipped;
  std::string reason;

  static Check pass(std::string reason = {}) { return {Verdict::Pass, std::move(reason)}; }
  static Check fail(std::string reason) { return {Verdict::Fail, std::move(reason)}; }
  static Check skipped(std::string reason) { return {Verdict::Skipped, std::move(reason)}; }
  bool failed() const { return verdict == Verdict::Fail; }
};

/// Conjunction: FAIL if any fails, else SKIPPED if any skipped, else PASS.
Check combine(const std::vector<Check>& checks, const std::string& what);

struct AnalysisOptions {
  /// Overrides the default working precision v_p(#Pic^0) + 2.
  std::optional<unsigned> precision;
  std::uint64_t enumeration_budget = default_enumeration_budget;
  unsigned max_doublings = 4;
};

/// Everything computed once per connected cover.
struct CoverAnalysis {
  DerivedCover cover;
  PicardModule picard;
  ElementaryQuotient quotient;
  ZetaData zeta;
  unsigned default_precision;

  std::uint32_t p() const { return cover.p(); }
};

/// Throws DisconnectedCover.
CoverAnalysis analyze(const DerivedCover& c);

struct Main22Row {
  std::size_t i;
  BigInt order_A;
  /// Valuation of h(1, (omega o gamma)^i); nullopt if zero at every precision tried.
  std::optional<unsigned> valuation;
  /// h(1, lift) at the final working precision.
  std::optional<PAdicInt> h_lift;
  unsigned precision;
  Check verdict;
};

/// #e_psi A against |h(1, psi)|_p^-1 for every nontrivial Z_p-character.
std::vector<Main22Row> verify_main22(const CoverAnalysis& a, const AnalysisOptions& options = {});
std::vector<Main22Row> verify_main22(const DerivedCover& c, const AnalysisOptions& options = {});

struct Main11Row {
  std::size_t i;
  std::size_t dim_C;
  /// Whether the enumeration oracle ran (within budget) and agreed.
  bool enumerated;
  std::uint32_t h_mod_p;
  Check verdict;
};

/// (e_psi C != 0) iff (h(1, psi) = 0 in F_p) for every nontrivial F_p-character.
std::vector<Main11Row> verify_main11(const CoverAnalysis& a, const AnalysisOptions& options = {});
std::vector<Main11Row> verify_main11(const DerivedCover& c, const AnalysisOptions& options = {});

/// eta(1) annihilates Pic^0(Y), and (h(1, psi)) = (#e_psi A) in Z_p for nontrivial psi.
Check verify_fitting_identity(const CoverAnalysis& a, const std::vector<Main22Row>& main22);
Check verify_fitting_identity(const DerivedCover& c, const AnalysisOptions& options = {});

struct DimensionInequality {
  std::size_t dim_C = 0;
  std::size_t base_rank = 0;     // dim Pic^0_p(X) / p
  std::size_t vanishing = 0;     // #{nontrivial psi : h(1, psi) = 0}
  bool holds = false;
  bool strict = false;
};

struct ReportRow {
  std::size_t i;
  std::size_t dim_C;
  std::uint32_t h_mod_p;
  BigInt order_A;
  std::optional<unsigned> valuation;
  std::string h_lift;
  unsigned precision;
  Check main11;
  Check main22;
  Check reduction;  // order_A > 1 iff dim_C > 0
};

struct TheoremReport {
  std::string name;
  std::uint32_t p = 0;
  std::size_t base_vertices = 0;
  std::size_t base_edges = 0;
  std::size_t cover_vertices = 0;
  std::size_t cover_edges = 0;
  bool connected = false;
  std::vector<BigInt> pic0;
  std::vector<unsigned> sylow_exponents;
  std::size_t dim_C = 0;
  BigInt kappa_base;
  std::vector<ReportRow> rows;
  Check main11, main22, fitting, duality, dim_inequality, trivial_character, order_accounting;
  DimensionInequality inequality;
  Json diagnostics;

  bool any_failure() const;
  std::vector<Check> global_checks() const;
};

/// Never throws for domain reasons: a disconnected cover yields SKIPPED
/// verdicts, an internal inconsistency yields FAIL with diagnostics.
TheoremReport build_report(const DerivedCover& c, const AnalysisOptions& options = {}, std::string name = {});

/// JSON integer when it fits comfortably in 64 bits, decimal string otherwise.
Json big(const BigInt& x);

/// Deterministic serialization.
Json to_json(const TheoremReport& r);

/// Three-column character table: i | e_psi C | h(1, psi) in F_p.
std::string render_table(const TheoremReport& r);

}  // namespace herbrand
