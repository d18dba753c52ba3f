#include "herbrand/herbrand.hpp"

#include <algorithm>
#include <sstream>

#include "herbrand/errors.hpp"

namespace herbrand {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Skipped:
      return "SKIPPED";
  }
  return "?";
}

Check combine(const std::vector<Check>& checks, const std::string& what) {
  std::size_t failed = 0, skipped = 0;
  std::string first_failure, first_skip;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::Fail && failed++ == 0) first_failure = c.reason;
    if (c.verdict == Verdict::Skipped && skipped++ == 0) first_skip = c.reason;
  }
  if (failed > 0) {
    return Check::fail(std::to_string(failed) + " of " + std::to_string(checks.size()) + " " + what +
                       " checks failed; first: " + first_failure);
  }
  if (skipped > 0 && skipped == checks.size()) return Check::skipped(first_skip);
  if (skipped > 0) {
    return Check::skipped(std::to_string(skipped) + " of " + std::to_string(checks.size()) + " " + what +
                          " checks skipped; first: " + first_skip);
  }
  return Check::pass(std::to_string(checks.size()) + " " + what + " checks");
}

CoverAnalysis analyze(const DerivedCover& c) {
  require_connected_cover(c);
  PicardModule pm(c);
  ElementaryQuotient q = elementary_quotient(pm);
  ZetaData z = zeta_data(c);
  const unsigned n = p_valuation(pm.order(), BigInt(c.p())) + 2;
  return {c, std::move(pm), std::move(q), std::move(z), n};
}

std::vector<Main22Row> verify_main22(const CoverAnalysis& a, const AnalysisOptions& options) {
  const std::uint32_t p = a.p();
  const auto& group = a.cover.group();
  std::vector<Main22Row> rows;
  for (std::size_t i = 1; i + 1 < p; ++i) {
    Main22Row row{i, eigenspace_order_A(a.quotient.sylow, Character::p_adic(group, i, std::max(1u, a.quotient.sylow.exponent))),
                  std::nullopt, std::nullopt, 0, {}};
    unsigned n = std::max(1u, options.precision.value_or(a.default_precision));
    for (unsigned attempt = 0; attempt <= options.max_doublings; ++attempt, n *= 2) {
      const LValue h = l_value(a.zeta, Character::p_adic(group, i, n));
      row.precision = n;
      row.h_lift = h.value;
      if (!h.value.is_zero()) {
        row.valuation = valuation(h.value);
        break;
      }
    }
    if (!row.valuation) {
      row.verdict = Check::fail("h(1, (omega o gamma)^" + std::to_string(i) + ") = 0 mod " + std::to_string(p) + "^" +
                                std::to_string(row.precision) + " after " + std::to_string(options.max_doublings) +
                                " doublings");
    } else {
      const BigInt rhs = pow(BigInt(p), *row.valuation);
      const std::string detail =
          "#e_psi A = " + row.order_A.str() + ", |h(1, psi)|_p^-1 = " + rhs.str();
      row.verdict = rhs == row.order_A ? Check::pass(detail) : Check::fail(detail);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Main22Row> verify_main22(const DerivedCover& c, const AnalysisOptions& options) {
  return verify_main22(analyze(c), options);
}

std::vector<Main11Row> verify_main11(const CoverAnalysis& a, const AnalysisOptions& options) {
  const std::uint32_t p = a.p();
  std::vector<Main11Row> rows;
  for (std::size_t i = 1; i + 1 < p; ++i) {
    const Character psi = Character::mod_p(a.cover.group(), i);
    Main11Row row{i, eigenspace_dim_C_projector(a.quotient.sylow, psi), false, 0, {}};
    row.h_mod_p = static_cast<std::uint32_t>(l_value(a.zeta, psi).value.value().to_int64());
    const auto enumerated = eigenspace_dim_C_enumeration(a.quotient, a.picard, psi, options.enumeration_budget);
    row.enumerated = enumerated.has_value();
    const std::string detail = "dim e_psi C = " + std::to_string(row.dim_C) + ", h(1, psi) = " +
                               std::to_string(row.h_mod_p) + " in F_" + std::to_string(p);
    if (enumerated && *enumerated != row.dim_C) {
      row.verdict = Check::fail("projector rank " + std::to_string(row.dim_C) + " but enumeration gives " +
                                std::to_string(*enumerated));
    } else if ((row.dim_C > 0) == (row.h_mod_p == 0)) {
      row.verdict = Check::pass(detail);
    } else {
      row.verdict = Check::fail(detail);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Main11Row> verify_main11(const DerivedCover& c, const AnalysisOptions& options) {
  return verify_main11(analyze(c), options);
}

Check verify_fitting_identity(const CoverAnalysis& a, const std::vector<Main22Row>& main22) {
  const IntMatrix image = apply_group_ring(a.picard, a.zeta.eta_one);
  for (Index i = 0; i < image.rows(); ++i) {
    for (Index j = 0; j < image.cols(); ++j) {
      if (!image(i, j).is_zero()) {
        return Check::fail("eta(1) does not annihilate Picard generator " + std::to_string(j));
      }
    }
  }
  std::ostringstream ideals;
  for (const auto& row : main22) {
    if (!row.valuation) return Check::fail("h(1, psi) vanished at every precision for i = " + std::to_string(row.i));
    const BigInt gen = pow(BigInt(a.p()), *row.valuation);
    if (!(gen == row.order_A)) {
      return Check::fail("(h(1, psi)) = (" + gen.str() + ") but #e_psi A = " + row.order_A.str() + " at i = " +
                         std::to_string(row.i));
    }
    if (gen > BigInt(1)) ideals << " i=" << row.i << ":(" << gen << ")";
  }
  const std::string rest = ideals.str();
  return Check::pass("eta(1) annihilates Pic^0(Y); nontrivial ideals:" + (rest.empty() ? std::string(" none") : rest));
}

Check verify_fitting_identity(const DerivedCover& c, const AnalysisOptions& options) {
  if (!c.connected()) return Check::skipped("derived graph is disconnected");
  const CoverAnalysis a = analyze(c);
  return verify_fitting_identity(a, verify_main22(a, options));
}

bool TheoremReport::any_failure() const {
  for (const auto& c : global_checks()) {
    if (c.failed()) return true;
  }
  return false;
}

std::vector<Check> TheoremReport::global_checks() const {
  return {main11, main22, fitting, duality, dim_inequality, trivial_character, order_accounting};
}

Json big(const BigInt& x) {
  static const BigInt limit = pow(BigInt(2), 62);
  if (abs(x) < limit) return x.to_int64();
  return x.str();
}

namespace {

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(big(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json diagnostics(const CoverAnalysis& a) {
  Json d;
  d["default_precision"] = a.default_precision;
  Json snf = Json::array();
  for (const auto& x : a.picard.smith().diagonal()) snf.push_back(big(x));
  d["laplacian_smith_diagonal"] = snf;
  if (a.picard.laplacian().rows() <= 40) d["cover_laplacian"] = matrix_json(a.picard.laplacian());
  Json eta = Json::array();
  for (const auto& c : a.zeta.eta_one.coefficients()) eta.push_back(big(c));
  d["eta_one"] = eta;
  Json actions;
  for (std::uint32_t s = 1; s < a.p(); ++s) actions[std::to_string(s)] = matrix_json(a.quotient.sylow.action(s));
  d["sylow_actions"] = actions;
  return d;
}

void skip_all(TheoremReport& r, const std::string& reason) {
  for (Check* c : {&r.main11, &r.main22, &r.fitting, &r.duality, &r.dim_inequality, &r.trivial_character,
                   &r.order_accounting}) {
    *c = Check::skipped(reason);
  }
}

}  // namespace

TheoremReport build_report(const DerivedCover& c, const AnalysisOptions& options, std::string name) {
  TheoremReport r;
  r.name = std::move(name);
  r.p = c.p();
  r.base_vertices = c.base().num_vertices();
  r.base_edges = c.base().num_undirected_edges();
  r.cover_vertices = c.total().num_vertices();
  r.cover_edges = c.total().num_undirected_edges();
  r.connected = c.connected();
  r.kappa_base = spanning_tree_count(c.base());
  if (!r.connected) {
    skip_all(r, "derived graph is disconnected: not a Galois cover with group F_p^x");
    return r;
  }

  std::optional<CoverAnalysis> analysis;
  try {
    analysis.emplace(analyze(c));
    const CoverAnalysis& a = *analysis;
    const std::uint32_t p = c.p();
    r.pic0 = a.picard.invariant_factors();
    r.sylow_exponents = a.quotient.sylow.exponents;
    r.dim_C = a.quotient.dimension;

    const auto m22 = verify_main22(a, options);
    const auto m11 = verify_main11(a, options);
    std::vector<Check> c11, c22, reduction;
    for (std::size_t k = 0; k < m22.size(); ++k) {
      ReportRow row;
      row.i = m22[k].i;
      row.dim_C = m11[k].dim_C;
      row.h_mod_p = m11[k].h_mod_p;
      row.order_A = m22[k].order_A;
      row.valuation = m22[k].valuation;
      row.h_lift = m22[k].h_lift ? render_expansion(*m22[k].h_lift) : std::string();
      row.precision = m22[k].precision;
      row.main11 = m11[k].verdict;
      row.main22 = m22[k].verdict;
      const bool consistent = (row.order_A > BigInt(1)) == (row.dim_C > 0);
      row.reduction = consistent ? Check::pass() : Check::fail("#e_psi A = " + row.order_A.str() + " but dim e_psi C = " +
                                                                   std::to_string(row.dim_C));
      c11.push_back(row.main11);
      c22.push_back(row.main22);
      reduction.push_back(row.reduction);
      r.rows.push_back(std::move(row));
    }
    r.main11 = c11.empty() ? Check::skipped("no nontrivial characters") : combine(c11, "main11");
    r.main22 = c22.empty() ? Check::skipped("no nontrivial characters") : combine(c22, "main22");
    if (!reduction.empty()) {
      const Check red = combine(reduction, "reduction");
      if (red.failed()) r.main22 = Check::fail("lift/reduction mismatch: " + red.reason);
    }
    r.fitting = verify_fitting_identity(a, m22);

    const unsigned n = std::max(1u, options.precision.value_or(a.default_precision));
    const bool dual = duality_check(a.zeta, c, Codomain::PrimeField, 1) && duality_check(a.zeta, c, Codomain::PAdic, n);
    r.duality = dual ? Check::pass("h(u, psi) = h(u, psi*) for every psi over F_p and mod p^" + std::to_string(n))
                     : Check::fail("some h(u, psi) differs from h(u, psi*)");

    DimensionInequality& ineq = r.inequality;
    ineq.dim_C = a.quotient.dimension;
    for (const auto& d : cokernel(laplacian_matrix(c.base())).invariant_factors) {
      if ((d % BigInt(p)).is_zero()) ++ineq.base_rank;
    }
    for (const auto& row : r.rows) ineq.vanishing += row.h_mod_p == 0 ? 1 : 0;
    ineq.holds = ineq.dim_C >= ineq.base_rank + ineq.vanishing;
    ineq.strict = ineq.dim_C > ineq.base_rank + ineq.vanishing;
    const std::string sides = std::to_string(ineq.dim_C) + (ineq.strict ? " > " : ineq.holds ? " = " : " < ") +
                              std::to_string(ineq.base_rank) + " + " + std::to_string(ineq.vanishing);
    r.dim_inequality = ineq.holds ? Check::pass(sides + (ineq.strict ? " (strict)" : "")) : Check::fail(sides);

    const TrivialCharacterCheck t = trivial_character_check(a.quotient.sylow, c.base(), p);
    const std::string tdetail = "#e_psi0 A = " + t.eigenspace_order.str() + ", kappa_p(X) = " + t.kappa_p.str();
    r.trivial_character = t.holds ? Check::pass(tdetail) : Check::fail(tdetail);

    BigInt product = t.kappa_p;
    for (const auto& row : r.rows) product *= row.order_A;
    const std::string odetail = "product = " + product.str() + ", #A = " + a.quotient.sylow.order().str();
    r.order_accounting = product == a.quotient.sylow.order() ? Check::pass(odetail) : Check::fail(odetail);
  } catch (const ConsistencyFailure& e) {
    skip_all(r, "not evaluated after an internal inconsistency");
    r.main22 = Check::fail(std::string("internal consistency check failed: ") + e.what());
  } catch (const Error& e) {
    skip_all(r, e.what());
  }
  if (r.any_failure()) {
    r.diagnostics = analysis ? diagnostics(*analysis) : Json::object();
    r.diagnostics["requested_precision"] = options.precision ? Json(*options.precision) : Json(nullptr);
    r.diagnostics["max_doublings"] = options.max_doublings;
  }
  return r;
}

namespace {

Json check_json(const Check& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["reason"] = c.reason;
  return j;
}

}  // namespace

Json to_json(const TheoremReport& r) {
  Json j;
  Json cover;
  if (!r.name.empty()) cover["name"] = r.name;
  cover["p"] = r.p;
  cover["base_vertices"] = r.base_vertices;
  cover["base_edges"] = r.base_edges;
  cover["cover_vertices"] = r.cover_vertices;
  cover["cover_edges"] = r.cover_edges;
  cover["connected"] = r.connected;
  cover["kappa_base"] = big(r.kappa_base);
  j["cover"] = cover;
  Json pic = Json::array();
  for (const auto& d : r.pic0) pic.push_back(big(d));
  j["pic0"] = pic;
  Json sylow = Json::array();
  for (unsigned a : r.sylow_exponents) sylow.push_back(big(pow(BigInt(r.p), a)));
  j["A"] = sylow;
  j["dimC"] = r.dim_C;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr;
    jr["i"] = row.i;
    jr["dimC"] = row.dim_C;
    jr["h_mod_p"] = row.h_mod_p;
    jr["orderA"] = big(row.order_A);
    jr["valuation"] = row.valuation ? Json(*row.valuation) : Json(nullptr);
    jr["h_lift"] = row.h_lift;
    jr["precision"] = row.precision;
    Json v;
    v["main11"] = check_json(row.main11);
    v["main22"] = check_json(row.main22);
    v["reduction"] = check_json(row.reduction);
    jr["verdicts"] = v;
    rows.push_back(std::move(jr));
  }
  j["rows"] = rows;
  Json g;
  g["main11"] = check_json(r.main11);
  g["main22"] = check_json(r.main22);
  g["fitting"] = check_json(r.fitting);
  g["duality"] = check_json(r.duality);
  Json ineq = check_json(r.dim_inequality);
  ineq["dimC"] = r.inequality.dim_C;
  ineq["base_rank"] = r.inequality.base_rank;
  ineq["vanishing"] = r.inequality.vanishing;
  ineq["strict"] = r.inequality.strict;
  g["dim_inequality"] = ineq;
  g["trivial_character"] = check_json(r.trivial_character);
  g["order_accounting"] = check_json(r.order_accounting);
  j["global"] = g;
  if (!r.diagnostics.is_null()) j["diagnostics"] = r.diagnostics;
  return j;
}

std::string render_table(const TheoremReport& r) {
  std::ostringstream os;
  const std::string field = "F_" + std::to_string(r.p);
  os << "psi = gamma^i | e_psi C | h(1, psi) in " << field << "\n";
  for (const auto& row : r.rows) {
    std::string space = "0";
    if (row.dim_C == 1) space = field;
    if (row.dim_C > 1) space = field + "^" + std::to_string(row.dim_C);
    os << row.i << " | " << space << " | " << row.h_mod_p << "\n";
  }
  return os.str();
}

}  // namespace herbrand
