#include "herbrand/zeta.hpp"

#include "herbrand/errors.hpp"

namespace herbrand {

GroupRingMatrix equivariant_adjacency(const DerivedCover& c) {
  const CyclicGroup& group = *c.group();
  const std::size_t n = group.order();
  const auto g = static_cast<Index>(c.base().num_vertices());
  GroupRingMatrix a = GroupRingMatrix::Constant(g, g, GroupRingElement::zero(n));
  for (Index i = 0; i < g; ++i) {
    const VertexIndex wi = c.vertex_at(static_cast<VertexIndex>(i), 1);
    for (Index j = 0; j < g; ++j) {
      std::vector<BigInt> coeffs(n, BigInt(0));
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint32_t sigma = group.element(k);
        const VertexIndex moved = c.vertex_at(static_cast<VertexIndex>(j), sigma);
        // sigma^-1 = g^{-k}
        coeffs[(n - k) % n] += static_cast<unsigned long long>(adjacency_count(c.total(), wi, moved));
      }
      a(i, j) = GroupRingElement(std::move(coeffs));
    }
  }
  return a;
}

GroupRingMatrix equivariant_degree(const DerivedCover& c) {
  const std::size_t n = c.group()->order();
  const auto g = static_cast<Index>(c.base().num_vertices());
  GroupRingMatrix d = GroupRingMatrix::Constant(g, g, GroupRingElement::zero(n));
  for (Index i = 0; i < g; ++i) {
    d(i, i) = BigInt(static_cast<unsigned long long>(valence(c.base(), static_cast<VertexIndex>(i)))) *
              GroupRingElement::one(n);
  }
  return d;
}

GroupRingMatrix equivariant_laplacian(const DerivedCover& c) { return equivariant_degree(c) - equivariant_adjacency(c); }

GroupRingElement EtaPolynomial::coefficient(std::size_t k) const {
  GroupRingElement x = polynomial.coefficient(k);
  return x.order() == 0 ? GroupRingElement::zero(group_order) : x;
}

bool EtaPolynomial::constant_term_is_one() const { return coefficient(0) == GroupRingElement::one(group_order); }

GroupRingPolynomialMatrix three_term_matrix(const DerivedCover& c) {
  const std::size_t n = c.group()->order();
  const GroupRingMatrix a = equivariant_adjacency(c);
  const auto g = a.rows();
  GroupRingPolynomialMatrix m(g, g);
  for (Index i = 0; i < g; ++i) {
    for (Index j = 0; j < g; ++j) {
      std::vector<GroupRingElement> coeffs(3, GroupRingElement::zero(n));
      coeffs[1] = -a(i, j);
      if (i == j) {
        const auto val = static_cast<long long>(valence(c.base(), static_cast<VertexIndex>(i)));
        coeffs[0] = GroupRingElement::one(n);
        coeffs[2] = BigInt(val - 1) * GroupRingElement::one(n);
      }
      m(i, j) = GroupRingPolynomial(std::move(coeffs));
    }
  }
  return m;
}

EtaPolynomial eta_polynomial(const DerivedCover& c) {
  require_connected_cover(c);
  const std::size_t n = c.group()->order();
  return {gr_det(three_term_matrix(c), n), n};
}

namespace {

GroupRingElement checked_eta_one(const DerivedCover& c, const GroupRingMatrix& laplacian, const EtaPolynomial& eta) {
  const std::size_t n = c.group()->order();
  const GroupRingElement direct = gr_det(laplacian, n);
  GroupRingElement evaluated = eta.at_one();
  if (evaluated.order() == 0) evaluated = GroupRingElement::zero(n);
  if (!(direct == evaluated)) throw ConsistencyFailure("eta(1) differs from det_{Z[Delta]}(D - A)");
  return direct;
}

}  // namespace

GroupRingElement eta_at_one(const DerivedCover& c) {
  const EtaPolynomial eta = eta_polynomial(c);
  return checked_eta_one(c, equivariant_laplacian(c), eta);
}

ZetaData zeta_data(const DerivedCover& c) {
  ZetaData z{equivariant_laplacian(c), eta_polynomial(c), {}};
  z.eta_one = checked_eta_one(c, z.laplacian, z.eta);
  return z;
}

LValue l_value(const ZetaData& z, const Character& psi) {
  const PAdicInt via_eta = eval_character(z.eta_one, psi);
  const BigInt det = determinant(eval_character(z.laplacian, psi));
  const PAdicInt via_matrix(psi.group().p(), psi.precision(), det);
  if (!(via_eta == via_matrix)) {
    throw ConsistencyFailure("psi(det L) != det(psi(L)) for exponent " + std::to_string(psi.exponent()));
  }
  return {psi, via_eta};
}

LValue l_value(const DerivedCover& c, const Character& psi) { return l_value(zeta_data(c), psi); }

std::vector<PAdicInt> l_polynomial(const ZetaData& z, const Character& psi) {
  std::vector<PAdicInt> out;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(std::max(0L, z.eta.polynomial.degree())); ++k) {
    out.push_back(eval_character(z.eta.coefficient(k), psi));
  }
  return out;
}

bool duality_check(const ZetaData& z, const DerivedCover& c, Codomain codomain, unsigned precision) {
  for (const Character& psi : all_characters(c.group(), codomain, precision)) {
    if (l_polynomial(z, psi) != l_polynomial(z, psi.contragredient())) return false;
    if (!(l_value(z, psi).value == l_value(z, psi.contragredient()).value)) return false;
  }
  return true;
}

bool duality_check(const DerivedCover& c) { return duality_check(zeta_data(c), c); }

std::vector<BigInt> ihara_determinant(const SerreGraph& g) {
  const auto n = static_cast<Index>(g.num_vertices());
  const IntMatrix a = adjacency_matrix(g);
  GroupRingPolynomialMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      std::vector<GroupRingElement> coeffs(3, GroupRingElement::zero(1));
      coeffs[1] = GroupRingElement({-a(i, j)});
      if (i == j) {
        coeffs[0] = GroupRingElement::one(1);
        coeffs[2] = GroupRingElement({BigInt(static_cast<unsigned long long>(valence(g, i))) - 1});
      }
      m(i, j) = GroupRingPolynomial(std::move(coeffs));
    }
  }
  const GroupRingPolynomial det = gr_det(m, 1);
  std::vector<BigInt> out;
  for (const auto& c : det.coefficients()) out.push_back(c[0]);
  return out;
}

Rational ihara_zeta_inverse_base(const SerreGraph& g, const Rational& u) {
  const auto coeffs = ihara_determinant(g);
  Rational det = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) det = det * u + Rational(it->raw());
  const long chi = euler_characteristic(g);
  const Rational base = 1 - u * u;
  Rational factor = 1;
  for (long k = 0; k < std::labs(chi); ++k) factor *= base;
  if (chi <= 0) return factor * det;
  if (factor == 0) throw std::domain_error("(1 - u^2)^(-chi) has a pole at this point");
  return det / factor;
}

std::vector<BigInt> closed_path_counts(const SerreGraph& g, std::size_t max_length) {
  const auto c = ihara_determinant(g);
  const auto coeff = [&c](std::size_t k) { return k < c.size() ? c[k] : BigInt(0); };
  // 1/det as a power series; det(0) = 1.
  std::vector<BigInt> inv(max_length + 1, BigInt(0));
  inv[0] = 1;
  for (std::size_t k = 1; k <= max_length; ++k) {
    BigInt acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc -= coeff(j) * inv[k - j];
    inv[k] = acc;
  }
  const long chi = euler_characteristic(g);
  std::vector<BigInt> n(max_length + 1, BigInt(0));
  for (std::size_t m = 1; m <= max_length; ++m) {
    // [u^{m-1}] det'/det
    BigInt s = 0;
    for (std::size_t j = 0; j < m; ++j) s += BigInt(static_cast<unsigned long long>(j + 1)) * coeff(j + 1) * inv[m - 1 - j];
    n[m] = -s;
    if (m % 2 == 0) n[m] -= BigInt(2 * chi);
  }
  return n;
}

namespace {

void extend_paths(const SerreGraph& g, EdgeIndex first, EdgeIndex last, std::size_t length, std::size_t max_length,
                  std::vector<BigInt>& counts) {
  const DirectedEdge& tail = g.edge(last);
  if (tail.terminus == g.edge(first).origin && first != tail.inverse) counts[length] += 1;
  if (length == max_length) return;
  for (EdgeIndex e : g.outgoing(tail.terminus)) {
    if (e == tail.inverse) continue;
    extend_paths(g, first, e, length + 1, max_length, counts);
  }
}

}  // namespace

std::vector<BigInt> enumerate_closed_reduced_paths(const SerreGraph& g, std::size_t max_length) {
  std::vector<BigInt> counts(max_length + 1, BigInt(0));
  if (max_length == 0) return counts;
  for (EdgeIndex e = 0; e < g.num_directed_edges(); ++e) extend_paths(g, e, e, 1, max_length, counts);
  return counts;
}

}  // namespace herbrand
