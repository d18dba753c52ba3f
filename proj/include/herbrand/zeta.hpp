#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "herbrand/group_ring.hpp"
#include "herbrand/padic.hpp"
#include "herbrand/voltage_cover.hpp"

namespace herbrand {

using Rational = boost::multiprecision::cpp_rational;

/// A_{ij} = l_i(w_j) = sum_sigma a_{w_i}(sigma w_j) sigma^-1 for the transversal
/// w_i = (v_i, 1), read off the derived graph.
GroupRingMatrix equivariant_adjacency(const DerivedCover& c);

/// Diagonal val_X(v_i) times the identity of Z[Delta].
GroupRingMatrix equivariant_degree(const DerivedCover& c);

/// D - A over Z[Delta].
GroupRingMatrix equivariant_laplacian(const DerivedCover& c);

/// eta(u) = det_{Z[Delta]}(I - A u + (D - I) u^2).
struct EtaPolynomial {
  GroupRingPolynomial polynomial;
  std::size_t group_order = 0;

  GroupRingElement coefficient(std::size_t k) const;
  GroupRingElement at_one() const { return polynomial.evaluate(BigInt(1)); }
  bool constant_term_is_one() const;
  /// Coefficientwise iota-invariance.
  bool involution_invariant() const { return involution(polynomial) == polynomial; }
};

/// The g x g matrix I - A u + (D - I) u^2 over Z[Delta][u].
GroupRingPolynomialMatrix three_term_matrix(const DerivedCover& c);

/// Throws DisconnectedCover.
EtaPolynomial eta_polynomial(const DerivedCover& c);

/// det_{Z[Delta]}(D - A), checked against eta_polynomial at u = 1. Throws
/// ConsistencyFailure if the two disagree, DisconnectedCover if disconnected.
GroupRingElement eta_at_one(const DerivedCover& c);

/// Equivariant data computed once per cover.
struct ZetaData {
  GroupRingMatrix laplacian;
  EtaPolynomial eta;
  GroupRingElement eta_one;
};

ZetaData zeta_data(const DerivedCover& c);

/// h(1, psi) = psi(eta(1)).
struct LValue {
  Character psi;
  PAdicInt value;

  /// Reduction to F_p.
  PAdicInt mod_p() const { return value.truncate(1); }
};

/// psi(eta(1)), cross-checked against det(psi(D - A)) modulo p^N. Throws
/// ConsistencyFailure on disagreement.
LValue l_value(const ZetaData& z, const Character& psi);
LValue l_value(const DerivedCover& c, const Character& psi);

/// h(u, psi) coefficientwise.
std::vector<PAdicInt> l_polynomial(const ZetaData& z, const Character& psi);

/// True iff h(u, psi) = h(u, psi*) for every character of the given codomain
/// (checked on all coefficients, hence also at u = 1).
bool duality_check(const ZetaData& z, const DerivedCover& c, Codomain codomain = Codomain::PrimeField,
                   unsigned precision = 1);
bool duality_check(const DerivedCover& c);

/// Integer coefficients of det(I - A u + (D - I) u^2) for a single graph.
std::vector<BigInt> ihara_determinant(const SerreGraph& g);

/// Z_X(u)^-1 = (1 - u^2)^(-chi) det(I - A u + (D - I) u^2) at a rational point.
/// Throws std::domain_error at u = +-1 when chi > 0.
Rational ihara_zeta_inverse_base(const SerreGraph& g, const Rational& u);

/// N_1..N_max from u d/du log Z_X(u) = sum N_m u^m; index 0 is unused.
std::vector<BigInt> closed_path_counts(const SerreGraph& g, std::size_t max_length);

/// Brute-force count of closed backtrackless tailless directed-edge cycles of
/// length 1..max_length (with marked start); index 0 is unused.
std::vector<BigInt> enumerate_closed_reduced_paths(const SerreGraph& g, std::size_t max_length);

}  // namespace herbrand
