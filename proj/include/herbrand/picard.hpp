#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "herbrand/padic.hpp"
#include "herbrand/snf.hpp"
#include "herbrand/voltage_cover.hpp"

namespace herbrand {

/// Pic^0(Y) = torsion(coker L_Y) as a Z[Delta]-module.
///
/// Generators are the columns of U^-1 at torsion positions of the Smith form of
/// L_Y. The deck transformation sigma acts by action(sigma); row i of every
/// action matrix is reduced modulo invariant_factors[i].
class PicardModule {
 public:
  explicit PicardModule(const DerivedCover& cover);

  const DerivedCover& cover() const { return cover_; }
  const IntMatrix& laplacian() const { return laplacian_; }
  const SmithDecomposition& smith() const { return smith_; }
  const std::vector<BigInt>& invariant_factors() const { return factors_; }
  /// Generator divisors, one column per invariant factor.
  const IntMatrix& generators() const { return generators_; }
  std::size_t rank() const { return factors_.size(); }
  BigInt order() const;

  /// Action of sigma in F_p^x on generator coordinates.
  const IntMatrix& action(std::uint32_t sigma) const { return actions_.at(sigma); }

  /// Coordinates of a degree-zero divisor in the generator basis (row i mod d_i).
  IntVector coordinates(const IntVector& divisor) const;

 private:
  DerivedCover cover_;
  IntMatrix laplacian_;
  SmithDecomposition smith_;
  std::vector<BigInt> factors_;
  std::vector<Index> torsion_rows_;
  IntMatrix generators_;
  std::vector<IntMatrix> actions_;  // indexed by residue sigma; slot 0 unused
};

/// Throws DisconnectedCover for disconnected covers.
PicardModule picard_module(const DerivedCover& c);

/// Row i of m reduced into [0, moduli[i]).
IntMatrix reduce_rows(const IntMatrix& m, const std::vector<BigInt>& moduli);

/// Action matrix of a group ring element sum_k c_k g^k on the generators.
IntMatrix apply_group_ring(const PicardModule& pm, const GroupRingElement& x);

/// Determinant of a principal (n-1)-minor of the Laplacian; 1 for a single vertex.
BigInt spanning_tree_count(const SerreGraph& g);

/// Sylow p-subgroup A of Pic^0(Y) with generators of orders p^{a_1} | ... | p^{a_r}.
struct SylowPModule {
  std::uint32_t p = 0;
  std::vector<unsigned> exponents;
  /// k = a_r, or 0 for the trivial module.
  unsigned exponent = 0;
  /// Generator divisors, columns.
  IntMatrix generators;
  /// Indexed by residue sigma; entries in [0, p^k), row i meaningful mod p^{a_i}.
  std::vector<IntMatrix> actions;

  std::size_t rank() const { return exponents.size(); }
  BigInt order() const;
  std::vector<BigInt> moduli() const;
  const IntMatrix& action(std::uint32_t sigma) const { return actions.at(sigma); }
};

SylowPModule sylow_p_module(const PicardModule& pm, std::uint32_t p);

/// E_psi = (p-1)^-1 sum_sigma psi(sigma) P_{sigma^-1} mod p^k.
IntMatrix projector(const SylowPModule& m, const Character& psi, unsigned k);

/// #e_psi A through local Smith form of [E_psi | diag(p^{a_i})].
/// Throws InsufficientPrecision if psi is known to less than p^k.
BigInt eigenspace_order_A(const SylowPModule& m, const Character& psi);

/// C = Div^0(Y) / (p Div^0(Y) + Pr(Y)) with an explicit F_p basis.
struct ElementaryQuotient {
  std::uint32_t p = 0;
  std::size_t dimension = 0;
  /// Basis divisors epsilon_1..epsilon_m, columns.
  IntMatrix basis;
  /// Generator matrix of M, [p (w_k - w_0) | L].
  IntMatrix lattice_generators;
  std::shared_ptr<const ImageLattice> lattice;
  SylowPModule sylow;

  bool contains(const IntVector& divisor) const { return lattice->contains(divisor); }
};

/// Throws ConsistencyFailure if dim C differs from the number of p-power factors.
ElementaryQuotient elementary_quotient(const PicardModule& pm);

/// Rank over F_p of E_psi mod p on C = A / pA.
std::size_t eigenspace_dim_C_projector(const SylowPModule& m, const Character& psi);

/// log_p of #{lambda in F_p^m : (f_psi - 1) sum lambda_j epsilon_j in M}; nullopt
/// when p^m exceeds the budget.
std::optional<std::size_t> eigenspace_dim_C_enumeration(const ElementaryQuotient& q, const PicardModule& pm,
                                                        const Character& psi, std::uint64_t budget);

inline constexpr std::uint64_t default_enumeration_budget = 1'000'000;

/// dim e_psi C by the projector, confirmed by enumeration within budget.
/// Throws ConsistencyFailure if the two disagree.
std::size_t eigenspace_dim_C(const ElementaryQuotient& q, const PicardModule& pm, const Character& psi,
                             std::uint64_t budget = default_enumeration_budget);

struct TrivialCharacterCheck {
  BigInt eigenspace_order;
  BigInt kappa_p;
  bool holds;
};

/// # e_{psi_0} A against the p-part of kappa(X).
TrivialCharacterCheck trivial_character_check(const SylowPModule& m, const SerreGraph& base, std::uint32_t p);

}  // namespace herbrand
