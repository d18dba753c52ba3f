#pragma once

#include <optional>
#include <vector>

#include "herbrand/matrix.hpp"

namespace herbrand {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
/// The inverses of both transforms are carried along so that cokernel
/// generators (columns of U^-1) come for free.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
  IntMatrix U_inverse;
  IntMatrix V_inverse;

  Index rows() const { return D.rows(); }
  Index cols() const { return D.cols(); }
  /// The min(rows, cols) diagonal entries.
  std::vector<BigInt> diagonal() const;
  /// Number of nonzero diagonal entries.
  Index rank() const;
};

/// Exact Smith form over Z. Pivot: least nonzero |entry|, ties to the lowest
/// row, then lowest column. Throws ConsistencyFailure if the self-check fails.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Throws ConsistencyFailure unless the decomposition satisfies every invariant for a.
void check_decomposition(const IntMatrix& a, const SmithDecomposition& s);

struct CokernelDescription {
  /// Invariant factors > 1, in divisibility order.
  std::vector<BigInt> invariant_factors;
  std::size_t free_rank = 0;
  /// Column j generates the cyclic factor invariant_factors[j].
  IntMatrix torsion_generators;
  /// Columns spanning a free complement.
  IntMatrix free_generators;

  BigInt torsion_order() const;
};

/// coker(A : Z^cols -> Z^rows).
CokernelDescription cokernel(const IntMatrix& a);
CokernelDescription cokernel(const SmithDecomposition& s);

/// Membership oracle for image(A) + m Z^rows (m = 0 means no modulus).
///
/// With y = U x, membership holds iff y_i = 0 mod gcd(d_i, m) for every row
/// index i, where d_i = 0 past the rank.
class ImageLattice {
 public:
  explicit ImageLattice(const IntMatrix& a, const std::optional<BigInt>& modulus = std::nullopt);

  Index ambient_dimension() const { return smith_.rows(); }
  bool contains(const IntVector& x) const;
  /// (U x)_i mod gcd(d_i, m) for each row index i; zero exactly on the lattice.
  IntVector residues(const IntVector& x) const;
  /// gcd(d_i, m) per row index.
  const std::vector<BigInt>& coordinate_moduli() const { return moduli_; }
  const SmithDecomposition& smith() const { return smith_; }

 private:
  SmithDecomposition smith_;
  std::vector<BigInt> moduli_;
};

/// x in image(A) (+ modulus * Z^rows). Throws DimensionMismatch when x has the wrong length.
bool image_membership(const IntMatrix& a, const IntVector& x, const std::optional<BigInt>& modulus = std::nullopt);

/// Valuations of the Smith invariants of A over the local ring Z/p^k, computed
/// natively (unit scaling plus minimal-valuation pivoting). One entry per
/// diagonal position, in increasing order; an entry of k stands for 0 mod p^k.
std::vector<unsigned> local_smith_valuations(const IntMatrix& a, const BigInt& p, unsigned k);

}  // namespace herbrand
