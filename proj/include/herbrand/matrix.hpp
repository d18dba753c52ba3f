#pragma once

#include <Eigen/Core>

#include "herbrand/bigint.hpp"

namespace herbrand {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<BigInt>;
using IntVector = DenseVector<BigInt>;

using Index = Eigen::Index;

/// Exact determinant over Z by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& a);

/// Entrywise reduction into [0, m).
IntMatrix reduce_mod(const IntMatrix& a, const BigInt& m);

/// Determinant over the local ring Z/p^k, returned in [0, p^k).
///
/// Full pivoting on minimal p-adic valuation makes every elimination step
/// well defined modulo p^k even though Z/p^k has zero divisors.
BigInt determinant_mod_prime_power(const IntMatrix& a, const BigInt& p, unsigned k);

/// Rank over F_p of an integer matrix.
Index rank_mod_prime(const IntMatrix& a, const BigInt& p);

}  // namespace herbrand
