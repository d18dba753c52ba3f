#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <vector>

#include "herbrand/errors.hpp"
#include "herbrand/matrix.hpp"

namespace herbrand {

bool is_prime(std::uint64_t n);
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p);
std::uint64_t smallest_primitive_root(std::uint64_t p);

/// The group Delta = F_p^x written as <g> with g the chosen generator.
/// Group elements are residues 1..p-1; g^k is stored at exponent index k.
class CyclicGroup {
 public:
  /// Throws std::invalid_argument unless p is an odd prime and `generator`
  /// has order p - 1.
  CyclicGroup(std::uint32_t p, std::uint32_t generator);

  /// F_p^x with its smallest primitive root as generator.
  static std::shared_ptr<const CyclicGroup> for_prime(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t generator() const { return generator_; }
  std::size_t order() const { return p_ - 1; }

  /// g^k for k taken modulo p - 1.
  std::uint32_t element(std::size_t k) const { return powers_[k % order()]; }
  /// Discrete log: the k with g^k = sigma.
  std::size_t exponent(std::uint32_t sigma) const;
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const;

  friend bool operator==(const CyclicGroup& a, const CyclicGroup& b) {
    return a.p_ == b.p_ && a.generator_ == b.generator_;
  }

 private:
  std::uint32_t p_;
  std::uint32_t generator_;
  std::vector<std::uint32_t> powers_;
  std::vector<std::size_t> logs_;
};

/// Element sum_k m_k g^k of Z[Delta] for Delta cyclic of order n, i.e. a
/// residue class in Z[x]/(x^n - 1).
///
/// A default-constructed element is the zero of undetermined order; it adopts
/// the order of whatever it is combined with. This is what lets the type live
/// in Eigen matrices.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(std::vector<BigInt> coefficients);

  static GroupRingElement zero(std::size_t order);
  static GroupRingElement one(std::size_t order);
  /// The basis element g^k.
  static GroupRingElement basis(std::size_t order, std::size_t k);
  /// N = sum of all group elements.
  static GroupRingElement norm(std::size_t order);

  /// 0 for the undetermined zero.
  std::size_t order() const { return coeffs_.size(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  /// Coefficient of g^k (0 for the undetermined zero).
  BigInt operator[](std::size_t k) const;
  bool is_zero() const;

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  GroupRingElement& operator*=(const GroupRingElement& o);
  GroupRingElement& operator*=(const BigInt& c);

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(GroupRingElement a, const GroupRingElement& b) { return a *= b; }
  friend GroupRingElement operator*(GroupRingElement a, const BigInt& c) { return a *= c; }
  friend GroupRingElement operator*(const BigInt& c, GroupRingElement a) { return a *= c; }
  GroupRingElement operator-() const;

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);
  friend std::ostream& operator<<(std::ostream& os, const GroupRingElement& a);

 private:
  std::size_t common_order(const GroupRingElement& o) const;
  void adopt(std::size_t order);

  std::vector<BigInt> coeffs_;
};

/// Cyclic convolution; throws GroupMismatch for different group orders.
GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b);

/// Coefficient of g^k moves to g^-k.
GroupRingElement involution(const GroupRingElement& a);

/// Sum of coefficients (evaluation at the trivial character).
BigInt augmentation(const GroupRingElement& a);

/// Coefficients reduced into [0, m).
GroupRingElement reduce_mod(const GroupRingElement& a, const BigInt& m);

/// Polynomial in u with coefficients in Z[Delta]; element of Z[Delta][u].
/// Trailing zero coefficients are trimmed, so the empty polynomial is zero.
class GroupRingPolynomial {
 public:
  GroupRingPolynomial() = default;
  explicit GroupRingPolynomial(std::vector<GroupRingElement> coefficients);
  /// The constant polynomial c.
  explicit GroupRingPolynomial(GroupRingElement c);

  static GroupRingPolynomial one(std::size_t order);
  /// c * u^k
  static GroupRingPolynomial monomial(GroupRingElement c, std::size_t k);

  const std::vector<GroupRingElement>& coefficients() const { return coeffs_; }
  /// Coefficient of u^k (undetermined zero beyond the degree).
  GroupRingElement coefficient(std::size_t k) const;
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Value at an integer point u.
  GroupRingElement evaluate(const BigInt& u) const;

  GroupRingPolynomial& operator+=(const GroupRingPolynomial& o);
  GroupRingPolynomial& operator-=(const GroupRingPolynomial& o);
  GroupRingPolynomial& operator*=(const GroupRingPolynomial& o);

  friend GroupRingPolynomial operator+(GroupRingPolynomial a, const GroupRingPolynomial& b) { return a += b; }
  friend GroupRingPolynomial operator-(GroupRingPolynomial a, const GroupRingPolynomial& b) { return a -= b; }
  friend GroupRingPolynomial operator*(GroupRingPolynomial a, const GroupRingPolynomial& b) { return a *= b; }
  GroupRingPolynomial operator-() const;

  friend bool operator==(const GroupRingPolynomial& a, const GroupRingPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::vector<GroupRingElement> coeffs_;
};

/// Coefficientwise involution.
GroupRingPolynomial involution(const GroupRingPolynomial& f);

using GroupRingMatrix = DenseMatrix<GroupRingElement>;
using GroupRingPolynomialMatrix = DenseMatrix<GroupRingPolynomial>;

/// Entrywise involution.
GroupRingMatrix involution(const GroupRingMatrix& m);

/// Determinant over a commutative ring by cofactor expansion along rows,
/// memoized over column subsets: O(2^g g) ring multiplications and no
/// division, so it is sound over rings with zero divisors such as Z[Delta].
///
/// `one` is the multiplicative identity of the ring; the 0x0 determinant is `one`.
template <typename Ring>
Ring cofactor_determinant(const DenseMatrix<Ring>& m, const Ring& one) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  const auto g = static_cast<unsigned>(m.rows());
  if (g == 0) return one;
  if (g > 24) throw std::length_error("cofactor determinant limited to 24x24");
  // minors[mask] = det of rows 0..|mask|-1 restricted to the columns in mask.
  std::vector<Ring> minors(std::size_t{1} << g);
  minors[0] = one;
  for (std::size_t mask = 1; mask < minors.size(); ++mask) {
    const auto row = static_cast<Index>(__builtin_popcountll(mask) - 1);
    Ring acc;
    unsigned position = 0;
    for (unsigned col = 0; col < g; ++col) {
      if (!(mask & (std::size_t{1} << col))) continue;
      const Ring term = m(row, static_cast<Index>(col)) * minors[mask ^ (std::size_t{1} << col)];
      if ((static_cast<unsigned>(row) + position) % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
      ++position;
    }
    minors[mask] = std::move(acc);
  }
  return minors.back();
}

/// Determinant in Z[Delta]; throws DimensionMismatch for non-square input.
GroupRingElement gr_det(const GroupRingMatrix& m, std::size_t order);

/// Determinant in Z[Delta][u].
GroupRingPolynomial gr_det(const GroupRingPolynomialMatrix& m, std::size_t order);

}  // namespace herbrand

namespace Eigen {
template <>
struct NumTraits<herbrand::GroupRingElement> : GenericNumTraits<herbrand::GroupRingElement> {
  using Real = herbrand::GroupRingElement;
  using NonInteger = herbrand::GroupRingElement;
  using Literal = herbrand::GroupRingElement;
  using Nested = herbrand::GroupRingElement;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 32,
    MulCost = 256
  };
};

template <>
struct NumTraits<herbrand::GroupRingPolynomial> : GenericNumTraits<herbrand::GroupRingPolynomial> {
  using Real = herbrand::GroupRingPolynomial;
  using NonInteger = herbrand::GroupRingPolynomial;
  using Literal = herbrand::GroupRingPolynomial;
  using Nested = herbrand::GroupRingPolynomial;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 64,
    AddCost = 128,
    MulCost = 1024
  };
};
}  // namespace Eigen
