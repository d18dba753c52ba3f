#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "herbrand/group_ring.hpp"

namespace herbrand {

/// Element of Z_p known modulo p^N. F_p is the case N = 1.
///
/// Arithmetic between values of different precision happens at the smaller
/// precision; mixing different primes throws.
class PAdicInt {
 public:
  PAdicInt(std::uint32_t p, unsigned precision, const BigInt& value);

  std::uint32_t p() const { return p_; }
  unsigned precision() const { return precision_; }
  /// Representative in [0, p^N).
  const BigInt& value() const { return value_; }
  BigInt modulus() const;

  bool is_zero() const { return value_.is_zero(); }
  /// The same element viewed at a lower precision.
  PAdicInt truncate(unsigned precision) const;
  /// Base-p digits c_0, c_1, ..., c_{N-1}.
  std::vector<unsigned> digits() const;

  PAdicInt& operator+=(const PAdicInt& o);
  PAdicInt& operator-=(const PAdicInt& o);
  PAdicInt& operator*=(const PAdicInt& o);
  friend PAdicInt operator+(PAdicInt a, const PAdicInt& b) { return a += b; }
  friend PAdicInt operator-(PAdicInt a, const PAdicInt& b) { return a -= b; }
  friend PAdicInt operator*(PAdicInt a, const PAdicInt& b) { return a *= b; }

  friend bool operator==(const PAdicInt& a, const PAdicInt& b) {
    return a.p_ == b.p_ && a.precision_ == b.precision_ && a.value_ == b.value_;
  }

 private:
  void align(const PAdicInt& o);

  std::uint32_t p_;
  unsigned precision_;
  BigInt value_;
};

/// The Teichmuller lift of a unit residue: the (p-1)th root of unity congruent
/// to a mod p, computed by N iterations of x -> x^p mod p^N.
PAdicInt teichmuller(std::uint64_t a, std::uint32_t p, unsigned precision);

/// Largest v < N with p^v | x. Throws PrecisionExhausted when x = 0 mod p^N.
unsigned valuation(const PAdicInt& x);

/// |x|_p^-1 = p^valuation(x).
BigInt abs_p_inverse(const PAdicInt& x);

/// "c0 + c1*p + ..." in the style "2·11² + 7·11³ + 9·11⁴ + …" (zero digits omitted).
std::string render_expansion(const PAdicInt& x);

enum class Codomain { PrimeField, PAdic };

/// Character of Delta = F_p^x with values in F_p (gamma^i, gamma the identity
/// F_p^x -> F_p^x) or in Z_p mod p^N ((omega o gamma)^i with omega the
/// Teichmuller character).
class Character {
 public:
  Character(std::shared_ptr<const CyclicGroup> group, std::size_t exponent, Codomain codomain,
            unsigned precision = 1);

  static Character mod_p(std::shared_ptr<const CyclicGroup> group, std::size_t exponent);
  static Character p_adic(std::shared_ptr<const CyclicGroup> group, std::size_t exponent, unsigned precision);

  const CyclicGroup& group() const { return *group_; }
  const std::shared_ptr<const CyclicGroup>& group_ptr() const { return group_; }
  std::size_t exponent() const { return exponent_; }
  Codomain codomain() const { return codomain_; }
  unsigned precision() const { return precision_; }
  bool is_trivial() const { return exponent_ == 0; }

  /// psi* (sigma) = psi(sigma^-1): exponent (p - 1 - i) mod (p - 1).
  Character contragredient() const;
  /// Same exponent at another codomain/precision.
  Character with_precision(unsigned precision) const;
  /// The F_p character obtained by reduction mod p.
  Character reduction() const;

  /// psi(g^k) as residues mod p^N for k = 0..p-2.
  const std::vector<BigInt>& values_on_powers() const { return values_; }
  BigInt modulus() const;

 private:
  std::shared_ptr<const CyclicGroup> group_;
  std::size_t exponent_;
  Codomain codomain_;
  unsigned precision_;
  std::vector<BigInt> values_;
};

/// psi(sigma) for sigma in F_p^x.
PAdicInt character_value(const Character& psi, std::uint32_t sigma);

/// The ring morphism Z[Delta] -> codomain induced by psi.
PAdicInt eval_character(const GroupRingElement& a, const Character& psi);

/// Entrywise evaluation, as integer representatives in [0, p^N).
IntMatrix eval_character(const GroupRingMatrix& m, const Character& psi);

/// e_psi = (1/#Delta) sum_sigma psi(sigma) sigma^-1 reduced mod p^k, with
/// coefficients in [0, p^k). Requires psi known to precision >= k.
GroupRingElement idempotent_mod(const Character& psi, unsigned k);

/// All p - 1 characters of one codomain, indexed by exponent.
std::vector<Character> all_characters(const std::shared_ptr<const CyclicGroup>& group, Codomain codomain,
                                      unsigned precision = 1);

}  // namespace herbrand
