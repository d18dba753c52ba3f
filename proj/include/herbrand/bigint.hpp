#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace herbrand {

/// Arbitrary-precision signed integer with value semantics.
///
/// Wraps boost::multiprecision::cpp_int so the type can be used as an Eigen
/// scalar (Boost's own Eigen glue does not compile against Eigen 3.4 here).
class BigInt {
 public:
  using Storage = boost::multiprecision::cpp_int;

  BigInt() = default;
  BigInt(int v) : v_(v) {}                  // NOLINT(google-explicit-constructor)
  BigInt(long v) : v_(v) {}                 // NOLINT(google-explicit-constructor)
  BigInt(long long v) : v_(v) {}            // NOLINT(google-explicit-constructor)
  BigInt(unsigned v) : v_(v) {}             // NOLINT(google-explicit-constructor)
  BigInt(unsigned long v) : v_(v) {}        // NOLINT(google-explicit-constructor)
  BigInt(unsigned long long v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  explicit BigInt(Storage v) : v_(std::move(v)) {}
  explicit BigInt(const std::string& decimal) : v_(decimal) {}

  const Storage& raw() const { return v_; }

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }
  /// Truncating division (rounds toward zero), like built-in integers.
  BigInt& operator/=(const BigInt& o) { v_ /= o.v_; return *this; }
  /// Remainder with the sign of the dividend.
  BigInt& operator%=(const BigInt& o) { v_ %= o.v_; return *this; }

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }
  BigInt operator-() const { return BigInt(Storage(-v_)); }

  friend bool operator==(const BigInt& a, const BigInt& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  /// Checked narrowing; throws std::overflow_error when out of range.
  std::int64_t to_int64() const;
  std::string str() const { return v_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& a) { return os << a.v_; }

 private:
  Storage v_;
};

BigInt abs(const BigInt& a);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned exponent);

/// Representative of a in [0, m) for m > 0.
BigInt floor_mod(const BigInt& a, const BigInt& m);
/// Floor division for m > 0.
BigInt floor_div(const BigInt& a, const BigInt& m);
BigInt pow_mod(BigInt base, BigInt exponent, const BigInt& m);
/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
BigInt inverse_mod(const BigInt& a, const BigInt& m);

/// Largest v with p^v | a, for a != 0.
unsigned p_valuation(BigInt a, const BigInt& p);

}  // namespace herbrand

namespace Eigen {
template <>
struct NumTraits<herbrand::BigInt> : GenericNumTraits<herbrand::BigInt> {
  using Real = herbrand::BigInt;
  using NonInteger = herbrand::BigInt;
  using Literal = herbrand::BigInt;
  using Nested = herbrand::BigInt;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 8,
    MulCost = 16
  };
};
}  // namespace Eigen
