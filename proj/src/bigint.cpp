#include "herbrand/bigint.hpp"

#include <limits>
#include <stdexcept>

#include <boost/integer/common_factor_rt.hpp>

namespace herbrand {

std::int64_t BigInt::to_int64() const {
  if (v_ > std::numeric_limits<std::int64_t>::max() ||
      v_ < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("BigInt does not fit in 64 bits: " + v_.str());
  }
  return v_.convert_to<std::int64_t>();
}

BigInt abs(const BigInt& a) { return a.sign() < 0 ? -a : a; }

BigInt gcd(const BigInt& a, const BigInt& b) {
  return BigInt(boost::multiprecision::gcd(a.raw(), b.raw()));
}

BigInt pow(const BigInt& base, unsigned exponent) {
  return BigInt(BigInt::Storage(boost::multiprecision::pow(base.raw(), exponent)));
}

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r.sign() < 0) r += m;
  return r;
}

BigInt floor_div(const BigInt& a, const BigInt& m) {
  return (a - floor_mod(a, m)) / m;
}

BigInt pow_mod(BigInt base, BigInt exponent, const BigInt& m) {
  if (exponent.sign() < 0) {
    base = inverse_mod(base, m);
    exponent = -exponent;
  }
  return BigInt(BigInt::Storage(
      boost::multiprecision::powm(floor_mod(base, m).raw(), exponent.raw(), m.raw())));
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  // Extended Euclid on (a mod m, m).
  BigInt old_r = floor_mod(a, m), r = m;
  BigInt old_s = 1, s = 0;
  while (!r.is_zero()) {
    const BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != BigInt(1)) {
    throw std::domain_error("not invertible modulo " + m.str() + ": " + a.str());
  }
  return floor_mod(old_s, m);
}

unsigned p_valuation(BigInt a, const BigInt& p) {
  if (a.is_zero()) throw std::domain_error("valuation of zero");
  unsigned v = 0;
  while ((a % p).is_zero()) {
    a /= p;
    ++v;
  }
  return v;
}

}  // namespace herbrand
