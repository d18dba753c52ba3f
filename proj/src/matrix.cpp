#include "herbrand/matrix.hpp"

#include <stdexcept>

namespace herbrand {

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Index n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  int sign = 1;
  BigInt previous = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      Index swap = k + 1;
      while (swap < n && m(swap, k).is_zero()) ++swap;
      if (swap == n) return 0;
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

IntMatrix reduce_mod(const IntMatrix& a, const BigInt& m) {
  return a.unaryExpr([&m](const BigInt& x) { return floor_mod(x, m); });
}

namespace {

unsigned valuation_capped(BigInt x, const BigInt& p, unsigned cap) {
  if (x.is_zero()) return cap;
  unsigned v = 0;
  while (v < cap && (x % p).is_zero()) {
    x /= p;
    ++v;
  }
  return v;
}

}  // namespace

BigInt determinant_mod_prime_power(const IntMatrix& a, const BigInt& p, unsigned k) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (k == 0) throw std::invalid_argument("precision must be positive");
  const BigInt modulus = pow(p, k);
  IntMatrix m = reduce_mod(a, modulus);
  const Index n = m.rows();
  BigInt det = 1;
  for (Index t = 0; t < n; ++t) {
    Index pr = t, pc = t;
    unsigned best = k;
    for (Index i = t; i < n && best > 0; ++i) {
      for (Index j = t; j < n; ++j) {
        const unsigned v = valuation_capped(m(i, j), p, k);
        if (v < best) {
          best = v;
          pr = i;
          pc = j;
          if (v == 0) break;
        }
      }
    }
    if (best == k) return 0;
    if (pr != t) {
      m.row(pr).swap(m.row(t));
      det = -det;
    }
    if (pc != t) {
      m.col(pc).swap(m.col(t));
      det = -det;
    }
    const BigInt scale = pow(p, best);
    const BigInt reduced = pow(p, k - best);
    const BigInt unit_inverse = inverse_mod(m(t, t) / scale, reduced);
    for (Index i = t + 1; i < n; ++i) {
      if (m(i, t).is_zero()) continue;
      // Every entry of row t has valuation >= best, so the factor only
      // needs to be known modulo p^(k - best).
      const BigInt factor = floor_mod((m(i, t) / scale) * unit_inverse, reduced);
      for (Index j = t; j < n; ++j) {
        m(i, j) = floor_mod(m(i, j) - factor * m(t, j), modulus);
      }
    }
    det = floor_mod(det * m(t, t), modulus);
  }
  return floor_mod(det, modulus);
}

Index rank_mod_prime(const IntMatrix& a, const BigInt& p) {
  IntMatrix m = reduce_mod(a, p);
  Index rank = 0;
  for (Index c = 0; c < m.cols() && rank < m.rows(); ++c) {
    Index pivot = rank;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(pivot).swap(m.row(rank));
    const BigInt inv = inverse_mod(m(rank, c), p);
    for (Index i = rank + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const BigInt f = floor_mod(m(i, c) * inv, p);
      for (Index j = c; j < m.cols(); ++j) m(i, j) = floor_mod(m(i, j) - f * m(rank, j), p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace herbrand
