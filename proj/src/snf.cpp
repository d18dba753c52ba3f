#include "herbrand/snf.hpp"

#include <algorithm>
#include <utility>

#include "herbrand/errors.hpp"

namespace herbrand {

std::vector<BigInt> SmithDecomposition::diagonal() const {
  std::vector<BigInt> out;
  for (Index i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

Index SmithDecomposition::rank() const {
  Index r = 0;
  for (Index i = 0; i < std::min(D.rows(), D.cols()); ++i) r += D(i, i).is_zero() ? 0 : 1;
  return r;
}

namespace {

IntMatrix identity(Index n) {
  IntMatrix m = IntMatrix::Constant(n, n, BigInt(0));
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

// Elementary operations applied simultaneously to D and the transforms:
// row ops act on D and U from the left and on U^-1 from the right, column ops
// on D and V from the right and on V^-1 from the left.
class Reducer {
 public:
  explicit Reducer(const IntMatrix& a)
      : s_{identity(a.rows()), identity(a.cols()), a, identity(a.rows()), identity(a.cols())} {}

  IntMatrix& d() { return s_.D; }

  void swap_rows(Index i, Index j) {
    if (i == j) return;
    s_.D.row(i).swap(s_.D.row(j));
    s_.U.row(i).swap(s_.U.row(j));
    s_.U_inverse.col(i).swap(s_.U_inverse.col(j));
  }
  void swap_cols(Index i, Index j) {
    if (i == j) return;
    s_.D.col(i).swap(s_.D.col(j));
    s_.V.col(i).swap(s_.V.col(j));
    s_.V_inverse.row(i).swap(s_.V_inverse.row(j));
  }
  void negate_row(Index i) {
    s_.D.row(i) = -s_.D.row(i);
    s_.U.row(i) = -s_.U.row(i);
    s_.U_inverse.col(i) = -s_.U_inverse.col(i);
  }
  /// row_i -= q row_t
  void sub_row(Index i, Index t, const BigInt& q) {
    if (q.is_zero()) return;
    s_.D.row(i) -= q * s_.D.row(t);
    s_.U.row(i) -= q * s_.U.row(t);
    s_.U_inverse.col(t) += q * s_.U_inverse.col(i);
  }
  /// col_j -= q col_t
  void sub_col(Index j, Index t, const BigInt& q) {
    if (q.is_zero()) return;
    s_.D.col(j) -= q * s_.D.col(t);
    s_.V.col(j) -= q * s_.V.col(t);
    s_.V_inverse.row(t) += q * s_.V_inverse.row(j);
  }

  SmithDecomposition take() { return std::move(s_); }

 private:
  SmithDecomposition s_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  Reducer r(a);
  IntMatrix& d = r.d();
  const Index m = a.rows(), n = a.cols();
  for (Index t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Least |entry| in the trailing block; scanning row-major keeps the first-found tie.
      Index pr = -1, pc = -1;
      BigInt best;
      for (Index i = t; i < m; ++i) {
        for (Index j = t; j < n; ++j) {
          if (d(i, j).is_zero()) continue;
          const BigInt v = abs(d(i, j));
          if (pr < 0 || v < best) {
            best = v;
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) break;  // trailing block is zero
      r.swap_rows(t, pr);
      r.swap_cols(t, pc);
      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        r.sub_row(i, t, d(i, t) / d(t, t));
        clean = clean && d(i, t).is_zero();
      }
      for (Index j = t + 1; j < n; ++j) {
        r.sub_col(j, t, d(t, j) / d(t, t));
        clean = clean && d(t, j).is_zero();
      }
      if (!clean) continue;
      // Row t is now zero off the pivot; fold in a row whose entries the pivot does not divide.
      Index bad = -1;
      for (Index i = t + 1; i < m && bad < 0; ++i) {
        for (Index j = t + 1; j < n; ++j) {
          if (!(d(i, j) % d(t, t)).is_zero()) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      r.sub_row(t, bad, BigInt(-1));
    }
    if (d(t, t).sign() < 0) r.negate_row(t);
  }
  SmithDecomposition s = r.take();
  check_decomposition(a, s);
  return s;
}

void check_decomposition(const IntMatrix& a, const SmithDecomposition& s) {
  const Index m = a.rows(), n = a.cols();
  if (s.U.rows() != m || s.U.cols() != m || s.V.rows() != n || s.V.cols() != n || s.D.rows() != m ||
      s.D.cols() != n) {
    throw ConsistencyFailure("Smith decomposition has the wrong shape");
  }
  if (m > 0 && n > 0 && s.U * a * s.V != s.D) throw ConsistencyFailure("U * A * V != D");
  if (m > 0 && s.U * s.U_inverse != identity(m)) throw ConsistencyFailure("U is not unimodular");
  if (n > 0 && s.V * s.V_inverse != identity(n)) throw ConsistencyFailure("V is not unimodular");
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i != j && !s.D(i, j).is_zero()) throw ConsistencyFailure("D is not diagonal");
    }
  }
  const auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i].sign() < 0) throw ConsistencyFailure("negative invariant factor");
    if (i + 1 < diag.size()) {
      const bool divides = diag[i].is_zero() ? diag[i + 1].is_zero() : (diag[i + 1] % diag[i]).is_zero();
      if (!divides) throw ConsistencyFailure("invariant factors do not form a divisibility chain");
    }
  }
}

BigInt CokernelDescription::torsion_order() const {
  BigInt prod = 1;
  for (const auto& d : invariant_factors) prod *= d;
  return prod;
}

CokernelDescription cokernel(const SmithDecomposition& s) {
  CokernelDescription c;
  const Index m = s.rows();
  std::vector<Index> torsion, free;
  const auto diag = s.diagonal();
  for (Index i = 0; i < m; ++i) {
    const BigInt d = i < static_cast<Index>(diag.size()) ? diag[i] : BigInt(0);
    if (d.is_zero()) {
      free.push_back(i);
    } else if (d > BigInt(1)) {
      torsion.push_back(i);
      c.invariant_factors.push_back(d);
    }
  }
  c.free_rank = free.size();
  c.torsion_generators.resize(m, static_cast<Index>(torsion.size()));
  for (std::size_t j = 0; j < torsion.size(); ++j) c.torsion_generators.col(j) = s.U_inverse.col(torsion[j]);
  c.free_generators.resize(m, static_cast<Index>(free.size()));
  for (std::size_t j = 0; j < free.size(); ++j) c.free_generators.col(j) = s.U_inverse.col(free[j]);
  return c;
}

CokernelDescription cokernel(const IntMatrix& a) { return cokernel(smith_normal_form(a)); }

ImageLattice::ImageLattice(const IntMatrix& a, const std::optional<BigInt>& modulus)
    : smith_(smith_normal_form(a)) {
  const BigInt mod = modulus ? abs(*modulus) : BigInt(0);
  const auto diag = smith_.diagonal();
  for (Index i = 0; i < smith_.rows(); ++i) {
    const BigInt d = i < static_cast<Index>(diag.size()) ? diag[i] : BigInt(0);
    moduli_.push_back(gcd(d, mod));
  }
}

IntVector ImageLattice::residues(const IntVector& x) const {
  if (x.size() != smith_.rows()) {
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) + " against lattice in Z^" +
                            std::to_string(smith_.rows()));
  }
  IntVector y = smith_.U * x;
  for (Index i = 0; i < y.size(); ++i) {
    if (!moduli_[i].is_zero()) y(i) = floor_mod(y(i), moduli_[i]);
  }
  return y;
}

bool ImageLattice::contains(const IntVector& x) const {
  const IntVector y = residues(x);
  for (Index i = 0; i < y.size(); ++i) {
    if (!y(i).is_zero()) return false;
  }
  return true;
}

bool image_membership(const IntMatrix& a, const IntVector& x, const std::optional<BigInt>& modulus) {
  if (x.size() != a.rows()) {
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) + " against a matrix with " +
                            std::to_string(a.rows()) + " rows");
  }
  return ImageLattice(a, modulus).contains(x);
}

std::vector<unsigned> local_smith_valuations(const IntMatrix& a, const BigInt& p, unsigned k) {
  const BigInt q = pow(p, k);
  IntMatrix d = reduce_mod(a, q);
  const Index m = d.rows(), n = d.cols();
  std::vector<unsigned> out;
  const auto val = [&](const BigInt& x) { return x.is_zero() ? k : p_valuation(x, p); };
  for (Index t = 0; t < std::min(m, n); ++t) {
    Index pr = -1, pc = -1;
    unsigned best = k;
    for (Index i = t; i < m && best > 0; ++i) {
      for (Index j = t; j < n; ++j) {
        const unsigned v = val(d(i, j));
        if (v < best) {
          best = v;
          pr = i;
          pc = j;
          if (v == 0) break;
        }
      }
    }
    if (pr < 0) {
      out.resize(std::min(m, n), k);
      break;
    }
    d.row(t).swap(d.row(pr));
    d.col(t).swap(d.col(pc));
    // Scale the pivot to exactly p^best.
    const BigInt pb = pow(p, best);
    const BigInt unit = inverse_mod(d(t, t) / pb, q);
    for (Index j = t; j < n; ++j) d(t, j) = floor_mod(d(t, j) * unit, q);
    for (Index i = t + 1; i < m; ++i) {
      if (d(i, t).is_zero()) continue;
      const BigInt f = d(i, t) / pb;
      for (Index j = t; j < n; ++j) d(i, j) = floor_mod(d(i, j) - f * d(t, j), q);
    }
    // Column clearing leaves the trailing block untouched: row t is a multiple of p^best.
    out.push_back(best);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace herbrand
