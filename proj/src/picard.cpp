#include "herbrand/picard.hpp"

#include <algorithm>

#include "herbrand/errors.hpp"

namespace herbrand {

IntMatrix reduce_rows(const IntMatrix& m, const std::vector<BigInt>& moduli) {
  if (static_cast<std::size_t>(m.rows()) != moduli.size()) throw DimensionMismatch("one modulus per row required");
  IntMatrix out = m;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = floor_mod(out(i, j), moduli[i]);
  }
  return out;
}

namespace {

IntMatrix identity(Index n) {
  IntMatrix m = IntMatrix::Constant(n, n, BigInt(0));
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

/// Rows of m that are the images of rows w under the permutation: out(perm[w]) = m(w).
IntMatrix permute_rows(const IntMatrix& m, const std::vector<VertexIndex>& perm) {
  IntMatrix out(m.rows(), m.cols());
  for (Index w = 0; w < m.rows(); ++w) out.row(static_cast<Index>(perm[w])) = m.row(w);
  return out;
}

/// Checks P_1 = I and P_sigma P_tau = P_{sigma tau}, row i taken mod moduli[i].
void check_action(const std::vector<IntMatrix>& actions, const std::vector<BigInt>& moduli,
                  const CyclicGroup& group, const char* what) {
  const Index r = static_cast<Index>(moduli.size());
  if (reduce_rows(actions[1], moduli) != reduce_rows(identity(r), moduli)) {
    throw ConsistencyFailure(std::string(what) + ": identity does not act trivially");
  }
  for (std::uint32_t s = 1; s < group.p(); ++s) {
    for (std::uint32_t t = 1; t < group.p(); ++t) {
      if (reduce_rows(actions[s] * actions[t], moduli) != actions[group.multiply(s, t)]) {
        throw ConsistencyFailure(std::string(what) + ": action is not multiplicative at sigma=" +
                                 std::to_string(s) + ", tau=" + std::to_string(t));
      }
    }
  }
  // Column j has order moduli[j]; its image must too.
  for (const IntMatrix& a : actions) {
    if (a.size() == 0) continue;
    for (Index j = 0; j < r; ++j) {
      for (Index i = 0; i < r; ++i) {
        if (!floor_mod(a(i, j) * moduli[j], moduli[i]).is_zero()) {
          throw ConsistencyFailure(std::string(what) + ": action does not preserve relations");
        }
      }
    }
  }
}

}  // namespace

PicardModule::PicardModule(const DerivedCover& cover)
    : cover_(require_connected_cover(cover)),
      laplacian_(laplacian_matrix(cover_.total())),
      smith_(smith_normal_form(laplacian_)) {
  const Index n = laplacian_.rows();
  if (smith_.rank() != n - 1) throw ConsistencyFailure("Laplacian of a connected graph must have corank 1");
  const auto diag = smith_.diagonal();
  for (Index i = 0; i < n; ++i) {
    if (diag[i] > BigInt(1)) {
      torsion_rows_.push_back(i);
      factors_.push_back(diag[i]);
    }
  }
  const Index r = static_cast<Index>(factors_.size());
  generators_.resize(n, r);
  for (Index j = 0; j < r; ++j) generators_.col(j) = smith_.U_inverse.col(torsion_rows_[j]);

  const std::uint32_t p = cover_.p();
  actions_.resize(p);
  for (std::uint32_t sigma = 1; sigma < p; ++sigma) {
    const IntMatrix moved = permute_rows(generators_, deck_permutation(cover_, sigma));
    IntMatrix a(r, r);
    for (Index j = 0; j < r; ++j) a.col(j) = coordinates(moved.col(j));
    actions_[sigma] = std::move(a);
  }
  check_action(actions_, factors_, *cover_.group(), "Pic^0 action");
}

IntVector PicardModule::coordinates(const IntVector& divisor) const {
  if (divisor.size() != laplacian_.rows()) throw DimensionMismatch("divisor has the wrong length");
  const IntVector y = smith_.U * divisor;
  // Row n-1 measures degree up to sign.
  if (!y(y.size() - 1).is_zero()) throw ConsistencyFailure("divisor is not of degree zero");
  IntVector out(static_cast<Index>(factors_.size()));
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out(static_cast<Index>(i)) = floor_mod(y(torsion_rows_[i]), factors_[i]);
  }
  return out;
}

BigInt PicardModule::order() const {
  BigInt prod = 1;
  for (const auto& d : factors_) prod *= d;
  return prod;
}

PicardModule picard_module(const DerivedCover& c) { return PicardModule(c); }

IntMatrix apply_group_ring(const PicardModule& pm, const GroupRingElement& x) {
  const Index r = static_cast<Index>(pm.rank());
  IntMatrix acc = IntMatrix::Constant(r, r, BigInt(0));
  const CyclicGroup& group = *pm.cover().group();
  for (std::size_t k = 0; k < x.order(); ++k) {
    if (x[k].is_zero()) continue;
    acc += x[k] * pm.action(group.element(k));
  }
  return reduce_rows(acc, pm.invariant_factors());
}

BigInt spanning_tree_count(const SerreGraph& g) {
  if (!is_connected(g)) throw DisconnectedGraph("spanning trees of a disconnected graph");
  const Index n = static_cast<Index>(g.num_vertices());
  const IntMatrix l = laplacian_matrix(g);
  return determinant(l.topLeftCorner(n - 1, n - 1));
}

BigInt SylowPModule::order() const {
  unsigned total = 0;
  for (unsigned a : exponents) total += a;
  return pow(BigInt(p), total);
}

std::vector<BigInt> SylowPModule::moduli() const {
  std::vector<BigInt> out;
  for (unsigned a : exponents) out.push_back(pow(BigInt(p), a));
  return out;
}

SylowPModule sylow_p_module(const PicardModule& pm, std::uint32_t p) {
  SylowPModule m;
  m.p = p;
  const BigInt bp(p);
  const auto& d = pm.invariant_factors();
  std::vector<std::size_t> kept;
  std::vector<BigInt> cofactor(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const unsigned a = p_valuation(d[i], bp);
    cofactor[i] = d[i] / pow(bp, a);
    if (a > 0) {
      kept.push_back(i);
      m.exponents.push_back(a);
    }
  }
  m.exponent = m.exponents.empty() ? 0 : m.exponents.back();
  const Index r = static_cast<Index>(kept.size());
  const Index n = pm.generators().rows();
  m.generators.resize(n, r);
  for (Index j = 0; j < r; ++j) m.generators.col(j) = cofactor[kept[j]] * pm.generators().col(kept[j]);

  const auto moduli = m.moduli();
  m.actions.resize(p);
  for (std::uint32_t sigma = 1; sigma < p; ++sigma) {
    const IntMatrix& full = pm.action(sigma);
    IntMatrix a(r, r);
    for (Index j = 0; j < r; ++j) {
      const std::size_t src = kept[j];
      // sigma g'_j = m_j sum_i P_ij g_i; components outside the p-part must vanish.
      for (std::size_t i = 0; i < d.size(); ++i) {
        const BigInt x = floor_mod(cofactor[src] * full(static_cast<Index>(i), static_cast<Index>(src)), d[i]);
        const auto pos = std::find(kept.begin(), kept.end(), i);
        if (pos == kept.end()) {
          if (!x.is_zero()) throw ConsistencyFailure("deck action leaves the Sylow p-subgroup");
          continue;
        }
        if (!(x % cofactor[i]).is_zero()) throw ConsistencyFailure("deck action leaves the Sylow p-subgroup");
        const Index row = pos - kept.begin();
        a(row, j) = floor_mod(x / cofactor[i], moduli[row]);
      }
    }
    m.actions[sigma] = std::move(a);
  }
  if (r > 0) check_action(m.actions, moduli, *pm.cover().group(), "Sylow action");
  return m;
}

IntMatrix projector(const SylowPModule& m, const Character& psi, unsigned k) {
  if (psi.group().p() != m.p) throw GroupMismatch("character and module have different primes");
  const Index r = static_cast<Index>(m.rank());
  if (k == 0 || r == 0) return IntMatrix::Constant(r, r, BigInt(0));
  if (psi.precision() < k) {
    throw InsufficientPrecision("character known to p^" + std::to_string(psi.precision()) + ", projector needs p^" +
                                std::to_string(k));
  }
  const BigInt q = pow(BigInt(m.p), k);
  const CyclicGroup& group = psi.group();
  IntMatrix acc = IntMatrix::Constant(r, r, BigInt(0));
  for (std::size_t j = 0; j < group.order(); ++j) {
    const std::uint32_t sigma = group.element(j);
    acc += psi.values_on_powers()[j] * m.action(group.inverse(sigma));
  }
  const BigInt inv = inverse_mod(BigInt(static_cast<unsigned long long>(group.order())), q);
  return reduce_mod(IntMatrix(inv * acc), q);
}

BigInt eigenspace_order_A(const SylowPModule& m, const Character& psi) {
  const Index r = static_cast<Index>(m.rank());
  if (r == 0) return 1;
  const unsigned k = m.exponent;
  const IntMatrix e = projector(m, psi, k);
  IntMatrix presentation = IntMatrix::Constant(r, 2 * r, BigInt(0));
  presentation.leftCols(r) = e;
  const auto moduli = m.moduli();
  for (Index i = 0; i < r; ++i) presentation(i, r + i) = moduli[i];
  unsigned total_a = 0, total_b = 0;
  for (unsigned a : m.exponents) total_a += a;
  for (unsigned b : local_smith_valuations(presentation, BigInt(m.p), k)) total_b += b;
  if (total_b > total_a) throw ConsistencyFailure("image of the projector is larger than A");
  return pow(BigInt(m.p), total_a - total_b);
}

ElementaryQuotient elementary_quotient(const PicardModule& pm) {
  ElementaryQuotient q;
  q.p = pm.cover().p();
  q.sylow = sylow_p_module(pm, q.p);
  const IntMatrix& l = pm.laplacian();
  const Index n = l.rows();
  IntMatrix gens = IntMatrix::Constant(n, 2 * n - 1, BigInt(0));
  for (Index k = 1; k < n; ++k) {
    gens(k, k - 1) = q.p;
    gens(0, k - 1) = -BigInt(q.p);
  }
  gens.rightCols(n) = l;
  q.lattice_generators = gens;
  q.lattice = std::make_shared<const ImageLattice>(gens);

  const auto& moduli = q.lattice->coordinate_moduli();
  std::vector<Index> positions;
  for (Index i = 0; i < n; ++i) {
    if (moduli[i] == BigInt(q.p)) {
      positions.push_back(i);
    } else if (!(moduli[i] == BigInt(1)) && !(i == n - 1 && moduli[i].is_zero())) {
      throw ConsistencyFailure("unexpected invariant factor " + moduli[i].str() + " of p Div^0 + Pr");
    }
  }
  q.dimension = positions.size();
  q.basis.resize(n, static_cast<Index>(positions.size()));
  for (std::size_t j = 0; j < positions.size(); ++j) {
    q.basis.col(static_cast<Index>(j)) = q.lattice->smith().U_inverse.col(positions[j]);
  }
  if (q.dimension != q.sylow.rank()) {
    throw ConsistencyFailure("dim C = " + std::to_string(q.dimension) + " but A has " +
                             std::to_string(q.sylow.rank()) + " cyclic factors");
  }
  return q;
}

std::size_t eigenspace_dim_C_projector(const SylowPModule& m, const Character& psi) {
  if (m.rank() == 0) return 0;
  return static_cast<std::size_t>(rank_mod_prime(projector(m, psi.reduction(), 1), BigInt(m.p)));
}

std::optional<std::size_t> eigenspace_dim_C_enumeration(const ElementaryQuotient& q, const PicardModule& pm,
                                                        const Character& psi, std::uint64_t budget) {
  const std::uint64_t p = q.p;
  const std::size_t dim = q.dimension;
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < dim; ++j) {
    if (total > budget / p) return std::nullopt;
    total *= p;
  }
  if (total > budget) return std::nullopt;
  if (dim == 0) return 0;

  // f_psi: e_psi mod p with coefficients in [0, p), acting through deck permutations.
  const GroupRingElement f = idempotent_mod(psi.reduction(), 1);
  const CyclicGroup& group = *pm.cover().group();
  std::vector<std::vector<VertexIndex>> perms;
  for (std::size_t k = 0; k < group.order(); ++k) perms.push_back(deck_permutation(pm.cover(), group.element(k)));

  const auto& moduli = q.lattice->coordinate_moduli();
  std::vector<Index> p_coords;
  for (Index i = 0; i < static_cast<Index>(moduli.size()); ++i) {
    if (moduli[i] == BigInt(q.p)) p_coords.push_back(i);
  }
  // Residues of (f_psi - 1) epsilon_j at the coordinates of modulus p.
  std::vector<std::vector<std::uint64_t>> columns(dim);
  const Index n = q.basis.rows();
  for (std::size_t j = 0; j < dim; ++j) {
    const IntVector eps = q.basis.col(static_cast<Index>(j));
    IntVector image = -eps;
    for (std::size_t k = 0; k < group.order(); ++k) {
      if (f[k].is_zero()) continue;
      for (Index w = 0; w < n; ++w) image(static_cast<Index>(perms[k][w])) += f[k] * eps(w);
    }
    const IntVector res = q.lattice->residues(image);
    for (Index i = 0; i < res.size(); ++i) {
      if (moduli[i].is_zero() && !res(i).is_zero()) throw ConsistencyFailure("f_psi changed the degree");
    }
    for (Index i : p_coords) columns[j].push_back(static_cast<std::uint64_t>(res(i).to_int64()));
  }

  // Odometer over lambda in F_p^dim; incrementing digit j (with or without wrap) adds column j.
  std::vector<std::uint64_t> lambda(dim, 0), sum(p_coords.size(), 0);
  std::uint64_t hits = 0;
  for (std::uint64_t step = 0; step < total; ++step) {
    bool zero = true;
    for (auto s : sum) zero = zero && s == 0;
    hits += zero ? 1 : 0;
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (sum[i] + columns[j][i]) % p;
      if (++lambda[j] < p) break;
      lambda[j] = 0;
    }
  }
  std::size_t log = 0;
  while (hits % p == 0 && hits > 1) {
    hits /= p;
    ++log;
  }
  if (hits != 1) throw ConsistencyFailure("fixed points of f_psi do not form a subspace");
  return log;
}

std::size_t eigenspace_dim_C(const ElementaryQuotient& q, const PicardModule& pm, const Character& psi,
                             std::uint64_t budget) {
  const std::size_t projected = eigenspace_dim_C_projector(q.sylow, psi);
  const auto enumerated = eigenspace_dim_C_enumeration(q, pm, psi, budget);
  if (enumerated && *enumerated != projected) {
    throw ConsistencyFailure("dim e_psi C: projector rank " + std::to_string(projected) + ", enumeration " +
                             std::to_string(*enumerated));
  }
  return projected;
}

TrivialCharacterCheck trivial_character_check(const SylowPModule& m, const SerreGraph& base, std::uint32_t p) {
  const BigInt kappa = spanning_tree_count(base);
  const BigInt kappa_p = pow(BigInt(p), p_valuation(kappa, BigInt(p)));
  const auto group = CyclicGroup::for_prime(p);
  const Character trivial = Character::p_adic(group, 0, std::max(1u, m.exponent));
  const BigInt order = eigenspace_order_A(m, trivial);
  return {order, kappa_p, order == kappa_p};
}

}  // namespace herbrand
