#include <doctest.h>

#include <random>

#include "herbrand/errors.hpp"
#include "herbrand/group_ring.hpp"
#include "herbrand/picard.hpp"
#include "herbrand/serre_graph.hpp"
#include "herbrand/snf.hpp"

using namespace herbrand;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, Index r, Index c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// gcd of all k x k minors, the k-th determinantal divisor.
BigInt determinantal_divisor(const IntMatrix& a, Index k) {
  BigInt g = 0;
  const auto rows = static_cast<unsigned>(a.rows()), cols = static_cast<unsigned>(a.cols());
  for (unsigned rm = 0; rm < (1u << rows); ++rm) {
    if (__builtin_popcount(rm) != k) continue;
    for (unsigned cm = 0; cm < (1u << cols); ++cm) {
      if (__builtin_popcount(cm) != k) continue;
      IntMatrix minor(k, k);
      Index i = 0;
      for (unsigned r = 0; r < rows; ++r) {
        if (!(rm >> r & 1)) continue;
        Index j = 0;
        for (unsigned c = 0; c < cols; ++c)
          if (cm >> c & 1) minor(i, j++) = a(r, c);
        ++i;
      }
      g = gcd(g, determinant(minor));
    }
  }
  return g;
}

IntMatrix adjugate(const IntMatrix& a) {
  const Index n = a.rows();
  IntMatrix adj(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (Index r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (Index c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      adj(i, j) = ((i + j) % 2 ? -1 : 1) * determinant(minor);
    }
  }
  return adj;
}

}  // namespace

TEST_CASE("small Smith forms") {
  IntMatrix a(2, 2);
  a << 2, 0, 0, 3;
  CHECK(smith_normal_form(a).diagonal() == std::vector<BigInt>{1, 6});
  const auto z = smith_normal_form(IntMatrix::Zero(2, 3));
  CHECK(z.rank() == 0);
  CHECK(z.diagonal() == std::vector<BigInt>{0, 0});
  SerreGraph c3(3);
  c3.add_edge(0, 1);
  c3.add_edge(1, 2);
  c3.add_edge(2, 0);
  CHECK(smith_normal_form(laplacian_matrix(c3)).diagonal() == std::vector<BigInt>{1, 3, 0});
  const auto coker = cokernel(laplacian_matrix(c3));
  CHECK(coker.invariant_factors == std::vector<BigInt>{3});
  CHECK(coker.free_rank == 1);
  CHECK(smith_normal_form(IntMatrix(0, 0)).rank() == 0);
}

TEST_CASE("Smith invariants against determinantal divisors") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const Index r = 1 + static_cast<Index>(rng() % 4), c = 1 + static_cast<Index>(rng() % 4);
    const IntMatrix a = random_matrix(rng, r, c, 6);
    const auto s = smith_normal_form(a);
    CHECK_NOTHROW(check_decomposition(a, s));
    const auto d = s.diagonal();
    BigInt running = 1;
    for (Index k = 1; k <= std::min(r, c); ++k) {
      running *= d[static_cast<std::size_t>(k - 1)];
      CHECK(running == determinantal_divisor(a, k));
    }
  }
}

TEST_CASE("check_decomposition rejects tampered factors") {
  IntMatrix a(2, 2);
  a << 4, 6, 2, 8;
  auto s = smith_normal_form(a);
  s.D(1, 1) += 1;
  CHECK_THROWS_AS(check_decomposition(a, s), ConsistencyFailure);
}

TEST_CASE("image membership against the adjugate criterion") {
  std::mt19937_64 rng(32);
  int hits = 0;
  for (int t = 0; t < 200; ++t) {
    const Index n = 1 + static_cast<Index>(rng() % 3);
    const IntMatrix a = random_matrix(rng, n, n, 4);
    const BigInt det = determinant(a);
    if (det.is_zero()) continue;
    const IntMatrix adj = adjugate(a);
    for (int s = 0; s < 5; ++s) {
      const IntVector x = random_matrix(rng, n, 1, 8);
      const IntVector y = adj * x;  // A^-1 x = y / det
      bool integral = true;
      for (Index i = 0; i < n; ++i) integral = integral && (y(i) % det).is_zero();
      hits += integral;
      CHECK(image_membership(a, x) == integral);
      CHECK(ImageLattice(a).contains(x) == integral);
    }
  }
  CHECK(hits > 0);
  CHECK_THROWS_AS(image_membership(IntMatrix::Identity(2, 2), IntVector::Zero(3)), DimensionMismatch);
}

TEST_CASE("modulus joins p Z^n to the image") {
  IntMatrix a(2, 1);
  a << 3, 6;
  IntVector x(2);
  x << 1, 2;
  CHECK_FALSE(image_membership(a, x));
  CHECK(image_membership(a, x, BigInt(5)));  // 1 = 3 * 2 mod 5 and 2 = 6 * 2 mod 5
  CHECK_FALSE(image_membership(a, x, BigInt(3)));
  const ImageLattice lat(a, BigInt(9));
  CHECK(lat.coordinate_moduli() == std::vector<BigInt>{3, 9});
  CHECK(lat.residues(x).isZero() == lat.contains(x));
}

TEST_CASE("cokernel generators have the advertised orders") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 100; ++t) {
    const Index n = 2 + static_cast<Index>(rng() % 3);
    const IntMatrix a = random_matrix(rng, n, n, 5);
    const auto coker = cokernel(a);
    for (std::size_t j = 0; j < coker.invariant_factors.size(); ++j) {
      const BigInt d = coker.invariant_factors[j];
      const IntVector g = coker.torsion_generators.col(static_cast<Index>(j));
      CHECK(image_membership(a, IntVector(d * g)));
      for (BigInt k = 1; k < d; k += 1) {
        if ((d % k).is_zero()) CHECK_FALSE(image_membership(a, IntVector(k * g)));
      }
    }
  }
}

TEST_CASE("local Smith valuations match the p-part of the integral form") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 300; ++t) {
    const Index r = 1 + static_cast<Index>(rng() % 5), c = 1 + static_cast<Index>(rng() % 5);
    const IntMatrix a = random_matrix(rng, r, c, 30);
    const BigInt p = std::vector<int>{2, 3, 5}[rng() % 3];
    const unsigned k = 1 + static_cast<unsigned>(rng() % 4);
    std::vector<unsigned> expected;
    for (const BigInt& d : smith_normal_form(a).diagonal())
      expected.push_back(d.is_zero() ? k : std::min(k, p_valuation(d, p)));
    std::sort(expected.begin(), expected.end());
    CHECK(local_smith_valuations(a, p, k) == expected);
  }
}

TEST_CASE("matrix-tree theorem through the cokernel") {
  SerreGraph k4(4);
  for (VertexIndex i = 0; i < 4; ++i)
    for (VertexIndex j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  CHECK(spanning_tree_count(k4) == 16);
  CHECK(cokernel(laplacian_matrix(k4)).torsion_order() == 16);
  CHECK(cokernel(laplacian_matrix(k4)).invariant_factors == std::vector<BigInt>{4, 4});
  std::mt19937_64 rng(35);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 6;
    SerreGraph g(n);
    for (VertexIndex v = 1; v < n; ++v) g.add_edge(rng() % v, v);
    for (std::size_t extra = rng() % 6; extra > 0; --extra) g.add_edge(rng() % n, rng() % n);
    const auto coker = cokernel(laplacian_matrix(g));
    CHECK(coker.free_rank == 1);
    CHECK(coker.torsion_order() == spanning_tree_count(g));
  }
}
