#include <doctest.h>

#include <random>

#include "herbrand/errors.hpp"
#include "herbrand/picard.hpp"
#include "support.hpp"

using namespace herbrand;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

BigInt order_A(const PicardModule& pm, const SylowPModule& s, std::size_t i) {
  return eigenspace_order_A(s, Character::p_adic(pm.cover().group(), i, std::max(1u, s.exponent)));
}

}  // namespace

TEST_CASE("Picard groups of the worked examples") {
  CHECK(picard_module(derive(test::example(1))).invariant_factors() == ints({3, 12}));
  CHECK(picard_module(derive(test::example(2))).invariant_factors() == ints({7, 420}));
  CHECK(picard_module(derive(test::example(3))).invariant_factors() ==
        ints({2, 2, 2, 2, 2, 2, 2, 2, 2, 242, 1210}));
  CHECK(picard_module(derive(test::example(4))).invariant_factors() == ints({11, 11, 1353, 27060}));
  CHECK(picard_module(derive(test::example1_literal())).invariant_factors() == ints({2, 2, 8}));
}

TEST_CASE("order of Pic^0 is the spanning tree count of the cover") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 30; ++t) {
    const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7}[rng() % 3];
    const DerivedCover c = derive(test::random_spec(rng, p, 3, 5));
    if (!c.connected()) continue;
    CHECK(picard_module(c).order() == spanning_tree_count(c.total()));
  }
}

TEST_CASE("deck action is a representation preserving principal divisors") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 20; ++t) {
    const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7}[rng() % 3];
    const DerivedCover c = derive(test::random_spec(rng, p, 3, 5));
    if (!c.connected()) continue;
    const PicardModule pm(c);
    const auto& mod = pm.invariant_factors();
    const auto r = static_cast<Index>(pm.rank());
    CHECK(pm.action(1) == reduce_rows(IntMatrix::Identity(r, r), mod));
    for (std::uint32_t a = 1; a < p; ++a) {
      for (std::uint32_t b = 1; b < p; ++b)
        CHECK(reduce_rows(pm.action(a) * pm.action(b), mod) == pm.action(a * b % p));
    }
    // Columns of L are principal.
    for (Index j = 0; j < pm.laplacian().cols(); ++j)
      CHECK(pm.coordinates(pm.laplacian().col(j)).isZero());
    // Generator j has coordinates e_j.
    for (Index j = 0; j < r; ++j) {
      IntVector e = IntVector::Zero(r);
      e(j) = 1;
      CHECK(pm.coordinates(pm.generators().col(j)) == reduce_rows(e, mod));
    }
    // The norm element kills nothing it shouldn't: N acts through the base, so
    // N * x is the pullback of a divisor on X, and (g - 1) N = 0.
    const std::size_t n = c.group()->order();
    const GroupRingElement gm1 = GroupRingElement::basis(n, 1) - GroupRingElement::one(n);
    CHECK(apply_group_ring(pm, gm1 * GroupRingElement::norm(n)).isZero());
  }
}

TEST_CASE("coordinates reject divisors of nonzero degree") {
  const PicardModule pm(derive(test::example(1)));
  IntVector d = IntVector::Zero(4);
  d(0) = 1;
  CHECK_THROWS(pm.coordinates(d));
}

TEST_CASE("Sylow p-subgroups") {
  const PicardModule p2(derive(test::example(2)));
  CHECK(sylow_p_module(p2, 5).exponents == std::vector<unsigned>{1});
  const PicardModule p3(derive(test::example(3)));
  const auto s3 = sylow_p_module(p3, 11);
  CHECK(s3.exponents == std::vector<unsigned>{2, 2});
  CHECK(s3.order() == 14641);
  CHECK(s3.exponent == 2);
  const PicardModule p4(derive(test::example(4)));
  const auto s4 = sylow_p_module(p4, 11);
  CHECK(s4.exponents == std::vector<unsigned>{1, 1, 1, 1});
  CHECK(s4.moduli() == ints({11, 11, 11, 11}));
  const PicardModule p1(derive(test::example(1)));
  CHECK(sylow_p_module(p1, 5).rank() == 0);
}

TEST_CASE("eigenspace orders multiply to the order of A") {
  struct Case {
    int example;
    std::uint32_t p;
    std::vector<BigInt> orders;
  };
  const std::vector<Case> cases{
      {2, 5, ints({1, 1, 5, 1})},
      {3, 11, ints({1, 121, 1, 1, 1, 1, 1, 1, 1, 121})},
      {4, 11, ints({1, 1, 1, 121, 1, 1, 1, 121, 1, 1})},
  };
  for (const auto& cs : cases) {
    const PicardModule pm(derive(test::example(cs.example)));
    const auto s = sylow_p_module(pm, cs.p);
    BigInt product = 1;
    for (std::size_t i = 0; i < cs.p - 1; ++i) {
      const BigInt o = order_A(pm, s, i);
      CHECK(o == cs.orders[i]);
      product *= o;
    }
    CHECK(product == s.order());
  }
}

TEST_CASE("projectors are orthogonal idempotents on A") {
  const PicardModule pm(derive(test::example(3)));
  const auto s = sylow_p_module(pm, 11);
  const auto moduli = s.moduli();
  const auto r = static_cast<Index>(s.rank());
  IntMatrix sum = IntMatrix::Zero(r, r);
  for (std::size_t i = 0; i < 10; ++i) {
    const IntMatrix e = projector(s, Character::p_adic(pm.cover().group(), i, 2), 2);
    CHECK(reduce_rows(e * e, moduli) == reduce_rows(e, moduli));
    sum += e;
    for (std::size_t j = 0; j < 10; ++j) {
      if (j == i) continue;
      const IntMatrix f = projector(s, Character::p_adic(pm.cover().group(), j, 2), 2);
      CHECK(reduce_rows(e * f, moduli).isZero());
    }
  }
  CHECK(reduce_rows(sum, moduli) == reduce_rows(IntMatrix::Identity(r, r), moduli));
  CHECK_THROWS_AS(eigenspace_order_A(s, Character::p_adic(pm.cover().group(), 1, 1)), InsufficientPrecision);
}

TEST_CASE("elementary quotient and its eigenspaces") {
  const PicardModule pm(derive(test::example(4)));
  const ElementaryQuotient q = elementary_quotient(pm);
  CHECK(q.dimension == 4);
  const auto group = pm.cover().group();
  std::size_t total = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    const Character psi = Character::mod_p(group, i);
    const std::size_t d = eigenspace_dim_C(q, pm, psi);
    CHECK(d == ((i == 3 || i == 7) ? 2u : 0u));
    CHECK(eigenspace_dim_C_enumeration(q, pm, psi, 1'000'000) == d);
    total += d;
  }
  CHECK(total == q.dimension);
  CHECK_FALSE(eigenspace_dim_C_enumeration(q, pm, Character::mod_p(group, 3), 100).has_value());
  // p times any divisor of degree zero lies in M.
  IntVector d = IntVector::Zero(static_cast<Index>(pm.cover().total().num_vertices()));
  d(0) = 11;
  d(5) = -11;
  CHECK(q.contains(d));
  CHECK_FALSE(q.contains(q.basis.col(0)));
}

TEST_CASE("trivial eigenspace is the p-part of the base tree count") {
  SerreGraph c3(3);
  c3.add_edge(0, 1);
  c3.add_edge(1, 2);
  c3.add_edge(2, 0);
  const auto c = derive(VoltageSpec::from_orientation(c3, 3, {1, 1, 2}));
  const PicardModule pm(c);
  CHECK(pm.invariant_factors() == ints({6}));
  const auto check = trivial_character_check(sylow_p_module(pm, 3), c3, 3);
  CHECK(check.eigenspace_order == 3);
  CHECK(check.kappa_p == 3);
  CHECK(check.holds);
  for (int k = 1; k <= 4; ++k) {
    const PicardModule e(derive(test::example(k)));
    CHECK(trivial_character_check(sylow_p_module(e, e.cover().p()), e.cover().base(), e.cover().p()).holds);
  }
}

TEST_CASE("disconnected covers have no Picard module") {
  CHECK_THROWS_AS(picard_module(derive(test::spec(5, 1, {{0, 0, 1}}))), DisconnectedCover);
}
