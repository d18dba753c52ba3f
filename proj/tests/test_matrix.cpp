#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "herbrand/matrix.hpp"

using namespace herbrand;

namespace {

// Leibniz expansion: independent of elimination.
BigInt leibniz(const IntMatrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    BigInt term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

IntMatrix random_matrix(std::mt19937_64& rng, Index n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("Bareiss determinant matches the Leibniz formula") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const Index n = 1 + static_cast<Index>(rng() % 6);
    const IntMatrix m = random_matrix(rng, n, -3, 3);
    CHECK(determinant(m) == leibniz(m));
  }
  CHECK(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("local determinant agrees with the integer determinant reduced") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 300; ++t) {
    const Index n = 1 + static_cast<Index>(rng() % 5);
    const IntMatrix m = random_matrix(rng, n, -20, 20);
    const unsigned k = 1 + static_cast<unsigned>(rng() % 4);
    const BigInt p = std::vector<int>{3, 5, 7}[rng() % 3];
    CHECK(determinant_mod_prime_power(m, p, k) == floor_mod(determinant(m), pow(p, k)));
  }
}

TEST_CASE("rank over F_p") {
  IntMatrix m(3, 3);
  m << 1, 2, 3, 2, 4, 6, 0, 5, 5;
  CHECK(rank_mod_prime(m, BigInt(7)) == 2);
  CHECK(rank_mod_prime(m, BigInt(5)) == 1);
  CHECK(rank_mod_prime(IntMatrix::Constant(2, 4, BigInt(3)), BigInt(3)) == 0);
}

TEST_CASE("reduce_mod lands in [0, m)") {
  IntMatrix m(1, 3);
  m << -1, 5, 12;
  const IntMatrix r = reduce_mod(m, BigInt(5));
  CHECK(r(0, 0) == 4);
  CHECK(r(0, 1) == 0);
  CHECK(r(0, 2) == 2);
}
