#include <doctest.h>

#include "herbrand/errors.hpp"
#include "herbrand/padic.hpp"

using namespace herbrand;

TEST_CASE("Teichmuller lifts are roots of unity congruent to their residue") {
  CHECK(teichmuller(2, 5, 2).value() == 7);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (unsigned n = 1; n <= 8; ++n) {
      for (std::uint64_t a = 1; a < p; ++a) {
        const PAdicInt w = teichmuller(a, p, n);
        CHECK(w.value() % p == a);
        CHECK(pow_mod(w.value(), BigInt(p - 1), w.modulus()) == 1);
      }
    }
  }
  CHECK_THROWS(teichmuller(0, 5, 3));
}

TEST_CASE("Teichmuller is multiplicative") {
  const std::uint32_t p = 13;
  for (std::uint64_t a = 1; a < p; ++a)
    for (std::uint64_t b = 1; b < p; ++b)
      CHECK(teichmuller(a, p, 6) * teichmuller(b, p, 6) == teichmuller(a * b % p, p, 6));
}

TEST_CASE("p-adic arithmetic, truncation and digits") {
  const PAdicInt x(11, 5, BigInt(2 * 121 + 7 * 1331 + 9 * 14641));
  CHECK(x.digits() == std::vector<unsigned>{0, 0, 2, 7, 9});
  CHECK(valuation(x) == 2);
  CHECK(abs_p_inverse(x) == 121);
  CHECK(render_expansion(x) == "2·11² + 7·11³ + 9·11⁴ + …");
  CHECK(x.truncate(2).is_zero());
  CHECK_THROWS_AS(valuation(x.truncate(2)), PrecisionExhausted);
  const PAdicInt y(11, 3, BigInt(-1));
  CHECK(y.value() == 1330);
  CHECK((x + y).precision() == 3);  // mixed precision drops to the smaller
  CHECK_THROWS(PAdicInt(5, 2, 1) + PAdicInt(7, 2, 1));
}

TEST_CASE("character values and contragredients") {
  const auto group = CyclicGroup::for_prime(7);
  const Character psi = Character::p_adic(group, 2, 4);
  const Character dual = psi.contragredient();
  CHECK(dual.exponent() == 4);
  CHECK(Character::mod_p(group, 0).contragredient().exponent() == 0);
  for (std::uint32_t s = 1; s < 7; ++s) {
    CHECK((character_value(psi, s) * character_value(dual, s)).value() == 1);
    const PAdicInt gamma = character_value(Character::mod_p(group, 1), s);
    CHECK(gamma.value() == s);
  }
  CHECK(psi.reduction().codomain() == Codomain::PrimeField);
  CHECK(psi.reduction().precision() == 1);
}

TEST_CASE("eigen-idempotents are orthogonal and sum to one") {
  for (std::uint32_t p : {5u, 7u, 11u}) {
    const auto group = CyclicGroup::for_prime(p);
    const std::size_t n = group->order();
    const unsigned k = 3;
    const BigInt m = pow(BigInt(p), k);
    const auto chars = all_characters(group, Codomain::PAdic, k);
    GroupRingElement total = GroupRingElement::zero(n);
    for (const auto& a : chars) {
      const GroupRingElement ea = idempotent_mod(a, k);
      total += ea;
      CHECK(reduce_mod(ea * ea, m) == ea);
      for (const auto& b : chars) {
        if (b.exponent() == a.exponent()) continue;
        CHECK(reduce_mod(ea * idempotent_mod(b, k), m).is_zero());
      }
      // psi(e_psi) = 1 and chi(e_psi) = 0 for chi != psi
      for (const auto& b : chars) {
        CHECK(eval_character(ea, b).value() == (a.exponent() == b.exponent() ? 1 : 0));
      }
    }
    CHECK(reduce_mod(total, m) == GroupRingElement::one(n));
  }
}
