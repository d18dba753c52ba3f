#include "herbrand/padic.hpp"

#include <sstream>

namespace herbrand {

PAdicInt::PAdicInt(std::uint32_t p, unsigned precision, const BigInt& value)
    : p_(p), precision_(precision) {
  if (precision == 0) throw std::invalid_argument("p-adic precision must be at least 1");
  value_ = floor_mod(value, modulus());
}

BigInt PAdicInt::modulus() const { return pow(BigInt(p_), precision_); }

PAdicInt PAdicInt::truncate(unsigned precision) const {
  if (precision > precision_) throw InsufficientPrecision("cannot raise p-adic precision");
  return {p_, precision, value_};
}

std::vector<unsigned> PAdicInt::digits() const {
  std::vector<unsigned> out;
  BigInt x = value_;
  const BigInt p(p_);
  for (unsigned i = 0; i < precision_; ++i) {
    out.push_back(static_cast<unsigned>((x % p).to_int64()));
    x /= p;
  }
  return out;
}

void PAdicInt::align(const PAdicInt& o) {
  if (o.p_ != p_) throw GroupMismatch("p-adic integers for different primes");
  if (o.precision_ < precision_) {
    precision_ = o.precision_;
    value_ = floor_mod(value_, modulus());
  }
}

PAdicInt& PAdicInt::operator+=(const PAdicInt& o) {
  align(o);
  value_ = floor_mod(value_ + o.value_, modulus());
  return *this;
}

PAdicInt& PAdicInt::operator-=(const PAdicInt& o) {
  align(o);
  value_ = floor_mod(value_ - o.value_, modulus());
  return *this;
}

PAdicInt& PAdicInt::operator*=(const PAdicInt& o) {
  align(o);
  value_ = floor_mod(value_ * o.value_, modulus());
  return *this;
}

PAdicInt teichmuller(std::uint64_t a, std::uint32_t p, unsigned precision) {
  if (a % p == 0) throw std::domain_error("Teichmuller lift of a non-unit");
  const BigInt m = pow(BigInt(p), precision);
  BigInt x = static_cast<unsigned long long>(a % p);
  for (unsigned i = 0; i < precision; ++i) x = pow_mod(x, BigInt(p), m);
  return {p, precision, x};
}

unsigned valuation(const PAdicInt& x) {
  if (x.is_zero()) {
    throw PrecisionExhausted("value is 0 mod " + std::to_string(x.p()) + "^" + std::to_string(x.precision()));
  }
  return p_valuation(x.value(), BigInt(x.p()));
}

BigInt abs_p_inverse(const PAdicInt& x) { return pow(BigInt(x.p()), valuation(x)); }

namespace {

std::string superscript(unsigned k) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  const std::string s = std::to_string(k);
  std::string out;
  for (char c : s) out += digits[c - '0'];
  return out;
}

}  // namespace

std::string render_expansion(const PAdicInt& x) {
  std::ostringstream os;
  const auto digits = x.digits();
  bool first = true;
  for (unsigned k = 0; k < digits.size(); ++k) {
    if (digits[k] == 0) continue;
    if (!first) os << " + ";
    os << digits[k];
    if (k == 1) os << "·" << x.p();
    if (k > 1) os << "·" << x.p() << superscript(k);
    first = false;
  }
  if (first) os << "0";
  os << " + …";
  return os.str();
}

// ---------------------------------------------------------------------------

Character::Character(std::shared_ptr<const CyclicGroup> group, std::size_t exponent, Codomain codomain,
                     unsigned precision)
    : group_(std::move(group)), codomain_(codomain), precision_(precision) {
  if (!group_) throw std::invalid_argument("character without group");
  exponent_ = exponent % group_->order();
  if (codomain_ == Codomain::PrimeField) precision_ = 1;
  if (precision_ == 0) throw std::invalid_argument("character precision must be at least 1");
  const BigInt m = modulus();
  const BigInt e(static_cast<unsigned long long>(exponent_));
  values_.reserve(group_->order());
  for (std::size_t k = 0; k < group_->order(); ++k) {
    const std::uint32_t sigma = group_->element(k);
    const BigInt base = codomain_ == Codomain::PrimeField
                            ? BigInt(static_cast<unsigned long long>(sigma))
                            : teichmuller(sigma, group_->p(), precision_).value();
    values_.push_back(pow_mod(base, e, m));
  }
}

Character Character::mod_p(std::shared_ptr<const CyclicGroup> group, std::size_t exponent) {
  return {std::move(group), exponent, Codomain::PrimeField, 1};
}

Character Character::p_adic(std::shared_ptr<const CyclicGroup> group, std::size_t exponent, unsigned precision) {
  return {std::move(group), exponent, Codomain::PAdic, precision};
}

Character Character::contragredient() const {
  return {group_, (group_->order() - exponent_) % group_->order(), codomain_, precision_};
}

Character Character::with_precision(unsigned precision) const {
  return {group_, exponent_, codomain_, precision};
}

Character Character::reduction() const { return mod_p(group_, exponent_); }

BigInt Character::modulus() const { return pow(BigInt(group_->p()), precision_); }

PAdicInt character_value(const Character& psi, std::uint32_t sigma) {
  return {psi.group().p(), psi.precision(), psi.values_on_powers()[psi.group().exponent(sigma)]};
}

PAdicInt eval_character(const GroupRingElement& a, const Character& psi) {
  const std::size_t n = psi.group().order();
  if (a.order() != 0 && a.order() != n) {
    throw GroupMismatch("character of a group of order " + std::to_string(n) +
                        " applied to an element of order " + std::to_string(a.order()));
  }
  BigInt acc = 0;
  for (std::size_t k = 0; k < a.order(); ++k) acc += a.coefficients()[k] * psi.values_on_powers()[k];
  return {psi.group().p(), psi.precision(), acc};
}

IntMatrix eval_character(const GroupRingMatrix& m, const Character& psi) {
  return m.unaryExpr([&psi](const GroupRingElement& x) { return eval_character(x, psi).value(); });
}

GroupRingElement idempotent_mod(const Character& psi, unsigned k) {
  if (k == 0) throw std::invalid_argument("idempotent precision must be at least 1");
  if (psi.precision() < k) {
    throw InsufficientPrecision("character known to p^" + std::to_string(psi.precision()) +
                                ", idempotent requested mod p^" + std::to_string(k));
  }
  const std::size_t n = psi.group().order();
  const BigInt m = pow(BigInt(psi.group().p()), k);
  const BigInt inv_n = inverse_mod(BigInt(static_cast<unsigned long long>(n)), m);
  std::vector<BigInt> coeffs(n);
  for (std::size_t j = 0; j < n; ++j) {
    // coefficient of sigma^-1 = g^(n - j) is psi(g^j) / n
    coeffs[(n - j) % n] = floor_mod(inv_n * psi.values_on_powers()[j], m);
  }
  return GroupRingElement(std::move(coeffs));
}

std::vector<Character> all_characters(const std::shared_ptr<const CyclicGroup>& group, Codomain codomain,
                                      unsigned precision) {
  std::vector<Character> out;
  for (std::size_t i = 0; i < group->order(); ++i) out.emplace_back(group, i, codomain, precision);
  return out;
}

}  // namespace herbrand
