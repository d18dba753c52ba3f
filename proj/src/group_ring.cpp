#include "herbrand/group_ring.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace herbrand {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  std::uint64_t x = a, k = 1;
  while (x != 1) {
    x = x * a % p;
    ++k;
  }
  return k;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  for (std::uint64_t g = 1; g < p; ++g) {
    if (multiplicative_order(g, p) == p - 1) return g;
  }
  throw std::logic_error("no primitive root");
}

CyclicGroup::CyclicGroup(std::uint32_t p, std::uint32_t generator) : p_(p), generator_(generator) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
  if (generator % p == 0 || multiplicative_order(generator, p) != p - 1) {
    throw std::invalid_argument(std::to_string(generator) + " does not generate F_" + std::to_string(p) + "^x");
  }
  powers_.resize(p - 1);
  logs_.assign(p, 0);
  std::uint64_t x = 1;
  for (std::size_t k = 0; k + 1 < p; ++k) {
    powers_[k] = static_cast<std::uint32_t>(x);
    logs_[x] = k;
    x = x * generator % p;
  }
}

std::shared_ptr<const CyclicGroup> CyclicGroup::for_prime(std::uint32_t p) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::shared_ptr<const CyclicGroup>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[p];
  if (!slot) {
    if (p < 3 || !is_prime(p)) {
      cache.erase(p);
      throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    }
    slot = std::make_shared<const CyclicGroup>(p, static_cast<std::uint32_t>(smallest_primitive_root(p)));
  }
  return slot;
}

std::size_t CyclicGroup::exponent(std::uint32_t sigma) const {
  if (sigma % p_ == 0) throw std::domain_error("0 is not in F_p^x");
  return logs_[sigma % p_];
}

std::uint32_t CyclicGroup::multiply(std::uint32_t a, std::uint32_t b) const {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
}

std::uint32_t CyclicGroup::inverse(std::uint32_t a) const {
  return element(order() - exponent(a));
}

// ---------------------------------------------------------------------------

GroupRingElement::GroupRingElement(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {}

GroupRingElement GroupRingElement::zero(std::size_t order) {
  return GroupRingElement(std::vector<BigInt>(order, BigInt(0)));
}

GroupRingElement GroupRingElement::one(std::size_t order) { return basis(order, 0); }

GroupRingElement GroupRingElement::basis(std::size_t order, std::size_t k) {
  if (order == 0) throw std::invalid_argument("group order must be positive");
  auto e = zero(order);
  e.coeffs_[k % order] = 1;
  return e;
}

GroupRingElement GroupRingElement::norm(std::size_t order) {
  return GroupRingElement(std::vector<BigInt>(order, BigInt(1)));
}

BigInt GroupRingElement::operator[](std::size_t k) const {
  return coeffs_.empty() ? BigInt(0) : coeffs_.at(k);
}

bool GroupRingElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::size_t GroupRingElement::common_order(const GroupRingElement& o) const {
  if (order() != 0 && o.order() != 0 && order() != o.order()) {
    throw GroupMismatch("group ring elements of orders " + std::to_string(order()) + " and " +
                        std::to_string(o.order()));
  }
  return order() != 0 ? order() : o.order();
}

void GroupRingElement::adopt(std::size_t order) {
  if (coeffs_.empty() && order != 0) coeffs_.assign(order, BigInt(0));
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  adopt(common_order(o));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  adopt(common_order(o));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const GroupRingElement& o) {
  const std::size_t n = common_order(o);
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.assign(n, BigInt(0));
    return *this;
  }
  std::vector<BigInt> out(n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      const std::size_t k = i + j < n ? i + j : i + j - n;
      out[k] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.order() == b.order()) return a.coeffs_ == b.coeffs_;
  if (a.order() == 0) return b.is_zero();
  if (b.order() == 0) return a.is_zero();
  return false;
}

std::ostream& operator<<(std::ostream& os, const GroupRingElement& a) {
  bool first = true;
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    const BigInt& c = a.coeffs_[k];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    os << abs(c);
    if (k > 0) os << "*g^" << k;
    first = false;
  }
  if (first) os << "0";
  return os;
}

GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b) { return a * b; }

GroupRingElement involution(const GroupRingElement& a) {
  const std::size_t n = a.order();
  if (n == 0) return a;
  std::vector<BigInt> out(n);
  for (std::size_t k = 0; k < n; ++k) out[(n - k) % n] = a.coefficients()[k];
  return GroupRingElement(std::move(out));
}

BigInt augmentation(const GroupRingElement& a) {
  BigInt s = 0;
  for (const auto& c : a.coefficients()) s += c;
  return s;
}

GroupRingElement reduce_mod(const GroupRingElement& a, const BigInt& m) {
  std::vector<BigInt> out;
  out.reserve(a.order());
  for (const auto& c : a.coefficients()) out.push_back(floor_mod(c, m));
  return GroupRingElement(std::move(out));
}

// ---------------------------------------------------------------------------

GroupRingPolynomial::GroupRingPolynomial(std::vector<GroupRingElement> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

GroupRingPolynomial::GroupRingPolynomial(GroupRingElement c) : coeffs_{std::move(c)} { trim(); }

GroupRingPolynomial GroupRingPolynomial::one(std::size_t order) {
  return GroupRingPolynomial(GroupRingElement::one(order));
}

GroupRingPolynomial GroupRingPolynomial::monomial(GroupRingElement c, std::size_t k) {
  std::vector<GroupRingElement> coeffs(k + 1);
  coeffs[k] = std::move(c);
  return GroupRingPolynomial(std::move(coeffs));
}

GroupRingElement GroupRingPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : GroupRingElement();
}

GroupRingElement GroupRingPolynomial::evaluate(const BigInt& u) const {
  GroupRingElement acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= u;
    acc += *it;
  }
  return acc;
}

void GroupRingPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GroupRingPolynomial& GroupRingPolynomial::operator+=(const GroupRingPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

GroupRingPolynomial& GroupRingPolynomial::operator-=(const GroupRingPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

GroupRingPolynomial& GroupRingPolynomial::operator*=(const GroupRingPolynomial& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<GroupRingElement> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

GroupRingPolynomial GroupRingPolynomial::operator-() const {
  GroupRingPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

GroupRingPolynomial involution(const GroupRingPolynomial& f) {
  std::vector<GroupRingElement> out;
  for (const auto& c : f.coefficients()) out.push_back(involution(c));
  return GroupRingPolynomial(std::move(out));
}

GroupRingMatrix involution(const GroupRingMatrix& m) {
  return m.unaryExpr([](const GroupRingElement& x) { return involution(x); });
}

GroupRingElement gr_det(const GroupRingMatrix& m, std::size_t order) {
  GroupRingElement det = cofactor_determinant(m, GroupRingElement::one(order));
  if (det.order() == 0) det = GroupRingElement::zero(order);
  return det;
}

GroupRingPolynomial gr_det(const GroupRingPolynomialMatrix& m, std::size_t order) {
  return cofactor_determinant(m, GroupRingPolynomial::one(order));
}

}  // namespace herbrand
