#include "u3alg/monomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace u3alg {

Ring::Ring(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) throw std::invalid_argument("Ring: names/weights size mismatch");
  for (int w : weights_)
    if (w <= 0) throw std::invalid_argument("Ring: weights must be positive");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("Ring: duplicate variable " + names_[i]);
}

std::size_t Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw std::out_of_range("Ring: unknown variable '" + std::string(name) + "'");
}

bool Ring::has(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights) {
  static std::mutex mu;
  static std::map<std::pair<std::vector<std::string>, std::vector<int>>, RingPtr> registry;
  std::lock_guard lock(mu);
  auto key = std::make_pair(names, weights);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto ring = std::make_shared<const Ring>(std::move(names), std::move(weights));
  registry.emplace(std::move(key), ring);
  return ring;
}

RingPtr rank_ring(int n) {
  if (n < 2) throw std::invalid_argument("rank_ring: N must be >= 2");
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int r = 2; r <= n; ++r) {
    names.push_back("a" + std::to_string(r));
    weights.push_back(2 * r - 2);
  }
  for (int r = 2; r <= n; ++r) {
    names.push_back("b" + std::to_string(r));
    weights.push_back(2 * r);
  }
  return make_ring(std::move(names), std::move(weights));
}

RingPtr quotient_ring3() { return make_ring({"a2", "a3", "b2"}, {2, 4, 4}); }

RingPtr alpha_ring() { return make_ring({"a2", "a3"}, {2, 4}); }

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Monomial::Monomial(const Ring& ring) : exps_(ring.size(), 0), ring_(&ring) {}

Monomial::Monomial(const Ring& ring, std::vector<Exp> exps) : exps_(std::move(exps)), ring_(&ring) {
  if (exps_.size() != ring.size()) throw std::invalid_argument("Monomial: exponent count does not match ring");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] < 0) throw std::invalid_argument("Monomial: negative exponent");
    degree_ += static_cast<long>(exps_[i]) * ring.weight(i);
  }
}

Monomial Monomial::variable(const Ring& ring, std::size_t index, Exp power) {
  std::vector<Exp> e(ring.size(), 0);
  e.at(index) = power;
  return Monomial(ring, std::move(e));
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exp e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    q.exps_[i] -= exps_[i];
    if (q.exps_[i] < 0) throw std::logic_error("Monomial::quotient_of: not divisible");
  }
  q.degree_ = other.degree_ - degree_;
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l(*this);
  l.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    l.exps_[i] = std::max(exps_[i], other.exps_[i]);
    l.degree_ += static_cast<long>(l.exps_[i]) * ring_->weight(i);
  }
  return l;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.exps_.size() != b.exps_.size()) throw std::invalid_argument("Monomial: mismatched variable sets");
  Monomial m(a);
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] += b.exps_[i];
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b) {
  if (a.exps_.size() != b.exps_.size() || (a.ring_ && b.ring_ && a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)))
    throw std::invalid_argument("monomial_compare: mismatched variable sets");
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  for (std::size_t i = a.exps_.size(); i-- > 0;) {
    if (a.exps_[i] != b.exps_[i])
      return a.exps_[i] < b.exps_[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string(const Ring& ring) const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.name(i);
    if (exps_[i] != 1) s += "^" + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace u3alg
