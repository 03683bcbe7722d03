#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace u3alg {

// Ordered variable list with positive integer weights. The monomial order
// is weighted-degree first, then reverse lexicographic with respect to this
// variable sequence.
class Ring {
 public:
  Ring(std::vector<std::string> names, std::vector<int> weights);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  // Throws std::out_of_range for unknown names.
  std::size_t index_of(std::string_view name) const;
  bool has(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using RingPtr = std::shared_ptr<const Ring>;

// Rings are interned: equal (names, weights) yield the same instance, which
// lives for the whole program. The registry is mutex-guarded.
RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights);

// alpha_2..alpha_N (weights 2r-2) then beta_2..beta_N (weights 2r), named
// a2.. and b2..
RingPtr rank_ring(int n);
// (a2, a3, b2) with weights (2, 4, 4).
RingPtr quotient_ring3();
// (a2, a3) with weights (2, 4).
RingPtr alpha_ring();

bool same_ring(const RingPtr& a, const RingPtr& b);

class Monomial {
 public:
  using Exp = std::int32_t;

  Monomial() = default;
  // The unit monomial of `ring`.
  explicit Monomial(const Ring& ring);
  Monomial(const Ring& ring, std::vector<Exp> exps);

  static Monomial variable(const Ring& ring, std::size_t index, Exp power = 1);

  std::size_t size() const { return exps_.size(); }
  Exp operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exp>& exponents() const { return exps_; }
  const Ring* ring() const { return ring_; }
  long degree() const { return degree_; }
  bool is_one() const;

  bool divides(const Monomial& other) const;
  // Requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  // Weighted degree first; at equal degree the monomial whose right-most
  // differing exponent is smaller is the larger one.
  friend std::strong_ordering compare(const Monomial& a, const Monomial& b);

  std::string to_string(const Ring& ring) const;

 private:
  std::vector<Exp> exps_;
  long degree_ = 0;
  const Ring* ring_ = nullptr;  // interned by make_ring, never freed
};

// Strict "a > b" predicate; sorts containers with the largest monomial first.
struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

}  // namespace u3alg
