#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "u3alg/monomial.hpp"
#include "u3alg/poly.hpp"

namespace u3alg {

// Monomial ideal kept by its minimal generators, sorted descending.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool contains(const Monomial& m) const;
  // Index of the first variable with no pure power among the generators, if any.
  std::optional<std::size_t> unbounded_variable() const;

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

struct StandardMonomialCensus {
  bool finite = false;
  std::vector<Monomial> monomials;  // descending; empty when infinite
  std::size_t count = 0;
  std::string witness;  // variable along which the complement is unbounded
};

StandardMonomialCensus standard_monomials(const MonomialIdeal& lt);

struct ContainmentEntry {
  Monomial monomial;
  bool contained = false;
};
struct ContainmentReport {
  std::vector<ContainmentEntry> entries;
  bool all_contained = true;
};

ContainmentReport lt_contains(const MonomialIdeal& lt, const MonomialIdeal& target);

enum class LatticeMode { closed_form, brute_force };
// Number of (i, j) >= 0 with 2i + 3j < n.
long lattice_count(long n, LatticeMode mode);

struct BuchbergerOptions {
  std::optional<long> degree_cap;  // abort when a pair of higher degree comes up
};

class DegreeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class F>
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Poly<F>> generators;
  std::vector<Poly<F>> basis;  // reduced, monic, ascending leading monomials
  MonomialIdeal lt_ideal;
};

// Normal form of p modulo `basis` (every term reduced).
template <class F>
Poly<F> reduce(Poly<F> p, const std::vector<Poly<F>>& basis) {
  std::vector<typename Poly<F>::Term> rem;
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const F lc = p.leading_coeff();
    const Poly<F>* div = nullptr;
    for (const auto& g : basis)
      if (!g.is_zero() && g.leading_monomial().divides(lm)) {
        div = &g;
        break;
      }
    if (div) {
      const Monomial q = div->leading_monomial().quotient_of(lm);
      p.axpy(-(lc / div->leading_coeff()), &q, *div);
    } else {
      rem.emplace_back(lm, lc);
      p -= Poly<F>::term(p.ring(), lm, lc);
    }
  }
  return Poly<F>::from_terms(p.ring(), std::move(rem));
}

template <class F>
Poly<F> s_polynomial(const Poly<F>& f, const Poly<F>& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const Monomial mf = f.leading_monomial().quotient_of(l);
  const Monomial mg = g.leading_monomial().quotient_of(l);
  Poly<F> s(f.ring());
  s.axpy(inverse(f.leading_coeff()), &mf, f);
  s.axpy(-inverse(g.leading_coeff()), &mg, g);
  return s;
}

namespace groebner_detail {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

inline bool pair_before(const Pair& a, const Pair& b) {
  const auto c = compare(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
}

}  // namespace groebner_detail

// Reduced Groebner basis. Generators are sorted canonically first, so equal
// inputs in any order give the identical basis.
template <class F>
GroebnerBasis<F> buchberger(std::vector<Poly<F>> gens, const BuchbergerOptions& opts = {}) {
  using groebner_detail::Pair;
  std::erase_if(gens, [](const Poly<F>& p) { return p.is_zero(); });
  if (gens.empty()) throw std::invalid_argument("buchberger: no nonzero generators");
  const RingPtr ring = gens.front().ring();
  for (const auto& g : gens)
    if (!same_ring(g.ring(), ring)) throw std::invalid_argument("buchberger: generators in different rings");

  GroebnerBasis<F> out;
  out.ring = ring;
  out.generators = gens;

  std::sort(gens.begin(), gens.end(), [](const Poly<F>& a, const Poly<F>& b) {
    const auto c = compare(a.leading_monomial(), b.leading_monomial());
    if (c != 0) return c < 0;
    return a.to_string() < b.to_string();
  });

  std::vector<Poly<F>> polys;      // every element ever added
  std::vector<std::size_t> active;  // indices of the current basis
  std::vector<Pair> pairs;

  // Gebauer-Moeller update with a new element h.
  auto update = [&](std::size_t h) {
    const Monomial& lh = polys[h].leading_monomial();
    std::vector<Pair> c;
    for (std::size_t g : active) c.push_back({g, h, lh.lcm(polys[g].leading_monomial())});
    std::vector<Pair> d;
    while (!c.empty()) {
      Pair p = std::move(c.back());
      c.pop_back();
      const bool coprime = lh.coprime(polys[p.i].leading_monomial());
      auto divides_p = [&](const Pair& q) { return q.lcm.divides(p.lcm); };
      if (coprime || (std::none_of(c.begin(), c.end(), divides_p) && std::none_of(d.begin(), d.end(), divides_p)))
        d.push_back(std::move(p));
    }
    std::vector<Pair> e;
    for (auto& p : d)
      if (!lh.coprime(polys[p.i].leading_monomial())) e.push_back(std::move(p));
    std::erase_if(pairs, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      const Monomial l1 = polys[p.i].leading_monomial().lcm(lh);
      const Monomial l2 = polys[p.j].leading_monomial().lcm(lh);
      return !(l1 == p.lcm) && !(l2 == p.lcm);
    });
    for (auto& p : e) pairs.push_back(std::move(p));
    std::erase_if(active, [&](std::size_t g) { return lh.divides(polys[g].leading_monomial()); });
    active.push_back(h);
  };

  auto current = [&] {
    std::vector<Poly<F>> b;
    b.reserve(active.size());
    for (std::size_t g : active) b.push_back(polys[g]);
    return b;
  };

  for (auto& g : gens) {
    Poly<F> r = reduce(g, current()).monic();
    if (r.is_zero()) continue;
    polys.push_back(std::move(r));
    update(polys.size() - 1);
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), groebner_detail::pair_before);
    Pair p = *best;
    pairs.erase(best);
    if (opts.degree_cap && p.lcm.degree() > *opts.degree_cap)
      throw DegreeCapExceeded("buchberger: S-pair of degree " + std::to_string(p.lcm.degree()) +
                              " exceeds the degree cap " + std::to_string(*opts.degree_cap));
    Poly<F> r = reduce(s_polynomial(polys[p.i], polys[p.j]), current()).monic();
    if (r.is_zero()) continue;
    polys.push_back(std::move(r));
    update(polys.size() - 1);
  }

  // Minimal basis, then inter-reduce.
  std::vector<Poly<F>> minimal = current();
  std::sort(minimal.begin(), minimal.end(),
            [](const Poly<F>& a, const Poly<F>& b) { return compare(a.leading_monomial(), b.leading_monomial()) < 0; });
  std::vector<Poly<F>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Monomial lm = minimal[i].leading_monomial();
    Poly<F> tail = minimal[i] - Poly<F>::term(ring, lm, minimal[i].leading_coeff());
    reduced.push_back((Poly<F>::term(ring, lm, minimal[i].leading_coeff()) + reduce(tail, others)).monic());
  }
  out.basis = std::move(reduced);
  std::vector<Monomial> lts;
  for (const auto& b : out.basis) lts.push_back(b.leading_monomial());
  out.lt_ideal = MonomialIdeal(ring, std::move(lts));
  return out;
}

template <class F>
StandardMonomialCensus standard_monomials(const GroebnerBasis<F>& gb) {
  return standard_monomials(gb.lt_ideal);
}

template <class F>
ContainmentReport lt_contains(const GroebnerBasis<F>& gb, const MonomialIdeal& target) {
  return lt_contains(gb.lt_ideal, target);
}

template <class F>
bool in_ideal(const Poly<F>& p, const GroebnerBasis<F>& gb) {
  return reduce(p, gb.basis).is_zero();
}

}  // namespace u3alg
