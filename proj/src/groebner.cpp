#include "u3alg/groebner.hpp"

namespace u3alg {

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return compare(a, b) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Ascending order means a divisor always precedes its multiples.
  for (auto& m : gens) {
    if (m.size() != ring_->size()) throw std::invalid_argument("MonomialIdeal: generator from a different ring");
    if (!contains(m)) gens_.push_back(std::move(m));
  }
  std::reverse(gens_.begin(), gens_.end());
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::optional<std::size_t> MonomialIdeal::unbounded_variable() const {
  for (std::size_t v = 0; v < ring_->size(); ++v) {
    const bool bounded = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) {
      for (std::size_t u = 0; u < g.size(); ++u)
        if ((u == v) != (g[u] > 0)) return false;
      return true;
    });
    if (!bounded) return v;
  }
  return std::nullopt;
}

StandardMonomialCensus standard_monomials(const MonomialIdeal& lt) {
  StandardMonomialCensus census;
  const Ring& ring = *lt.ring();
  if (auto v = lt.unbounded_variable()) {
    census.witness = ring.name(*v);
    return census;
  }
  census.finite = true;
  std::vector<Monomial::Exp> bound(ring.size(), 0);
  for (const auto& g : lt.generators())
    for (std::size_t v = 0; v < g.size(); ++v)
      if (g[v] > 0 && std::count_if(g.exponents().begin(), g.exponents().end(), [](auto e) { return e > 0; }) == 1)
        bound[v] = bound[v] == 0 ? g[v] : std::min(bound[v], g[v]);
  std::vector<Monomial::Exp> e(ring.size(), 0);
  while (true) {
    Monomial m(ring, e);
    if (!lt.contains(m)) census.monomials.push_back(std::move(m));
    std::size_t v = 0;
    while (v < e.size() && ++e[v] == bound[v]) e[v++] = 0;
    if (v == e.size()) break;
  }
  std::sort(census.monomials.begin(), census.monomials.end(), MonomialGreater());
  census.count = census.monomials.size();
  return census;
}

ContainmentReport lt_contains(const MonomialIdeal& lt, const MonomialIdeal& target) {
  ContainmentReport report;
  for (const auto& m : target.generators()) {
    const bool in = lt.contains(m);
    report.entries.push_back({m, in});
    report.all_contained = report.all_contained && in;
  }
  return report;
}

long lattice_count(long n, LatticeMode mode) {
  if (n < 0) throw std::invalid_argument("lattice_count: n must be >= 0");
  if (mode == LatticeMode::brute_force) {
    long count = 0;
    for (long j = 0; 3 * j < n; ++j)
      for (long i = 0; 2 * i + 3 * j < n; ++i) ++count;
    return count;
  }
  static constexpr long small[6] = {0, 1, 1, 2, 3, 4};
  const long r = n % 6;
  return (n * n - r * r) / 12 + 2 * (n / 6) + small[r];
}

}  // namespace u3alg
