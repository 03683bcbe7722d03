#include "u3alg/spectrum.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>

#include "u3alg/groebner.hpp"
#include "u3alg/mumford.hpp"

namespace u3alg {

std::string EigenTuple::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) s += ",";
    s += lambda[i].to_string();
  }
  return s + "]";
}

bool eigen_less(const EigenTuple& a, const EigenTuple& b) {
  if (a.lambda.size() != b.lambda.size()) return a.lambda.size() < b.lambda.size();
  for (std::size_t i = 0; i < a.lambda.size(); ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto c = a.lambda[i][j] <=> b.lambda[i][j];
      if (c != 0) return c < 0;
    }
  return false;
}

std::vector<std::pair<int, int>> c_lattice(int g) {
  if (g < 1) throw std::invalid_argument("c_lattice: g must be >= 1");
  const int r = 2 * g - 2;
  std::vector<std::pair<int, int>> out;
  for (int a = -r; a <= r; ++a)
    for (int b = -r; b <= r; ++b)
      if (std::abs(a) + std::abs(b) <= r && (a - b) % 2 == 0) out.emplace_back(a, b);
  return out;
}

std::vector<LabelledEigenTuple> eigenvalue_set(int g, int d) {
  if (d % 3 == 0) throw std::invalid_argument("eigenvalue_set: d must be coprime to 3, got " + std::to_string(d));
  std::vector<LabelledEigenTuple> out;
  for (int k = 0; k < 3; ++k)
    for (auto [a, b] : c_lattice(g)) out.push_back({k, a, b, deformed_module(k, a, b).limit()});
  return out;
}

std::vector<EigenTuple> eigenvalue_tuples(int g, int d) {
  std::vector<EigenTuple> out;
  for (auto& e : eigenvalue_set(g, d)) out.push_back(std::move(e.tuple));
  return out;
}

EigenTuple evaction(const EigenTuple& lambda, int N, int root_index) {
  if (N < 2 || 12 % (2 * N) != 0)
    throw std::invalid_argument("evaction: 2N-th roots of unity lie in Q(zeta12) only for N in {2, 3, 6}");
  if (lambda.lambda.size() != static_cast<std::size_t>(2 * N - 2))
    throw std::invalid_argument("evaction: tuple length must be 2N - 2");
  const long step = 12 / (2 * N);
  const CycNum w = CycNum::gen_pow(step * root_index);
  EigenTuple out = lambda;
  for (int r = 2; r <= N; ++r) {
    out.lambda[static_cast<std::size_t>(r - 2)] *= w.pow(r - 1);
    out.lambda[static_cast<std::size_t>(N - 1 + r - 2)] *= w.pow(r);
  }
  return out;
}

DeformedModule deformed_module(int k, int a, int b) {
  if (k < 0 || k > 2) throw std::invalid_argument("deformed_module: k must be in {0, 1, 2}");
  const CycNum z = CycNum::zeta3_pow(k);
  const CycNum z2 = CycNum::zeta3_pow(2 * k);
  DeformedModule m;
  m.k = k;
  m.a = a;
  m.b = b;
  m.alpha2_const = CycNum::constant(CycNum::Constant::sqrt3) * z * Rat(a);
  m.alpha2_t2 = z2;
  m.alpha3_const = CycNum::constant(CycNum::Constant::sqrtm3) * z2 * Rat(b);
  m.alpha3_t3 = z * Rat(-2);
  m.beta2 = z2 * Rat(3);
  m.beta3 = CycNum();
  return m;
}

EigenTuple DeformedModule::limit() const { return EigenTuple{{alpha2_const, alpha3_const, beta2, beta3}}; }

CycNum DeformedModule::epsilon(int d) const { return CycNum::zeta3_pow(b + d * k); }

BiSeries DeformedModule::evaluate(const RatPoly& p, std::size_t order) const {
  if (!same_ring(p.ring(), rank_ring(3)) && !p.is_zero())
    throw std::invalid_argument("DeformedModule::evaluate: polynomial must be over a2, a3, b2, b3");
  const BiSeries one = bi_one(order, order);
  const std::vector<BiSeries> values = {
      one * alpha2_const + bi_monomial(order, order, alpha2_t2, 1, 0),
      one * alpha3_const + bi_monomial(order, order, alpha3_t3, 0, 1),
      one * beta2,
      one * beta3,
  };
  return p.evaluate(values, bi_zero(order, order), one,
                    [](const BiSeries& s, const Rat& c) { return s * c; });
}

bool annihilator_check(const DeformedModule& m, std::size_t order) {
  using Inner = TruncSeries<CycPoly>;
  using Outer = TruncSeries<Inner>;
  const RingPtr tr = make_ring({"t2", "t3"}, {1, 1});
  const CycPoly one_p(tr, CycNum(1));
  const CycPoly lam2 = CycPoly(tr, m.alpha2_const) + CycPoly::variable(tr, "t2").scaled(m.alpha2_t2);
  const CycPoly lam3 = CycPoly(tr, m.alpha3_const) + CycPoly::variable(tr, "t3").scaled(m.alpha3_t3);

  const Inner inner_one = Inner::one(order + 1, one_p);
  // s2 lam2 + s3 lam3, with one extra term so the derivatives stay at `order`.
  Outer lin(order + 1, inner_one);
  lin[0] = Inner::monomial(order + 1, one_p, lam3, 1);
  lin[1] = Inner::constant(order + 1, one_p, lam2);
  const Outer e = lin.exp();

  // d/ds3 - lam3, acting on each inner series.
  auto d3 = [&](const Outer& s) {
    return s.map([&](const Inner& c) { return Inner(c.derivative() - c.truncated(c.order() - 1).scaled(lam3)); });
  };
  auto d2 = [&](const Outer& s) { return s.derivative() - s.truncated(s.order() - 1).scaled(lam2); };
  const Outer r = d2(d3(e));
  if (r.order() < order) return false;
  for (std::size_t i = 0; i < order; ++i) {
    if (r[i].order() < order) return false;
    for (std::size_t j = 0; j < order; ++j)
      if (!r[i][j].is_zero()) return false;
  }
  return true;
}

SimpleTypeCensus simple_type_census(int g, int window, int max_window) {
  if (g < 1) throw std::invalid_argument("simple_type_census: g must be >= 1");
  if (window < 0 || max_window < window)
    throw std::invalid_argument("simple_type_census: need 0 <= window <= max_window");
  const auto t0 = std::chrono::steady_clock::now();
  SimpleTypeCensus out;
  out.g = g;
  out.window_requested = window;
  out.expected = static_cast<long>(2 * g - 1) * (2 * g - 1);
  out.eigen_count = eigenvalue_set(g, 1).size();
  for (int w = window;; ++w) {
    const auto gb = buchberger(ideal_generators(g, w));
    const auto census = standard_monomials(gb);
    out.window_used = w;
    out.finite = census.finite;
    out.count = census.count;
    const auto extra = extra_generators(g, w);
    out.stable = census.finite && std::all_of(extra.begin(), extra.end(),
                                              [&](const RatPoly& p) { return in_ideal(p, gb); });
    if (out.stable || w >= max_window) break;
  }
  out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (!out.stable) {
    out.status = "bound not yet tight; increase window";
  } else if (static_cast<long>(out.count) < out.expected) {
    out.status = "internal error: census below the eigenvalue lower bound";
  } else if (static_cast<long>(out.count) == out.expected && 3 * out.count == out.eigen_count) {
    out.match = true;
    out.status = "ok";
  } else {
    out.status = "census exceeds (2g-1)^2";
  }
  return out;
}

}  // namespace u3alg
