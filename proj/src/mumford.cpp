#include "u3alg/mumford.hpp"

#include <optional>

#include "u3alg/linalg.hpp"

namespace u3alg {

namespace {

// Index of a_i / b_i inside rank_ring(N).
std::size_t alpha_index(int i) { return static_cast<std::size_t>(i - 2); }
std::size_t beta_index(int N, int i) { return static_cast<std::size_t>(N - 1 + i - 2); }

int sign_of(int i) { return i % 2 == 0 ? 1 : -1; }

std::vector<int> dual_signs(int N) {
  std::vector<int> s;
  for (int i = 2; i <= N; ++i) s.push_back(sign_of(i));
  for (int i = 2; i <= N; ++i) s.push_back(sign_of(i));
  return s;
}

// alpha_0..alpha_N and beta_0..beta_N with the conventions a0 = a1 = 0,
// b0 = 1, b1 = 0; signed by (-1)^i for the dual family.
struct AlphaBeta {
  std::vector<RatPoly> alpha, beta;
};

AlphaBeta alpha_beta(int N, bool dual) {
  const RingPtr ring = rank_ring(N);
  AlphaBeta ab;
  ab.alpha.assign(static_cast<std::size_t>(N + 1), RatPoly(ring));
  ab.beta.assign(static_cast<std::size_t>(N + 1), RatPoly(ring));
  ab.beta[0] = RatPoly(ring, Rat(1));
  for (int i = 2; i <= N; ++i) {
    const Rat s(dual ? sign_of(i) : 1);
    ab.alpha[static_cast<std::size_t>(i)] = RatPoly::variable(ring, alpha_index(i)).scaled(s);
    ab.beta[static_cast<std::size_t>(i)] = RatPoly::variable(ring, beta_index(N, i)).scaled(s);
  }
  return ab;
}

void check_params(const RelationParams& p) {
  if (p.N < 2) throw std::invalid_argument("relations: N must be >= 2");
  if (p.d_prime < 1 || p.d_prime >= p.N) throw std::invalid_argument("relations: need 1 <= d' < N");
  if (p.k < 0) throw std::invalid_argument("relations: k must be >= 0");
}

std::string describe(const RelationParams& p, int m) {
  return "g=" + std::to_string(p.g) + " k=" + std::to_string(p.k) + " m=" + std::to_string(m) +
         " N=" + std::to_string(p.N) + " d'=" + std::to_string(p.d_prime) + (p.dual ? " dual" : "");
}

const RatPoly& at(const std::vector<RatPoly>& z, int m, const RatPoly& zero) {
  return m < 0 || m >= static_cast<int>(z.size()) ? zero : z[static_cast<std::size_t>(m)];
}

}  // namespace

std::vector<SmallZeta> small_zetas(int n_max) {
  if (n_max < 0) throw std::invalid_argument("small_zeta: n must be >= 0");
  const RingPtr ring = alpha_ring();
  const RatPoly a2 = RatPoly::variable(ring, "a2");
  const RatPoly a3 = RatPoly::variable(ring, "a3");
  std::vector<SmallZeta> out;
  std::vector<RatPoly> rz, rzb;
  for (int n = 0; n <= n_max; ++n) {
    SmallZeta s;
    s.n = n;
    std::vector<RatPoly::Term> tz, tzb;
    for (int j = 0; 2 * j <= n; ++j) {
      const Rat c = (factorial(static_cast<unsigned>(n - 2 * j)) * factorial(static_cast<unsigned>(j)) *
                     Rat(2).pow(j))
                        .inverse();
      Monomial m(*ring, {n - 2 * j, j});
      tz.emplace_back(m, c);
      tzb.emplace_back(m, j % 2 == 0 ? c : -c);
    }
    s.zeta = RatPoly::from_terms(ring, std::move(tz));
    s.zbar = RatPoly::from_terms(ring, std::move(tzb));

    // m z_m = a2 z_{m-1} + a3 z_{m-2}; the bar family flips the a3 term.
    if (n == 0) {
      rz.emplace_back(ring, Rat(1));
      rzb.emplace_back(ring, Rat(1));
    } else {
      RatPoly z = a2 * rz[static_cast<std::size_t>(n - 1)];
      RatPoly zb = a2 * rzb[static_cast<std::size_t>(n - 1)];
      if (n >= 2) {
        z += a3 * rz[static_cast<std::size_t>(n - 2)];
        zb -= a3 * rzb[static_cast<std::size_t>(n - 2)];
      }
      rz.push_back(z.scaled(Rat(1, n)));
      rzb.push_back(zb.scaled(Rat(1, n)));
    }
    if (!(rz.back() == s.zeta) || !(rzb.back() == s.zbar))
      throw ConsistencyError("small_zeta: closed form and recursion disagree at n=" + std::to_string(n));
    s.sigma = (s.zeta + s.zbar).scaled(Rat(1, 2));
    s.sbar = (s.zeta - s.zbar).scaled(Rat(1, 2));
    out.push_back(std::move(s));
  }
  return out;
}

SmallZeta small_zeta(int n) { return small_zetas(n).back(); }

Rat relation_constant(const RelationParams& p) {
  const Rat frac(p.d_prime, p.N);
  return p.dual ? frac : Rat(1) - frac;
}

PolySeries g_series(int N, std::size_t order) {
  if (N < 2) throw std::invalid_argument("g_series: N must be >= 2");
  if (order < 1) throw std::invalid_argument("g_series: order must be >= 1");
  const RingPtr ring = rank_ring(N);
  const RatPoly one(ring, Rat(1));
  // t^n coefficient of the inner sum is -(-1)^n p_{n+1} / (n(n+1)), p read off
  // the power-sum series.
  const PolySeries ps = power_sum_series(N, order);
  PolySeries inner(order, one);
  for (std::size_t n = 1; n < order; ++n) {
    const long nn = static_cast<long>(n);
    RatPoly p = ps[n];  // (-1)^n p_{n+1}
    inner[n] = p.scaled(Rat(-1, nn * (nn + 1)));
  }
  PolySeries applied(order, one);
  for (std::size_t n = 1; n < order; ++n) {
    RatPoly acc(ring);
    for (int i = 2; i <= N; ++i)
      acc += RatPoly::variable(ring, alpha_index(i)) * inner[n].derivative(beta_index(N, i));
    applied[n] = acc;
  }
  return applied.exp();
}

PolySeries f_series(const RelationParams& p, std::size_t order) {
  check_params(p);
  if (order < 1) throw std::invalid_argument("f_series: order must be >= 1");
  const RingPtr ring = rank_ring(p.N);
  const RatPoly one(ring, Rat(1));
  PolySeries b = PolySeries::one(order, one);
  PolySeries bk = PolySeries::one(order, one);
  for (int i = 2; i <= p.N && static_cast<std::size_t>(i) < order; ++i) {
    const RatPoly beta = RatPoly::variable(ring, beta_index(p.N, i));
    b[static_cast<std::size_t>(i)] = beta;
    bk[static_cast<std::size_t>(i)] = beta.scaled(Rat(1) - Rat(i, p.N));
  }
  const Rat c = relation_constant(p);
  PolySeries f = b.pow_rational(Rat(p.g - p.k) - c) * bk.pow(static_cast<unsigned>(p.k)) * g_series(p.N, order);
  if (p.dual) {
    const auto signs = dual_signs(p.N);
    f = f.map([&](const RatPoly& q) { return q.sign_substitution(signs); });
  }
  return f;
}

std::vector<RatPoly> zeta_table(const RelationParams& p, int m_max) {
  check_params(p);
  const int N = p.N;
  const RingPtr ring = rank_ring(N);
  const RatPoly zero(ring);
  const AlphaBeta ab = alpha_beta(N, p.dual);
  const Rat c = relation_constant(p);
  const Rat e = Rat(p.g - p.k) - c;

  std::vector<RatPoly> z;
  if (m_max < 0) return z;
  z.emplace_back(ring, Rat(1));
  for (int m = 0; m < m_max; ++m) {
    RatPoly rhs(ring);
    for (int i = 2; i <= N; ++i)
      for (int j = 0; j <= N; ++j) {
        const RatPoly& zm = at(z, m - i - j + 2, zero);
        if (zm.is_zero() || ab.beta[static_cast<std::size_t>(j)].is_zero()) continue;
        rhs -= (ab.alpha[static_cast<std::size_t>(i)] * ab.beta[static_cast<std::size_t>(j)] * zm)
                   .scaled(Rat(N - j));
      }
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j <= N; ++j) {
        if (i == 0 && j == 0) continue;
        const RatPoly& zm = at(z, m - i - j + 1, zero);
        if (zm.is_zero()) continue;
        const RatPoly& bi = ab.beta[static_cast<std::size_t>(i)];
        const RatPoly& bj = ab.beta[static_cast<std::size_t>(j)];
        if (bi.is_zero() || bj.is_zero()) continue;
        const Rat coef = e * Rat(i * (N - j)) - Rat((N - i) * (m - i - j + 1)) + Rat(p.k * j * (N - j));
        if (coef.is_zero()) continue;
        rhs += (bi * bj * zm).scaled(coef);
      }
    z.push_back(rhs.scaled(Rat(1, N * (m + 1))));
  }
  return z;
}

RatPoly zeta_gk(int m, const RelationParams& p) {
  if (m < 0) {
    check_params(p);
    return RatPoly(rank_ring(p.N));
  }
  return zeta_table(p, m).back();
}

std::vector<RatPoly> checked_zeta_table(const RelationParams& p, int m_max) {
  std::vector<RatPoly> z = zeta_table(p, m_max);
  if (m_max < 0) return z;
  const PolySeries f = f_series(p, static_cast<std::size_t>(m_max + 1));
  for (int m = 0; m <= m_max; ++m)
    if (!(f[static_cast<std::size_t>(m)] == z[static_cast<std::size_t>(m)]))
      throw ConsistencyError("zeta recursion disagrees with generating function at " + describe(p, m));
  return z;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<CheckResult> verify_index_recursions(int g, int k, int N, int m_max) {
  std::vector<CheckResult> out;
  for (bool dual : {false, true}) {
    const RingPtr ring = rank_ring(N);
    const RatPoly zero(ring);
    const AlphaBeta ab = alpha_beta(N, dual);
    const auto z = zeta_table({g, k, N, 1, dual}, m_max);
    const auto zg = zeta_table({g + 1, k, N, 1, dual}, m_max);
    const auto zk = zeta_table({g, k + 1, N, 1, dual}, m_max);
    const std::string fam = dual ? "dual " : "";
    std::optional<int> bad_genus, bad_slant;
    for (int m = 0; m <= m_max; ++m) {
      RatPoly genus(ring), lhs(ring), rhs(ring);
      for (int i = 0; i <= N; ++i) {
        const RatPoly& b = ab.beta[static_cast<std::size_t>(i)];
        if (b.is_zero()) continue;
        genus += b * at(z, m - i, zero);
        lhs += b * at(zk, m - i, zero);
        rhs += (b * at(z, m - i, zero)).scaled(Rat(1) - Rat(i, N));
      }
      if (!bad_genus && !(genus == zg[static_cast<std::size_t>(m)])) bad_genus = m;
      if (!bad_slant && !(lhs == rhs)) bad_slant = m;
    }
    const std::string in = "g=" + std::to_string(g) + " k=" + std::to_string(k) + " N=" + std::to_string(N) +
                           " m<=" + std::to_string(m_max);
    out.push_back({fam + "genus shift: zeta^{g+1,k}_m = sum_i b_i zeta^{g,k}_{m-i}",
                   in + (bad_genus ? " first failure m=" + std::to_string(*bad_genus) : ""), !bad_genus});
    out.push_back({fam + "slant shift: sum_i b_i zeta^{g,k+1}_{m-i} = sum_i (1-i/N) b_i zeta^{g,k}_{m-i}",
                   in + (bad_slant ? " first failure m=" + std::to_string(*bad_slant) : ""), !bad_slant});
  }
  return out;
}

namespace {

void check_vandermonde(int n, int i, Parity parity) {
  const int lo = parity == Parity::odd ? 1 : 0;
  if (i < lo || 3 * i > n)
    throw std::invalid_argument("vandermonde_combination: need " + std::to_string(lo) + " <= i <= n/3, got n=" +
                                std::to_string(n) + " i=" + std::to_string(i));
}

}  // namespace

Monomial vandermonde_target(int n, int i, Parity parity) {
  check_vandermonde(n, i, parity);
  const RingPtr ring = alpha_ring();
  if (parity == Parity::odd) return Monomial(*ring, {n - 3 * i + 2, 2 * i - 1});
  return Monomial(*ring, {n - 3 * i, 2 * i});
}

std::vector<Rat> vandermonde_combination(int n, int i, Parity parity) {
  check_vandermonde(n, i, parity);
  // Unknown j multiplies a2^j times the sigma of index n+i-j; row b is the
  // coefficient of a2^{n+i-2b} a3^b, which is 1/((n+i-j-2b)! b! 2^b).
  const int size = parity == Parity::odd ? i : i + 1;
  Matrix<Rat> m(static_cast<std::size_t>(size), std::vector<Rat>(static_cast<std::size_t>(size)));
  std::vector<Rat> rhs(static_cast<std::size_t>(size));
  for (int r = 0; r < size; ++r) {
    const int b = parity == Parity::odd ? 2 * r + 1 : 2 * r;
    const Rat bpart = factorial(static_cast<unsigned>(b)) * Rat(2).pow(b);
    for (int j = 0; j < size; ++j) {
      const int e = n + i - j - 2 * b;
      if (e < 0) continue;
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
          (factorial(static_cast<unsigned>(e)) * bpart).inverse();
    }
  }
  rhs.back() = Rat(1);
  auto x = solve(m, rhs);
  if (!x) throw std::runtime_error("vandermonde_combination: singular system at n=" + std::to_string(n) +
                                   " i=" + std::to_string(i));
  return *x;
}

RatPoly vandermonde_polynomial(int n, int i, Parity parity) {
  const auto c = vandermonde_combination(n, i, parity);
  const RingPtr ring = alpha_ring();
  const auto sz = small_zetas(n + i);
  RatPoly out(ring);
  for (std::size_t j = 0; j < c.size(); ++j) {
    const auto& s = sz[static_cast<std::size_t>(n + i) - j];
    const RatPoly& part = parity == Parity::odd ? s.sbar : s.sigma;
    out += part.times_term(Monomial::variable(*ring, 0, static_cast<Monomial::Exp>(j)), c[j]);
  }
  return out;
}

RatPoly to_quotient3(const RatPoly& p) { return p.remap(quotient_ring3(), {0, 1, 2, -1}); }

RatPoly to_quotient3_rank(const RatPoly& p, int N) {
  std::vector<int> image;
  for (int i = 2; i <= N; ++i) image.push_back(i == 2 ? 0 : (i == 3 ? 1 : -1));
  for (int i = 2; i <= N; ++i) image.push_back(i == 2 ? 2 : -1);
  return p.remap(quotient_ring3(), image);
}

std::vector<CheckResult> verify_beta_lemmas(int g, int k, int m, int N) {
  if (N < 3) throw std::invalid_argument("verify_beta_lemmas: N must be >= 3");
  if (2 * k + 2 == N) throw std::invalid_argument("verify_beta_lemmas: k = N/2 - 1 is excluded");
  const RingPtr q = quotient_ring3();
  const RatPoly b2 = RatPoly::variable(q, "b2");
  const RatPoly zero(q);
  std::vector<CheckResult> out;
  const std::string in = "g=" + std::to_string(g) + " k=" + std::to_string(k) + " m=" + std::to_string(m) +
                         " N=" + std::to_string(N);
  auto image = [&](const std::vector<RatPoly>& z, int idx) {
    return idx < 0 || idx >= static_cast<int>(z.size()) ? zero : to_quotient3_rank(z[static_cast<std::size_t>(idx)], N);
  };
  auto member = [&](const RatPoly& target, std::vector<RatPoly> gens) {
    return in_ideal(target, buchberger(std::move(gens)));
  };
  for (bool dual : {false, true}) {
    const std::string fam = dual ? "dual " : "";
    const auto z = zeta_table({g, k, N, 1, dual}, std::max(m + 3, 0));
    out.push_back({fam + "b2^2 zeta^{g,k}_{m-1} in (zeta^{g,k}_{m+1}, zeta^{g,k}_{m+2}, zeta^{g,k}_{m+3}, b2^3)", in,
                   member(b2.pow(2) * image(z, m - 1),
                          {image(z, m + 1), image(z, m + 2), image(z, m + 3), b2.pow(3)})});
    const auto z1 = zeta_table({g, k + 1, N, 1, dual}, std::max(m, 0));
    out.push_back({fam + "b2 zeta^{g,k+1}_{m-2} in (zeta^{g,k+1}_m, zeta^{g,k}_m, b2^2)", in,
                   member(b2 * image(z1, m - 2), {image(z1, m), image(z, m), b2.pow(2)})});
  }
  return out;
}

namespace {

// zeta (or zbar) images for m in [lo, hi].
void append_range(std::vector<RatPoly>& out, int g, int k, bool dual, int lo, int hi) {
  const auto z = zeta_table({g, k, 3, 1, dual}, hi);
  for (int m = std::max(lo, 0); m <= hi; ++m) {
    RatPoly p = to_quotient3(z[static_cast<std::size_t>(m)]);
    if (!p.is_zero()) out.push_back(std::move(p));
  }
}

}  // namespace

std::vector<RatPoly> ideal_generators(int g, int window) {
  if (g < 1) throw std::invalid_argument("ideal_generators: g must be >= 1");
  if (window < 0) throw std::invalid_argument("ideal_generators: window must be >= 0");
  std::vector<RatPoly> out;
  for (int k = 0; k <= g; ++k) {
    append_range(out, g, k, false, 3 * g - k - 1, 3 * g - k - 1 + window);
    append_range(out, g, k, true, 3 * g - k, 3 * g - k + window);
  }
  out.push_back(RatPoly::variable(quotient_ring3(), "b2").pow(3));
  return out;
}

std::vector<RatPoly> extra_generators(int g, int window) {
  if (g < 1 || window < 0) throw std::invalid_argument("extra_generators: need g >= 1, window >= 0");
  std::vector<RatPoly> out;
  for (int k = 0; k <= g; ++k) {
    const int m = 3 * g - k - 1 + window + 1;
    append_range(out, g, k, false, m, m);
    append_range(out, g, k, true, m + 1, m + 1);
  }
  return out;
}

std::vector<RatPoly> small_ideal_generators(int n) {
  if (n < 0) throw std::invalid_argument("small_ideal_generators: n must be >= 0");
  const auto s = small_zetas(n + 2);
  const auto u = static_cast<std::size_t>(n);
  return {s[u].zeta, s[u + 1].zeta, s[u + 1].zbar, s[u + 2].zbar};
}

MonomialIdeal lt_gen_target(int g) {
  if (g < 1) throw std::invalid_argument("lt_gen_target: g must be >= 1");
  const RingPtr q = quotient_ring3();
  const int bound = 4 * g - 2;
  std::vector<Monomial> gens = {Monomial::variable(*q, 2, 3)};
  for (int k = 0; k <= 2; ++k)
    for (int j = 0; 3 * j + 2 * k <= bound + 2; ++j) {
      const int rest = bound - 3 * j - 2 * k;
      const int i = rest <= 0 ? 0 : (rest + 1) / 2;
      gens.emplace_back(*q, std::vector<Monomial::Exp>{i, j, k});
    }
  return MonomialIdeal(q, std::move(gens));
}

}  // namespace u3alg
