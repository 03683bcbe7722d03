#include "u3alg/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "u3alg/linalg.hpp"

namespace u3alg {

namespace {

Rat dot(const IntVec& k, const RatVec& x) {
  Rat s;
  for (std::size_t l = 0; l < k.size(); ++l) s += Rat(k[l]) * x[l];
  return s;
}

long dot(const IntVec& a, const IntVec& b) {
  long s = 0;
  for (std::size_t l = 0; l < a.size(); ++l) s += a[l] * b[l];
  return s;
}

long mod(long a, long n) { return ((a % n) + n) % n; }

// exp(q2 t2^2 + q3 t3^2)
BiSeries bi_gaussian(const Rat& q2, const Rat& q3, std::size_t order) {
  BiSeries e = bi_monomial(order, order, CycNum(q2), 2, 0) + bi_monomial(order, order, CycNum(q3), 0, 2);
  return e.exp();
}

const CycNum& sqrt3() {
  static const CycNum v = CycNum::constant(CycNum::Constant::sqrt3);
  return v;
}

const CycNum& sqrtm3() {
  static const CycNum v = CycNum::constant(CycNum::Constant::sqrtm3);
  return v;
}

IntMatrix hyperbolic_e8_k3() {
  static const int e8[8][8] = {
      {2, -1, 0, 0, 0, 0, 0, 0},  {-1, 2, -1, 0, 0, 0, 0, 0}, {0, -1, 2, -1, 0, 0, 0, 0},
      {0, 0, -1, 2, -1, 0, 0, 0}, {0, 0, 0, -1, 2, -1, 0, -1}, {0, 0, 0, 0, -1, 2, -1, 0},
      {0, 0, 0, 0, 0, -1, 2, 0},  {0, 0, 0, 0, -1, 0, 0, 2},
  };
  IntMatrix q(22, IntVec(22, 0));
  for (int h = 0; h < 3; ++h) {
    q[2 * h][2 * h + 1] = 1;
    q[2 * h + 1][2 * h] = 1;
  }
  for (int blk = 0; blk < 2; ++blk) {
    const int off = 6 + 8 * blk;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) q[off + i][off + j] = -e8[i][j];
  }
  return q;
}

}  // namespace

void validate(const DonaldsonSpec& spec) {
  const std::size_t b = spec.rank();
  for (const auto& row : spec.Q)
    if (row.size() != b) throw std::invalid_argument("DonaldsonSpec: intersection form is not square");
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (spec.Q[i][j] != spec.Q[j][i]) throw std::invalid_argument("DonaldsonSpec: intersection form is not symmetric");
  if (spec.w.size() != b) throw std::invalid_argument("DonaldsonSpec: w has the wrong length");
  for (std::size_t i = 0; i < spec.K.size(); ++i) {
    if (spec.K[i].size() != b) throw std::invalid_argument("DonaldsonSpec: class K_" + std::to_string(i) + " has the wrong length");
    for (std::size_t l = 0; l < b; ++l)
      if (mod(spec.K[i][l] - spec.Q[l][l], 2) != 0)
        throw std::invalid_argument("DonaldsonSpec: class K_" + std::to_string(i) + " is not characteristic");
  }
  if (spec.c.size() != spec.K.size()) throw std::invalid_argument("DonaldsonSpec: c must be |K| x |K|");
  for (std::size_t i = 0; i < spec.c.size(); ++i) {
    if (spec.c[i].size() != spec.K.size()) throw std::invalid_argument("DonaldsonSpec: c must be |K| x |K|");
    for (std::size_t j = 0; j < spec.c.size(); ++j) {
      if (!spec.c[i][j].is_real())
        throw std::invalid_argument("DonaldsonSpec: c_" + std::to_string(i) + "," + std::to_string(j) + " is not in Q[sqrt3]");
      if (!(spec.c[i][j] == spec.c[j][i].conj()))
        throw std::invalid_argument("DonaldsonSpec: c is not conjugate symmetric");
    }
  }
}

DonaldsonSpec k3_spec(IntVec w) {
  DonaldsonSpec s;
  s.Q = hyperbolic_e8_k3();
  s.K = {IntVec(22, 0)};
  s.c = {{CycNum(1)}};
  s.w = w.empty() ? IntVec(22, 0) : std::move(w);
  validate(s);
  return s;
}

DonaldsonSpec random_spec(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uni = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  DonaldsonSpec s;
  const std::size_t b = static_cast<std::size_t>(uni(1, 3));
  s.Q.assign(b, IntVec(b, 0));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = i; j < b; ++j) s.Q[i][j] = s.Q[j][i] = uni(-2, 2);
  const std::size_t nk = static_cast<std::size_t>(uni(1, 3));
  for (std::size_t i = 0; i < nk; ++i) {
    IntVec k(b);
    for (std::size_t l = 0; l < b; ++l) k[l] = 2 * uni(-2, 2) + mod(s.Q[l][l], 2);
    s.K.push_back(k);
  }
  s.c.assign(nk, std::vector<CycNum>(nk));
  for (std::size_t i = 0; i < nk; ++i)
    for (std::size_t j = i; j < nk; ++j)
      s.c[i][j] = s.c[j][i] = CycNum(Rat(uni(-4, 4), uni(1, 3))) + sqrt3() * Rat(uni(-2, 2), uni(1, 3));
  s.w.resize(b);
  for (auto& x : s.w) x = uni(-3, 3);
  validate(s);
  return s;
}

Rat quadratic_form(const IntMatrix& Q, const RatVec& x) {
  if (x.size() != Q.size()) throw std::invalid_argument("quadratic_form: vector has the wrong length");
  Rat s;
  for (std::size_t i = 0; i < Q.size(); ++i)
    for (std::size_t j = 0; j < Q.size(); ++j)
      if (Q[i][j] != 0) s += Rat(Q[i][j]) * x[i] * x[j];
  return s;
}

BiSeries structure_series(const DonaldsonSpec& spec, const RatVec& gamma, const RatVec& lambda, std::size_t order) {
  validate(spec);
  if (gamma.size() != spec.rank() || lambda.size() != spec.rank())
    throw std::invalid_argument("structure_series: Gamma and Lambda must have length b");
  BiSeries sum = bi_zero(order, order);
  const Rat half(1, 2);
  for (std::size_t i = 0; i < spec.K.size(); ++i)
    for (std::size_t j = 0; j < spec.K.size(); ++j) {
      if (spec.c[i][j].is_zero()) continue;
      IntVec plus(spec.rank()), minus(spec.rank());
      for (std::size_t l = 0; l < spec.rank(); ++l) {
        plus[l] = spec.K[i][l] + spec.K[j][l];
        minus[l] = spec.K[i][l] - spec.K[j][l];
      }
      const long e = dot(spec.w, minus) / 2;  // even by the characteristic condition
      const CycNum coeff = spec.c[i][j] * CycNum::zeta3_pow(mod(e, 3));
      sum += bi_exp_linear(order, order, sqrt3() * (half * dot(plus, gamma)), sqrtm3() * (half * dot(minus, lambda)))
                 .scaled(coeff);
    }
  return bi_gaussian(half * quadratic_form(spec.Q, gamma), -quadratic_form(spec.Q, lambda), order) * sum;
}

BiSeries flip_t3(const BiSeries& s) {
  return s.map([](const CycSeries& inner) {
    CycSeries r = inner;
    for (std::size_t j = 1; j < r.order(); j += 2) r[j] = -r[j];
    return r;
  });
}

bool conjugation_symmetry_check(const DonaldsonSpec& spec, const RatVec& gamma, const RatVec& lambda,
                                std::size_t order) {
  DonaldsonSpec neg = spec;
  for (auto& x : neg.w) x = -x;
  return structure_series(spec, gamma, lambda, order) == flip_t3(structure_series(neg, gamma, lambda, order));
}

BiSeries blowup_factor(BlowupShift shift, std::size_t order) {
  if (order < 1) throw std::invalid_argument("blowup_factor: order must be >= 1");
  BiSeries trig = bi_zero(order, order);
  // cosh(sqrt3 t2) and cos(sqrt3 t3) have rational Taylor coefficients
  const Rat cos_weight = shift == BlowupShift::plain ? Rat(2) : Rat(-1);
  for (std::size_t n = 0; 2 * n < order; ++n) {
    const Rat three_n = Rat(3).pow(static_cast<long>(n));
    const Rat f = inverse(factorial(static_cast<unsigned>(2 * n)));
    trig += bi_monomial(order, order, CycNum(three_n * f), 2 * n, 0);
    const Rat sign = n % 2 ? Rat(-1) : Rat(1);
    trig += bi_monomial(order, order, CycNum(cos_weight * sign * three_n * f), 0, 2 * n);
  }
  if (shift == BlowupShift::through_E) {
    // sqrt3 sin(sqrt3 t3) = sum (-1)^n 3^{n+1} t3^{2n+1} / (2n+1)!
    for (std::size_t n = 0; 2 * n + 1 < order; ++n) {
      const Rat sign = n % 2 ? Rat(-1) : Rat(1);
      const Rat c = sign * Rat(3).pow(static_cast<long>(n + 1)) * inverse(factorial(static_cast<unsigned>(2 * n + 1)));
      trig -= bi_monomial(order, order, CycNum(c), 0, 2 * n + 1);
    }
  }
  return bi_gaussian(Rat(-1, 2), Rat(1), order) * trig * CycNum(Rat(1, 3));
}

BiSeries blowup_factor_exponential(BlowupShift shift, std::size_t order) {
  if (order < 1) throw std::invalid_argument("blowup_factor_exponential: order must be >= 1");
  const long s = shift == BlowupShift::plain ? 0 : 1;
  const CycNum zero;
  BiSeries sum = bi_exp_linear(order, order, sqrt3(), zero) * CycNum(Rat(1, 6)) +
                 bi_exp_linear(order, order, -sqrt3(), zero) * CycNum(Rat(1, 6)) +
                 bi_exp_linear(order, order, zero, sqrtm3()) * (CycNum::zeta3_pow(s) * Rat(1, 3)) +
                 bi_exp_linear(order, order, zero, -sqrtm3()) * (CycNum::zeta3_pow(-s) * Rat(1, 3));
  // Q(t2 E)/2 - Q(t3 E) with E.E = -1
  return bi_gaussian(Rat(-1, 2), Rat(1), order) * sum;
}

DonaldsonSpec blow_up(const DonaldsonSpec& spec, BlowupShift shift) {
  validate(spec);
  const std::size_t b = spec.rank();
  DonaldsonSpec out;
  out.Q.assign(b + 1, IntVec(b + 1, 0));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) out.Q[i][j] = spec.Q[i][j];
  out.Q[b][b] = -1;
  out.w = spec.w;
  out.w.push_back(shift == BlowupShift::plain ? 0 : 1);
  const std::size_t n = spec.K.size();
  for (long eps : {1L, -1L})
    for (const auto& k : spec.K) {
      IntVec kk = k;
      kk.push_back(eps);
      out.K.push_back(kk);
    }
  out.c.assign(2 * n, std::vector<CycNum>(2 * n));
  for (std::size_t ei = 0; ei < 2; ++ei)
    for (std::size_t ej = 0; ej < 2; ++ej)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          out.c[ei * n + i][ej * n + j] = spec.c[i][j] * (ei == ej ? Rat(1, 6) : Rat(1, 3));
  return out;
}

BlowupReport verify_blowup(const DonaldsonSpec& spec, const RatVec& gamma, const RatVec& lambda,
                           std::size_t order, BlowupShift shift) {
  BlowupReport r;
  r.order = order;
  const BiSeries factor = blowup_factor(shift, order);
  r.factor_forms_agree = factor == blowup_factor_exponential(shift, order);
  RatVec g2 = gamma, l2 = lambda;
  g2.push_back(Rat(1));
  l2.push_back(Rat(1));
  const BiSeries lhs = structure_series(blow_up(spec, shift), g2, l2, order);
  r.identity_holds = lhs == factor * structure_series(spec, gamma, lambda, order);
  return r;
}

bool adjunction_check(const EmbeddedSurface& s) {
  if (s.self_intersection < 0) throw std::invalid_argument("adjunction_check: self-intersection must be >= 0");
  return 2L * s.genus - 2 >= std::abs(s.pairing) + s.self_intersection;
}

namespace {

using Laurent = std::map<std::pair<int, int>, CycNum>;

Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) r[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

}  // namespace

EllipticExpansion elliptic_coefficients(int g, int wf) {
  if (g < 1) throw std::invalid_argument("elliptic_coefficients: g must be >= 1");
  EllipticExpansion out;
  out.g = g;
  out.wf = static_cast<int>(mod(wf, 3));
  const int e = g - 1;
  const CycNum third(Rat(1, 3));
  const CycNum z = CycNum::zeta3_pow(out.wf);
  const CycNum zinv = CycNum::zeta3_pow(-out.wf);

  // Direct product of exponentials: X = e^{2 sqrt3 t2}, Y = e^{2 sqrt3 i t3}.
  Laurent base = {{{1, 0}, third}, {{-1, 0}, third}, {{0, 1}, -(third * zinv)}, {{0, -1}, -(third * z)}};
  Laurent direct = {{{0, 0}, CycNum(1)}};
  for (int i = 0; i < e; ++i) direct = laurent_mul(direct, base);

  // Taylor coefficients, then the Vandermonde solve on nodes -e..e.
  const std::size_t n = static_cast<std::size_t>(2 * e + 1);
  const CycNum u2 = sqrt3() * Rat(2);
  const CycNum u3 = sqrt3() * CycNum::constant(CycNum::Constant::i) * Rat(2);
  BiSeries p = (bi_exp_linear(n, n, u2, CycNum()) + bi_exp_linear(n, n, -u2, CycNum())) * third -
               (bi_exp_linear(n, n, CycNum(), u3) * zinv + bi_exp_linear(n, n, CycNum(), -u3) * z) * third;
  const BiSeries t = p.pow(static_cast<unsigned>(e));
  // M[p][q] = sum_{a,b} d_{a,b} a^p b^q
  Matrix<CycNum> m(n, std::vector<CycNum>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = bi_coeff(t, i, j) * (factorial(static_cast<unsigned>(i)) * factorial(static_cast<unsigned>(j))) /
                (u2.pow(static_cast<long>(i)) * u3.pow(static_cast<long>(j)));
  Matrix<CycNum> v(n, std::vector<CycNum>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) v[i][a] = CycNum(Rat(static_cast<long>(a) - e).pow(static_cast<long>(i)));
  // V D V^T = M: first X = V^{-1} M column by column, then D^T = V^{-1} X^T.
  auto solve_columns = [&](const Matrix<CycNum>& rhs) {
    Matrix<CycNum> x(n, std::vector<CycNum>(n));
    for (std::size_t col = 0; col < n; ++col) {
      std::vector<CycNum> b(n);
      for (std::size_t r = 0; r < n; ++r) b[r] = rhs[r][col];
      const auto sol = solve(v, b);
      if (!sol) throw std::logic_error("elliptic_coefficients: singular Vandermonde system");
      for (std::size_t r = 0; r < n; ++r) x[r][col] = (*sol)[r];
    }
    return x;
  };
  const Matrix<CycNum> x = solve_columns(m);
  Matrix<CycNum> xt(n, std::vector<CycNum>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) xt[i][j] = x[j][i];
  const Matrix<CycNum> dt = solve_columns(xt);  // dt[b][a]
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!dt[b][a].is_zero()) out.d[{static_cast<int>(a) - e, static_cast<int>(b) - e}] = dt[b][a];

  out.routes_agree = out.d == direct;
  out.support_ok = std::all_of(out.d.begin(), out.d.end(), [&](const auto& kv) {
    const auto [a, b] = kv.first;
    return std::abs(a) + std::abs(b) <= e && mod(a + b - e, 2) == 0;
  });
  const auto top = out.d.find({e, 0});
  out.d_top = top == out.d.end() ? CycNum() : top->second;
  out.d_top_stated = Rat(2, 3).pow(e);
  return out;
}

long FinAbGroup::order() const {
  long n = 1;
  for (long o : orders) n *= o;
  return n;
}

long framed_euler_char(const FinAbGroup& h, int N, EulerMode mode) {
  if (N < 2) throw std::invalid_argument("framed_euler_char: N must be >= 2");
  for (long o : h.orders)
    if (o < 1) throw std::invalid_argument("framed_euler_char: cyclic orders must be >= 1");
  const long size = h.order();
  if (mode == EulerMode::direct) {
    long r = 1;
    for (int i = 1; i < N; ++i) r *= size;
    return r;
  }
  // Elements are indexed 0..|H|-1 in mixed radix; a tuple with product 1 is
  // a multiset whose last entry is minus the sum of the others.
  auto neg_sum = [&](const std::vector<long>& idx) {
    long out = 0, stride = 1;
    for (long o : h.orders) {
      long s = 0;
      for (long x : idx) s += (x / stride) % o;
      out += mod(-s, o) * stride;
      stride *= o;
    }
    return out;
  };
  long fact_n = 1;
  for (int i = 2; i <= N; ++i) fact_n *= i;
  long total = 0;
  std::vector<long> idx(static_cast<std::size_t>(N - 1), 0);
  while (true) {
    const long last = neg_sum(idx);
    if (last >= idx.back()) {
      std::vector<long> all = idx;
      all.push_back(last);
      long denom = 1, run = 1;
      for (std::size_t i = 1; i < all.size(); ++i) {
        run = all[i] == all[i - 1] ? run + 1 : 1;
        denom *= run;
      }
      total += fact_n / denom;
    }
    // next nondecreasing tuple
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] == size - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < idx.size(); ++j) idx[j] = idx[pos - 1];
  }
  return total;
}

long AlexPoly::radius() const {
  long r = 0;
  for (const auto& [j, a] : coeffs)
    if (a != 0) r = std::max(r, std::abs(j));
  return r;
}

long AlexPoly::at(long j) const {
  const auto it = coeffs.find(j);
  return it == coeffs.end() ? 0 : it->second;
}

void validate(const AlexPoly& delta) {
  long sum = 0;
  for (const auto& [j, a] : delta.coeffs) {
    if (a != delta.at(-j)) throw std::invalid_argument("AlexPoly: coefficients are not symmetric");
    sum += a;
  }
  if (std::abs(sum) != 1) throw std::invalid_argument("AlexPoly: Delta(1) must be +-1, got " + std::to_string(sum));
}

LaurentCoeffs2 alexander_u3(const AlexPoly& delta, AlexanderMode mode) {
  validate(delta);
  LaurentCoeffs2 out;
  if (mode == AlexanderMode::product) {
    // Delta(t2 t3) Delta(t2 / t3)
    for (const auto& [i, ai] : delta.coeffs)
      for (const auto& [j, aj] : delta.coeffs) out[{i + j, i - j}] += ai * aj;
  } else {
    const long r = 2 * delta.radius();
    for (long a = -r; a <= r; ++a)
      for (long b = -r; b <= r; ++b)
        if (mod(a - b, 2) == 0) out[{a, b}] = delta.at((a + b) / 2) * delta.at((a - b) / 2);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

ConjecturalCoefficients conjectural_coefficients(const AlexPoly& delta) {
  ConjecturalCoefficients out;
  for (const auto& [i, ai] : delta.coeffs)
    for (const auto& [j, aj] : delta.coeffs)
      if (ai * aj != 0) out.c[{i, j}] = 9 * ai * aj;
  const auto a = alexander_u3(delta, AlexanderMode::product);
  out.consistent = a.size() == out.c.size();
  for (const auto& [ab, v] : a) {
    const auto it = out.c.find({(ab.first + ab.second) / 2, (ab.first - ab.second) / 2});
    if (it == out.c.end() || it->second != 9 * v) out.consistent = false;
  }
  return out;
}

}  // namespace u3alg
