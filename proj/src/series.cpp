#include "u3alg/series.hpp"

namespace u3alg {

BiSeries bi_zero(std::size_t order2, std::size_t order3) {
  return BiSeries(order2, CycSeries::one(order3, CycNum(1)));
}

BiSeries bi_one(std::size_t order2, std::size_t order3) {
  const CycSeries inner_one = CycSeries::one(order3, CycNum(1));
  return BiSeries::one(order2, inner_one);
}

BiSeries bi_monomial(std::size_t order2, std::size_t order3, const CycNum& c, std::size_t i, std::size_t j) {
  const CycSeries inner_one = CycSeries::one(order3, CycNum(1));
  return BiSeries::monomial(order2, inner_one, CycSeries::monomial(order3, CycNum(1), c, j), i);
}

BiSeries bi_exp_linear(std::size_t order2, std::size_t order3, const CycNum& a, const CycNum& b) {
  const CycSeries inner_one = CycSeries::one(order3, CycNum(1));
  // exp(a t2) exp(b t3): the t2^i coefficient is a^i/i! * exp(b t3).
  const CycSeries eb = CycSeries::monomial(order3, CycNum(1), b, 1).exp();
  BiSeries r(order2, inner_one);
  CycNum c(1);
  for (std::size_t i = 0; i < order2; ++i) {
    r[i] = eb * c;
    c = c * a * Rat(1, static_cast<long>(i + 1));
  }
  return r;
}

BiSeries bi_derivative_inner(const BiSeries& s) {
  BiSeries r(s.order(), s.unit().truncated(s.unit().order() == 0 ? 0 : s.unit().order() - 1));
  for (std::size_t i = 0; i < s.order(); ++i) r[i] = s[i].derivative();
  return r;
}

const CycNum& bi_coeff(const BiSeries& s, std::size_t i, std::size_t j) { return s[i][j]; }

PolySeries power_sum_series(int n, std::size_t order) {
  const RingPtr ring = rank_ring(n);
  const RatPoly one(ring, Rat(1));
  // Knowing B'/B to `order` terms needs B to order + 1.
  PolySeries b = PolySeries::one(order + 1, one);
  for (int i = 2; i <= n && static_cast<std::size_t>(i) <= order; ++i)
    b[static_cast<std::size_t>(i)] = RatPoly::variable(ring, "b" + std::to_string(i));
  return b.derivative() * b.truncated(order).reciprocal();
}

RatPoly power_sum(int n_rank, int n) {
  if (n < 0) throw std::invalid_argument("power_sum: n must be >= 0");
  const RingPtr ring = rank_ring(n_rank);
  if (n == 0) return RatPoly(ring, Rat(n_rank));
  const PolySeries s = power_sum_series(n_rank, static_cast<std::size_t>(n));
  const RatPoly& c = s[static_cast<std::size_t>(n - 1)];
  return (n - 1) % 2 == 0 ? c : -c;
}

}  // namespace u3alg
