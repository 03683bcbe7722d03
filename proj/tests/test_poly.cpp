#include <doctest.h>

#include <random>

#include "u3alg/poly.hpp"
#include "u3alg/series.hpp"

using namespace u3alg;

namespace {

RatPoly var(const RingPtr& r, const char* name) { return RatPoly::variable(r, name); }

RatPoly random_poly(std::mt19937_64& rng, const RingPtr& r, int terms) {
  std::uniform_int_distribution<int> e(0, 3), c(-5, 5);
  std::vector<RatPoly::Term> out;
  for (int n = 0; n < terms; ++n) {
    std::vector<Monomial::Exp> ex(r->size());
    for (auto& x : ex) x = e(rng);
    out.emplace_back(Monomial(*r, ex), Rat(c(rng)));
  }
  return RatPoly::from_terms(r, out);
}

Monomial random_monomial(std::mt19937_64& rng, const Ring& r) {
  std::uniform_int_distribution<int> e(0, 4);
  std::vector<Monomial::Exp> ex(r.size());
  for (auto& x : ex) x = e(rng);
  return Monomial(r, ex);
}

}  // namespace

TEST_CASE("monomial order examples") {
  const RingPtr r = quotient_ring3();
  const Monomial a2 = Monomial::variable(*r, 0), a3 = Monomial::variable(*r, 1), b2 = Monomial::variable(*r, 2);
  CHECK(compare(a3, b2) > 0);
  CHECK(compare(a2 * a2, a3) > 0);
  CHECK(compare(a2 * a2 * a2, b2) > 0);
  CHECK(compare(a2, a2) == 0);
}

TEST_CASE("monomial order is a total multiplicative order") {
  const RingPtr r = quotient_ring3();
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Monomial a = random_monomial(rng, *r), b = random_monomial(rng, *r), c = random_monomial(rng, *r);
    const auto ab = compare(a, b);
    CHECK((ab < 0) == (compare(b, a) > 0));
    CHECK((ab == 0) == (a == b));
    CHECK(compare(a * c, b * c) == ab);
    CHECK(compare(a * b, a) >= 0);
    if (compare(a, b) > 0 && compare(b, c) > 0) CHECK(compare(a, c) > 0);
  }
}

TEST_CASE("polynomial arithmetic") {
  const RingPtr r = quotient_ring3();
  const RatPoly a2 = var(r, "a2"), a3 = var(r, "a3"), b2 = var(r, "b2");
  CHECK(a2 * a2 == a2.pow(2));
  CHECK((a2 + b2) * (a2 - b2) == a2 * a2 - b2 * b2);
  const RatPoly p = a2 * b2 + a3 * a3;
  CHECK(p.leading_monomial() == (a3 * a3).leading_monomial());
  CHECK_FALSE(p.is_homogeneous());
  CHECK(p.degree() == 8);
  CHECK((a2 * a2 * b2 + a3 * a3).is_homogeneous());
  CHECK((a2 - a2).is_zero());
  CHECK(parse_poly(r, "a2^2*b2 - 3/2*a3 + 1") == a2 * a2 * b2 - RatPoly(r, Rat(3, 2)) * a3 + RatPoly(r, Rat(1)));
  CHECK(parse_poly(r, p.to_string()) == p);
  CHECK_THROWS(parse_poly(r, "a2 + q7"));
  CHECK_THROWS_AS(a2 + var(alpha_ring(), "a2"), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
  const RingPtr r = quotient_ring3();
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const RatPoly a = random_poly(rng, r, 4), b = random_poly(rng, r, 3), c = random_poly(rng, r, 3);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == RatPoly(r));
  }
}

TEST_CASE("truncated series examples") {
  const RatSeries t = RatSeries::monomial(4, Rat(1), Rat(1), 1);
  const RatSeries e = t.exp();
  CHECK(e == RatSeries({Rat(1), Rat(1), Rat(1, 2), Rat(1, 6)}, Rat(1)));

  const RingPtr r = rank_ring(3);
  const RatPoly one(r, Rat(1));
  const RatPoly b2 = var(r, "b2"), b3 = var(r, "b3");
  PolySeries s = PolySeries::one(5, one);
  s[2] = b2;
  const PolySeries lg = s.log();
  CHECK(lg[2] == b2);
  CHECK(lg[4] == b2 * b2 * RatPoly(r, Rat(-1, 2)));
  CHECK(lg[1].is_zero());
  CHECK(lg[3].is_zero());

  PolySeries u = PolySeries::one(4, one);
  u[2] = b2;
  u[3] = b3;
  const PolySeries cube_root = u.pow_rational(Rat(1, 3));
  CHECK(cube_root[0] == one);
  CHECK(cube_root[2] == b2 * RatPoly(r, Rat(1, 3)));
  CHECK(cube_root[3] == b3 * RatPoly(r, Rat(1, 3)));
  CHECK(cube_root.pow(3) == u);

  CHECK_THROWS_AS(RatSeries::one(3, Rat(1)).exp(), std::domain_error);
  CHECK_THROWS_AS(RatSeries(3, Rat(1)).log(), std::domain_error);
}

TEST_CASE("series identities on random input") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> c(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rat> v(7);
    for (std::size_t n = 1; n < v.size(); ++n) v[n] = Rat(c(rng), 1 + (trial % 3));
    const RatSeries s(v, Rat(1));
    CHECK(s.exp().log() == s);
    std::vector<Rat> w = v;
    w[0] = Rat(1);
    const RatSeries u(w, Rat(1));
    CHECK(u.log().exp() == u);
    CHECK(u.pow_rational(Rat(1, 2)) * u.pow_rational(Rat(2, 3)) == u.pow_rational(Rat(7, 6)));
    CHECK(u * u.reciprocal() == RatSeries::one(7, Rat(1)));
  }
}

TEST_CASE("power sums for rank 3") {
  const RingPtr r = rank_ring(3);
  CHECK(power_sum(3, 0) == RatPoly(r, Rat(3)));
  CHECK(power_sum(3, 1).is_zero());
  CHECK(power_sum(3, 2) == var(r, "b2") * RatPoly(r, Rat(-2)));
  CHECK(power_sum(3, 3) == var(r, "b3") * RatPoly(r, Rat(3)));
}

TEST_CASE("power sums against the logarithm of B(t)") {
  for (int N : {3, 4}) {
    const RingPtr r = rank_ring(N);
    const RatPoly one(r, Rat(1));
    const std::size_t order = 8;
    PolySeries b = PolySeries::one(order, one);
    for (int i = 2; i <= N; ++i) b[static_cast<std::size_t>(i)] = var(r, ("b" + std::to_string(i)).c_str());
    const PolySeries lg = b.log();
    for (std::size_t n = 1; n < order; ++n) {
      const Rat sign = (n % 2) ? Rat(1) : Rat(-1);
      CHECK(lg[n] == power_sum(N, static_cast<int>(n)) * RatPoly(r, sign / Rat(static_cast<long>(n))));
    }
  }
}
