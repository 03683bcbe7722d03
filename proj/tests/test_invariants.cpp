#include <doctest.h>

#include <random>

#include "u3alg/invariants.hpp"

using namespace u3alg;

namespace {

RatVec random_vec(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-3, 3);
  RatVec v(n);
  for (auto& x : v) x = Rat(d(rng), 2);
  return v;
}

BiSeries gaussian(const Rat& c2, const Rat& c3, std::size_t order) {
  return (bi_monomial(order, order, CycNum(c2), 2, 0) + bi_monomial(order, order, CycNum(c3), 0, 2)).exp();
}

AlexPoly alex(std::initializer_list<long> coeffs) {
  AlexPoly p;
  const long r = static_cast<long>(coeffs.size() / 2);
  long j = -r;
  for (long c : coeffs) {
    if (c) p.coeffs[j] = c;
    ++j;
  }
  return p;
}

AlexPoly random_alex(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> rad(0, 4), c(-3, 3);
  const long r = rad(rng);
  AlexPoly p;
  long sum = 0;
  for (long j = 1; j <= r; ++j) {
    const long v = c(rng);
    if (v) p.coeffs[j] = p.coeffs[-j] = v;
    sum += 2 * v;
  }
  // A_0 chosen so Delta(1) = +-1.
  const long a0 = (rng() & 1 ? 1 : -1) - sum;
  if (a0) p.coeffs[0] = a0;
  return p;
}

}  // namespace

TEST_CASE("K3 structure series is a Gaussian") {
  const DonaldsonSpec k3 = k3_spec();
  CHECK(k3.rank() == 22);
  std::mt19937_64 rng(1);
  const RatVec gamma = random_vec(rng, 22), lambda = random_vec(rng, 22);
  const std::size_t order = 6;
  const BiSeries s = structure_series(k3, gamma, lambda, order);
  CHECK(s == gaussian(quadratic_form(k3.Q, gamma) / Rat(2), -quadratic_form(k3.Q, lambda), order));
}

TEST_CASE("empty class set gives zero") {
  DonaldsonSpec spec;
  spec.Q = {{1, 0}, {0, -1}};
  spec.w = {0, 1};
  CHECK(structure_series(spec, {Rat(1), Rat(2)}, {Rat(0), Rat(1)}, 5).is_zero());
  const auto rep = verify_blowup(spec, {Rat(1), Rat(2)}, {Rat(0), Rat(1)}, 5, BlowupShift::plain);
  CHECK(rep.identity_holds);
}

TEST_CASE("spec validation") {
  DonaldsonSpec bad = k3_spec();
  bad.K[0][0] = 1;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  DonaldsonSpec asym;
  asym.Q = {{1, 1}, {0, 1}};
  asym.w = {0, 0};
  CHECK_THROWS_AS(validate(asym), std::invalid_argument);
  DonaldsonSpec cplx;
  cplx.Q = {{1}};
  cplx.K = {{1}};
  cplx.c = {{CycNum::constant(CycNum::Constant::i)}};
  cplx.w = {0};
  CHECK_THROWS_AS(validate(cplx), std::invalid_argument);
}

TEST_CASE("blowup factor") {
  const BiSeries plain = blowup_factor(BlowupShift::plain, 8);
  const BiSeries through = blowup_factor(BlowupShift::through_E, 8);
  CHECK(bi_coeff(plain, 0, 0) == CycNum(1));
  CHECK(bi_coeff(through, 0, 0).is_zero());
  CHECK(plain == blowup_factor_exponential(BlowupShift::plain, 8));
  CHECK(through == blowup_factor_exponential(BlowupShift::through_E, 8));
  // 1 + t2^2/2 - t3^2 times 1 - t2^2/2 + t3^2
  CHECK(bi_coeff(plain, 2, 0) == CycNum(Rat(0)));
  CHECK(bi_coeff(plain, 0, 2) == CycNum(Rat(0)));
}

TEST_CASE("blowup identity") {
  std::mt19937_64 rng(2);
  const DonaldsonSpec k3 = k3_spec();
  const RatVec g = random_vec(rng, 22), l = random_vec(rng, 22);
  for (auto shift : {BlowupShift::plain, BlowupShift::through_E}) {
    const auto rep = verify_blowup(k3, g, l, 8, shift);
    CHECK(rep.factor_forms_agree);
    CHECK(rep.identity_holds);
  }
  const DonaldsonSpec up = blow_up(k3, BlowupShift::through_E);
  CHECK(up.rank() == 23);
  CHECK(up.Q[22][22] == -1);
  CHECK(up.w.back() == 1);
  CHECK(up.K.size() == 2);
}

TEST_CASE("properties on random specs") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const DonaldsonSpec spec = random_spec(seed);
    CHECK_NOTHROW(validate(spec));
    const RatVec g = random_vec(rng, spec.rank()), l = random_vec(rng, spec.rank());
    CHECK(conjugation_symmetry_check(spec, g, l, 6));
    CHECK(flip_t3(flip_t3(structure_series(spec, g, l, 5))) == structure_series(spec, g, l, 5));
    for (auto shift : {BlowupShift::plain, BlowupShift::through_E})
      CHECK(verify_blowup(spec, g, l, 6, shift).identity_holds);
  }
}

TEST_CASE("adjunction inequality") {
  CHECK(adjunction_check({1, 0, 0}));
  CHECK_FALSE(adjunction_check({0, 0, 0}));
  CHECK_FALSE(adjunction_check({0, 3, 1}));
  for (int g = 1; g <= 5; ++g) {
    CHECK(adjunction_check({g, 0, 2 * g - 2}));
    CHECK(adjunction_check({g, 0, -(2 * g - 2)}));
    CHECK_FALSE(adjunction_check({g, 1, 2 * g - 2}));
  }
  CHECK_THROWS_AS(adjunction_check({2, -1, 0}), std::invalid_argument);
}

TEST_CASE("elliptic coefficients") {
  const auto e1 = elliptic_coefficients(1, 0);
  CHECK(e1.d.size() == 1);
  CHECK(e1.d.at({0, 0}) == CycNum(1));
  const auto e2 = elliptic_coefficients(2, 0);
  CHECK(e2.d.at({1, 0}) == CycNum(Rat(1, 3)));
  CHECK(e2.d.at({-1, 0}) == CycNum(Rat(1, 3)));
  CHECK(e2.d.at({0, 1}) == CycNum(Rat(-1, 3)));
  CHECK(e2.d.at({0, -1}) == CycNum(Rat(-1, 3)));
  CHECK(e2.d_top_stated == Rat(2, 3));
  for (int g = 1; g <= 5; ++g)
    for (int wf = 0; wf < 3; ++wf) {
      const auto e = elliptic_coefficients(g, wf);
      CHECK(e.routes_agree);
      CHECK(e.support_ok);
      CHECK(e.d_top == CycNum(Rat(1, 3).pow(g - 1)));
    }
}

TEST_CASE("framed Euler characteristic") {
  CHECK(framed_euler_char({{2}}, 2, EulerMode::orbit_formula) == 2);
  CHECK(framed_euler_char({{2}}, 3, EulerMode::orbit_formula) == 4);
  CHECK(framed_euler_char({{2}}, 3, EulerMode::direct) == 4);
  for (int N = 2; N <= 5; ++N) CHECK(framed_euler_char({{}}, N, EulerMode::orbit_formula) == 1);
  const std::vector<std::vector<long>> groups = {{3}, {5}, {2, 2}, {2, 3}, {4}, {6}, {3, 3}};
  for (const auto& h : groups)
    for (int N = 2; N <= 4; ++N)
      CHECK(framed_euler_char({h}, N, EulerMode::orbit_formula) == framed_euler_char({h}, N, EulerMode::direct));
}

TEST_CASE("Alexander examples") {
  const auto unknot = alexander_u3(alex({1}), AlexanderMode::product);
  CHECK(unknot == LaurentCoeffs2{{{0, 0}, 1}});
  const AlexPoly trefoil = alex({1, -1, 1});
  const auto t = alexander_u3(trefoil, AlexanderMode::product);
  CHECK(t.at({0, 0}) == 1);
  CHECK(t.at({1, 1}) == -1);
  CHECK(t.at({2, 0}) == 1);
  CHECK(t.at({0, 2}) == 1);
  CHECK(t == alexander_u3(trefoil, AlexanderMode::coefficient_rule));
  CHECK_THROWS_AS(validate(alex({1, -1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(validate(alex({1, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(alexander_u3(alex({2, -1, 0}), AlexanderMode::product), std::invalid_argument);
  const auto conj = conjectural_coefficients(trefoil);
  CHECK(conj.consistent);
  CHECK(conj.c.at({1, 1}) == 9);
}

TEST_CASE("Alexander modes agree on random polynomials") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const AlexPoly d = random_alex(rng);
    CHECK_NOTHROW(validate(d));
    const auto p = alexander_u3(d, AlexanderMode::product);
    CHECK(p == alexander_u3(d, AlexanderMode::coefficient_rule));
    for (const auto& [ab, v] : p) {
      const auto [a, b] = ab;
      CHECK(p.at({-a, -b}) == v);
      CHECK(p.at({a, -b}) == v);
      CHECK(std::abs(a) + std::abs(b) <= 2 * d.radius());
    }
  }
}
