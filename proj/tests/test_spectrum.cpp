#include <doctest.h>

#include <algorithm>
#include <set>

#include "u3alg/spectrum.hpp"

using namespace u3alg;

namespace {

std::vector<EigenTuple> sorted(std::vector<EigenTuple> v) {
  std::sort(v.begin(), v.end(), eigen_less);
  return v;
}

const CycNum kSqrt3 = CycNum::constant(CycNum::Constant::sqrt3);

}  // namespace

TEST_CASE("c lattice") {
  CHECK(c_lattice(1) == std::vector<std::pair<int, int>>{{0, 0}});
  const auto c2 = c_lattice(2);
  const std::set<std::pair<int, int>> expected = {{0, 0}, {2, 0}, {-2, 0}, {0, 2}, {0, -2},
                                                  {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  CHECK(std::set<std::pair<int, int>>(c2.begin(), c2.end()) == expected);
  for (int g = 1; g <= 10; ++g) {
    const auto c = c_lattice(g);
    CHECK(static_cast<long>(c.size()) == (2L * g - 1) * (2L * g - 1));
    const std::set<std::pair<int, int>> s(c.begin(), c.end());
    for (auto [a, b] : c) {
      CHECK(s.count({-a, b}));
      CHECK(s.count({a, -b}));
      CHECK(s.count({b, a}));
    }
  }
}

TEST_CASE("eigenvalue sets") {
  const auto e1 = eigenvalue_tuples(1, 1);
  REQUIRE(e1.size() == 3);
  for (int k = 0; k < 3; ++k) {
    const EigenTuple want{{CycNum(), CycNum(), CycNum(3) * CycNum::zeta3_pow(2 * k), CycNum()}};
    CHECK(std::find(e1.begin(), e1.end(), want) != e1.end());
  }
  CHECK(eigenvalue_tuples(2, 1).size() == 27);
  for (int g = 1; g <= 10; ++g)
    for (int d : {1, 2}) {
      const auto e = eigenvalue_tuples(g, d);
      CHECK(static_cast<long>(e.size()) == 3L * (2 * g - 1) * (2 * g - 1));
      for (const auto& t : e) {
        CHECK(t.lambda[2].pow(3) == CycNum(27));
        CHECK(t.lambda[3].is_zero());
      }
      const auto s = sorted(e);
      CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
    }
  CHECK_THROWS_AS(eigenvalue_set(2, 3), std::invalid_argument);
}

TEST_CASE("root of unity action") {
  const auto e = eigenvalue_tuples(3, 1);
  for (const auto& t : e) CHECK(evaction(t, 3, 0) == t);
  const auto base = sorted(e);
  for (int j = 0; j < 6; ++j) {
    std::vector<EigenTuple> image;
    for (const auto& t : e) image.push_back(evaction(t, 3, j));
    CHECK(sorted(image) == base);
  }
  for (const auto& t : e) {
    CHECK(evaction(evaction(t, 3, 1), 3, 1) == evaction(t, 3, 2));
    const EigenTuple z = evaction(t, 3, 2);
    CHECK(z.lambda[0] == t.lambda[0] * CycNum::zeta3_pow(1));
    CHECK(z.lambda[2] == t.lambda[2] * CycNum::zeta3_pow(2));
  }
}

TEST_CASE("deformed modules") {
  for (int g = 1; g <= 4; ++g) {
    const auto lim = deformed_module(0, 2 * g - 2, 0).limit();
    CHECK(lim == EigenTuple{{kSqrt3 * CycNum(2 * g - 2), CycNum(), CycNum(3), CycNum()}});
  }
  const RingPtr r = rank_ring(3);
  const RatPoly cube = RatPoly::variable(r, "b2").pow(3) - RatPoly(r, Rat(27));
  for (int k = 0; k < 3; ++k) CHECK(deformed_module(k, 1, -1).evaluate(cube, 4).is_zero());

  const auto e = eigenvalue_set(2, 1);
  const auto tuples = sorted(eigenvalue_tuples(2, 1));
  for (const auto& l : e) {
    const DeformedModule m = deformed_module(l.k, l.a, l.b);
    CHECK(m.limit() == l.tuple);
    CHECK(std::binary_search(tuples.begin(), tuples.end(), m.limit(), eigen_less));
    CHECK(m.epsilon(1) == CycNum::zeta3_pow(l.b + l.k));
    CHECK(annihilator_check(m, 6));
  }
}

TEST_CASE("deformed evaluation of a2") {
  const DeformedModule m = deformed_module(1, 2, 0);
  const BiSeries s = m.evaluate(RatPoly::variable(rank_ring(3), "a2"), 3);
  CHECK(bi_coeff(s, 0, 0) == kSqrt3 * CycNum(2) * CycNum::zeta3_pow(1));
  CHECK(bi_coeff(s, 1, 0) == CycNum::zeta3_pow(2));
  CHECK(bi_coeff(s, 0, 1).is_zero());
}

TEST_CASE("simple type census") {
  const auto c1 = simple_type_census(1, 0, 4);
  CHECK(c1.count == 1);
  CHECK(c1.match);
  const auto c2 = simple_type_census(2, 0, 4);
  CHECK(c2.count == 9);
  CHECK(c2.expected == 9);
  CHECK(c2.eigen_count == 27);
  CHECK(c2.match);
  CHECK(c2.stable);
}
