#include <doctest.h>

#include <random>

#include "u3alg/cyclotomic.hpp"
#include "u3alg/rational.hpp"

using namespace u3alg;

namespace {

CycNum random_cyc(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  return CycNum(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
}

CycNum sqrt3() { return CycNum::constant(CycNum::Constant::sqrt3); }
CycNum i_unit() { return CycNum::constant(CycNum::Constant::i); }

}  // namespace

TEST_CASE("rational parsing and arithmetic") {
  CHECK(Rat::parse("3/6") == Rat(1, 2));
  CHECK(Rat::parse("-4") == Rat(-4));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(2, 3).inverse() == Rat(3, 2));
  CHECK(Rat(-2, 3).pow(-2) == Rat(9, 4));
  CHECK(factorial(5) == Rat(120));
  CHECK(binomial(Rat(1, 3), 2) == Rat(-1, 9));
  CHECK_THROWS_AS(Rat(0).inverse(), std::domain_error);
  CHECK_THROWS(Rat::parse("1/0"));
  CHECK_THROWS(Rat::parse("x"));
}

TEST_CASE("reduction by the twelfth cyclotomic polynomial") {
  const CycNum x = CycNum::gen();
  CHECK(x * x.pow(3) == x.pow(2) - CycNum(1));
  CHECK(x.pow(3) * x.pow(3) == CycNum(-1));
  const CycNum s = CycNum(2) * x - x.pow(3);
  CHECK(s * s == CycNum(3));
  CHECK(x.pow(12) == CycNum(1));
  CHECK(x.pow(6) == CycNum(-1));
}

TEST_CASE("named constants") {
  const CycNum z = CycNum::constant(CycNum::Constant::zeta3);
  const CycNum sm3 = CycNum::constant(CycNum::Constant::sqrtm3);
  CHECK(sqrt3() * sqrt3() == CycNum(3));
  CHECK(i_unit() * i_unit() == CycNum(-1));
  CHECK(z.pow(3) == CycNum(1));
  CHECK_FALSE(z == CycNum(1));
  CHECK(sm3 * sm3 == CycNum(-3));
  CHECK(sm3 == i_unit() * sqrt3());
  CHECK((CycNum(1) + z + z * z).is_zero());
  CHECK(CycNum::constant("zeta6").pow(2) == z);
  CHECK(CycNum::zeta3_pow(2) == z * z);
  CHECK(CycNum::zeta3_pow(-1) == z * z);
  CHECK_THROWS(CycNum::constant("pi"));
}

TEST_CASE("complex conjugation") {
  const CycNum z = CycNum::constant(CycNum::Constant::zeta3);
  CHECK(i_unit().conj() == -i_unit());
  CHECK(sqrt3().conj() == sqrt3());
  CHECK(z.conj() == z * z);
  CHECK(sqrt3().is_real());
  CHECK_FALSE(z.is_real());
  CHECK((z + z.conj()).is_real());
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const CycNum a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == CycNum(1));
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(CycNum().inverse(), std::domain_error);
}
