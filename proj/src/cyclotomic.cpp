#include "u3alg/cyclotomic.hpp"

#include <stdexcept>

#include "u3alg/linalg.hpp"

namespace u3alg {

namespace {

// Reduces a degree <= 6 coefficient vector modulo x^4 - x^2 + 1.
CycNum::Coeffs reduce(std::array<Rat, 7>& d) {
  // x^6 = -1, x^5 = x^3 - x, x^4 = x^2 - 1
  d[0] -= d[6];
  d[3] += d[5];
  d[1] -= d[5];
  d[2] += d[4];
  d[0] -= d[4];
  return {d[0], d[1], d[2], d[3]};
}

}  // namespace

CycNum CycNum::constant(Constant name) {
  switch (name) {
    case Constant::sqrt3:
      return CycNum(Rat(), Rat(2), Rat(), Rat(-1));
    case Constant::i:
      return CycNum(Rat(), Rat(), Rat(), Rat(1));
    case Constant::sqrtm3:
      return CycNum(Rat(-1), Rat(), Rat(2), Rat());
    case Constant::zeta3:
      return CycNum(Rat(-1), Rat(), Rat(1), Rat());
    case Constant::zeta6:
      return CycNum(Rat(), Rat(), Rat(1), Rat());
  }
  throw std::invalid_argument("CycNum::constant: unknown constant");
}

CycNum CycNum::constant(std::string_view name) {
  if (name == "sqrt3") return constant(Constant::sqrt3);
  if (name == "i") return constant(Constant::i);
  if (name == "sqrtm3") return constant(Constant::sqrtm3);
  if (name == "zeta3") return constant(Constant::zeta3);
  if (name == "zeta6") return constant(Constant::zeta6);
  throw std::invalid_argument("CycNum::constant: unknown constant '" + std::string(name) + "'");
}

CycNum CycNum::gen_pow(long k) {
  k %= 12;
  if (k < 0) k += 12;
  CycNum r(1);
  const CycNum x = gen();
  for (long j = 0; j < k; ++j) r *= x;
  return r;
}

bool CycNum::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycNum::is_real() const { return conj() == *this; }

CycNum& CycNum::operator+=(const CycNum& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum& CycNum::operator*=(const Rat& r) {
  for (auto& c : c_) c *= r;
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.is_rational()) return *this *= o.c_[0];
  if (is_rational()) {
    const Rat s = c_[0];
    *this = o;
    return *this *= s;
  }
  std::array<Rat, 7> d;
  for (std::size_t i = 0; i < 4; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j)
      if (!o.c_[j].is_zero()) d[i + j] += c_[i] * o.c_[j];
  }
  c_ = reduce(d);
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inverse(); }

CycNum CycNum::operator-() const {
  CycNum r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycNum: division by zero");
  if (is_rational()) return CycNum(c_[0].inverse());
  // Columns of the multiplication-by-this matrix are this * x^j.
  Matrix<Rat> m(4, std::vector<Rat>(4));
  CycNum col(*this);
  const CycNum x = gen();
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t i = 0; i < 4; ++i) m[i][j] = col.c_[i];
    col *= x;
  }
  auto y = solve(m, std::vector<Rat>{Rat(1), Rat(), Rat(), Rat()});
  if (!y) throw std::logic_error("CycNum: singular multiplication matrix for nonzero element");
  return CycNum((*y)[0], (*y)[1], (*y)[2], (*y)[3]);
}

CycNum CycNum::conj() const {
  CycNum r(c_[0]);
  for (long k = 1; k < 4; ++k)
    if (!c_[k].is_zero()) r += gen_pow(-k) * c_[k];
  return r;
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(1), base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string CycNum::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += ",";
    s += "\"" + c_[i].to_string() + "\"";
  }
  return s + "]";
}

}  // namespace u3alg
