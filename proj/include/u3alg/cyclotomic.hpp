#pragma once

#include <array>
#include <ostream>
#include <string>
#include <string_view>

#include "u3alg/rational.hpp"

namespace u3alg {

// Element of Q(zeta_12) = Q[x]/(x^4 - x^2 + 1), x = e^{i pi/6}, stored in
// the basis {1, x, x^2, x^3}. Contains sqrt(3), i, sqrt(-3) and the cube
// roots of unity.
class CycNum {
 public:
  using Coeffs = std::array<Rat, 4>;

  CycNum() = default;
  CycNum(const Rat& r) : c_{r, Rat(), Rat(), Rat()} {}  // NOLINT(google-explicit-constructor)
  CycNum(long v) : CycNum(Rat(v)) {}                     // NOLINT(google-explicit-constructor)
  CycNum(int v) : CycNum(Rat(v)) {}                      // NOLINT(google-explicit-constructor)
  explicit CycNum(Coeffs c) : c_(std::move(c)) {}
  CycNum(Rat c0, Rat c1, Rat c2, Rat c3) : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  enum class Constant { sqrt3, i, sqrtm3, zeta3, zeta6 };
  static CycNum constant(Constant name);
  // Accepts "sqrt3", "i", "sqrtm3", "zeta3", "zeta6"; throws otherwise.
  static CycNum constant(std::string_view name);
  static CycNum gen() { return CycNum(Rat(), Rat(1), Rat(), Rat()); }
  // x^k for any integer k (x has order 12).
  static CycNum gen_pow(long k);
  // e^{2 pi i k / 3}
  static CycNum zeta3_pow(long k) { return gen_pow(4 * k); }

  const Coeffs& coeffs() const { return c_; }
  const Rat& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const;
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
  // Fixed by complex conjugation, i.e. lies in Q(sqrt 3).
  bool is_real() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(const Rat& r);
  CycNum& operator/=(const CycNum& o);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator*(CycNum a, const Rat& b) { return a *= b; }
  friend CycNum operator*(const Rat& b, CycNum a) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  CycNum operator-() const;

  friend bool operator==(const CycNum& a, const CycNum& b) { return a.c_ == b.c_; }

  CycNum inverse() const;
  CycNum conj() const;
  CycNum pow(long e) const;

  // JSON-ish text: ["c0","c1","c2","c3"].
  std::string to_string() const;

 private:
  Coeffs c_;
};

inline std::ostream& operator<<(std::ostream& os, const CycNum& z) { return os << z.to_string(); }

inline bool is_zero(const CycNum& z) { return z.is_zero(); }
inline CycNum inverse(const CycNum& z) { return z.inverse(); }
inline CycNum conj(const CycNum& z) { return z.conj(); }
inline Rat conj(const Rat& r) { return r; }

}  // namespace u3alg
