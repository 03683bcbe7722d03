#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace u3alg {

// Exact rational number, always kept in lowest terms with a positive
// denominator (mpq canonical form).
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  explicit Rat(const mpz_class& z) : q_(z) {}

  // Accepts "p", "-p", "p/q".
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const { return Rat(mpq_class(-q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rat inverse() const;
  Rat abs() const { return Rat(mpq_class(::abs(q_))); }
  Rat pow(long e) const;

  // "p/q", or "p" when q = 1.
  std::string to_string() const;

 private:
  mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

Rat factorial(unsigned n);
Rat binomial(const Rat& top, unsigned k);

// Field-interface hooks shared by generic code (Poly, TruncSeries, linalg).
inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline Rat inverse(const Rat& r) { return r.inverse(); }

}  // namespace u3alg
