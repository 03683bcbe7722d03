#include "u3alg/rational.hpp"

#include <stdexcept>

namespace u3alg {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  // strip whitespace and a leading '+'
  std::string t;
  for (char c : s)
    if (c != ' ' && c != '\t') t.push_back(c);
  if (!t.empty() && t.front() == '+') t.erase(t.begin());
  if (t.empty()) throw std::invalid_argument("Rat::parse: empty string");
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("Rat::parse: bad rational '" + s + "'");
  if (q.get_den() == 0) throw std::domain_error("Rat::parse: zero denominator");
  q.canonicalize();
  return Rat(q);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(mpq_class(1) / q_);
}

Rat Rat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Rat result(1), base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Rat::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

Rat binomial(const Rat& top, unsigned k) {
  Rat r(1);
  for (unsigned i = 0; i < k; ++i) r *= (top - Rat(static_cast<long>(i)));
  return r / factorial(k);
}

}  // namespace u3alg
