#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "u3alg/cyclotomic.hpp"
#include "u3alg/monomial.hpp"
#include "u3alg/rational.hpp"

namespace u3alg {

std::string coeff_text(const Rat& c);
std::string coeff_text(const CycNum& c);

// Sparse multivariate polynomial over the field F. Terms are kept sorted
// with the leading (largest) monomial first and carry no zero coefficients.
// A default-constructed Poly is the zero polynomial of no particular ring and
// combines with polynomials of any ring.
template <class F>
class Poly {
 public:
  using Term = std::pair<Monomial, F>;

  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, const F& c) : ring_(std::move(ring)) {
    if (!::u3alg::is_zero(c)) terms_.emplace_back(Monomial(*ring_), c);
  }

  static Poly variable(const RingPtr& ring, std::string_view name) {
    return term(ring, Monomial::variable(*ring, ring->index_of(name)), F(1));
  }
  static Poly variable(const RingPtr& ring, std::size_t index) {
    return term(ring, Monomial::variable(*ring, index), F(1));
  }
  static Poly term(const RingPtr& ring, Monomial m, const F& c) {
    Poly p(ring);
    if (!::u3alg::is_zero(c)) p.terms_.emplace_back(std::move(m), c);
    return p;
  }
  // Builds from arbitrary (possibly repeated, unsorted) terms.
  static Poly from_terms(const RingPtr& ring, std::vector<Term> terms) {
    Poly p(ring);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  F constant_term() const {
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return F();
  }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("Poly: leading term of zero polynomial");
    return terms_.front().first;
  }
  const F& leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("Poly: leading term of zero polynomial");
    return terms_.front().second;
  }

  F coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return compare(t.first, k) > 0; });
    if (it != terms_.end() && it->first == m) return it->second;
    return F();
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.first.degree() != terms_.front().first.degree()) return false;
    return true;
  }
  long degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

  Poly& operator+=(const Poly& o) { return axpy(F(1), nullptr, o); }
  Poly& operator-=(const Poly& o) { return axpy(F(-1), nullptr, o); }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  // this += c * m * o  (m may be null meaning 1); the workhorse of reduction.
  Poly& axpy(const F& c, const Monomial* m, const Poly& o) {
    adopt_ring(o);
    if (o.terms_.empty() || ::u3alg::is_zero(c)) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    auto scaled = [&](const Term& t) { return Term(m ? t.first * *m : t.first, c * t.second); };
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end()) {
        out.push_back(std::move(*a++));
        continue;
      }
      Term bt = scaled(*b);
      if (a == terms_.end()) {
        out.push_back(std::move(bt));
        ++b;
        continue;
      }
      const auto ord = compare(a->first, bt.first);
      if (ord > 0) {
        out.push_back(std::move(*a++));
      } else if (ord < 0) {
        out.push_back(std::move(bt));
        ++b;
      } else {
        F s = a->second + bt.second;
        if (!::u3alg::is_zero(s)) out.emplace_back(std::move(a->first), std::move(s));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    r.adopt_ring(a);
    r.adopt_ring(b);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.size() == 1) return b.times_term(a.terms_[0].first, a.terms_[0].second);
    if (b.size() == 1) return a.times_term(b.terms_[0].first, b.terms_[0].second);
    std::map<Monomial, F, MonomialGreater> acc;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        auto [it, inserted] = acc.try_emplace(ma * mb, ca * cb);
        if (!inserted) it->second += ca * cb;
      }
    for (auto& [m, c] : acc)
      if (!::u3alg::is_zero(c)) r.terms_.emplace_back(m, std::move(c));
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  template <class S>
  Poly scaled(const S& s) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
      F v = c * s;
      if (!::u3alg::is_zero(v)) r.terms_.emplace_back(m, std::move(v));
    }
    return r;
  }
  friend Poly operator*(const Poly& p, const F& s) { return p.scaled(s); }
  friend Poly operator*(const F& s, const Poly& p) { return p.scaled(s); }

  Poly times_term(const Monomial& m, const F& c) const {
    Poly r(ring_);
    if (::u3alg::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [tm, tc] : terms_) r.terms_.emplace_back(tm * m, tc * c);
    return r;
  }

  Poly pow(unsigned e) const {
    Poly r(ring_, F(1));
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(inverse(leading_coeff()));
  }

  // Formal partial derivative with respect to variable `index`.
  Poly derivative(std::size_t index) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
      if (m[index] == 0) continue;
      auto e = m.exponents();
      const long k = e[index];
      e[index] -= 1;
      out.emplace_back(Monomial(*ring_, std::move(e)), c * F(Rat(k)));
    }
    return from_terms(ring_, std::move(out));
  }

  // Substitutes v_i -> sign_i * v_i for signs in {+1, -1}.
  Poly sign_substitution(const std::vector<int>& signs) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
      int s = 1;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (signs.at(i) < 0 && (m[i] & 1)) s = -s;
      r.terms_.emplace_back(m, s > 0 ? c : -c);
    }
    return r;
  }

  // Ring homomorphism into `target`: variable i goes to target variable
  // image[i], or to 0 when image[i] < 0.
  Poly remap(const RingPtr& target, const std::vector<int>& image) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
      std::vector<Monomial::Exp> e(target->size(), 0);
      bool killed = false;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (image.at(i) < 0) {
          killed = true;
          break;
        }
        e[static_cast<std::size_t>(image[i])] += m[i];
      }
      if (!killed) out.emplace_back(Monomial(*target, std::move(e)), c);
    }
    return from_terms(target, std::move(out));
  }

  // Evaluates in any commutative algebra R that accepts F scalars.
  template <class R, class Scale>
  R evaluate(const std::vector<R>& values, R zero, const R& one, Scale&& scale) const {
    R total = std::move(zero);
    std::vector<std::vector<R>> powers(values.size());
    for (const auto& [m, c] : terms_) {
      R t = one;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(one);
        while (static_cast<long>(pw.size()) <= m[i]) pw.push_back(pw.back() * values[i]);
        t = t * pw[static_cast<std::size_t>(m[i])];
      }
      total = total + scale(t, c);
    }
    return total;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.terms_.empty() && !same_ring(a.ring_, b.ring_)) return false;
    return a.terms_ == b.terms_;
  }

  // Canonical text, e.g. "a2^2*b2 - 3/2*a3"; "0" for the zero polynomial.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string ct = coeff_text(c);
      bool neg = !ct.empty() && ct[0] == '-';
      if (neg) ct.erase(0, 1);
      if (first) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      first = false;
      if (m.is_one()) {
        s += ct;
      } else {
        if (ct != "1") s += ct + "*";
        s += m.to_string(*ring_);
      }
    }
    return s;
  }

 private:
  void adopt_ring(const Poly& o) {
    if (!ring_) {
      ring_ = o.ring_;
    } else if (o.ring_ && !same_ring(ring_, o.ring_)) {
      throw std::invalid_argument("Poly: incompatible variable sets");
    }
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return compare(a.first, b.first) > 0; });
    std::vector<Term> out;
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const Term& t) { return ::u3alg::is_zero(t.second); });
    terms_ = std::move(out);
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

template <class F>
bool is_zero(const Poly<F>& p) {
  return p.is_zero();
}

// Polynomials are invertible only when constant and nonzero.
template <class F>
Poly<F> inverse(const Poly<F>& p) {
  if (!p.is_constant() || p.is_zero())
    throw std::domain_error("Poly: " + p.to_string() + " is not a unit");
  return Poly<F>(p.ring(), inverse(p.constant_term()));
}

using RatPoly = Poly<Rat>;
using CycPoly = Poly<CycNum>;

// Parses the canonical text form (rational coefficients), e.g.
// "a2^2*b2 - 3/2*a3 + 1".
RatPoly parse_poly(const RingPtr& ring, std::string_view text);

CycPoly to_cyc(const RatPoly& p);

}  // namespace u3alg
