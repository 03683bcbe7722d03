#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "u3alg/cyclotomic.hpp"
#include "u3alg/poly.hpp"
#include "u3alg/rational.hpp"

namespace u3alg {

template <class C>
class TruncSeries;

template <class T>
struct is_trunc_series : std::false_type {};
template <class C>
struct is_trunc_series<TruncSeries<C>> : std::true_type {};

template <class C>
bool is_zero(const TruncSeries<C>& s);
template <class C>
TruncSeries<C> inverse(const TruncSeries<C>& s);

// Additive identity shaped like `unit` (same ring, same inner order).
inline Rat zero_like(const Rat&) { return Rat(); }
inline CycNum zero_like(const CycNum&) { return CycNum(); }
template <class F>
Poly<F> zero_like(const Poly<F>& unit) {
  return Poly<F>(unit.ring());
}
template <class C>
TruncSeries<C> zero_like(const TruncSeries<C>& unit) {
  return TruncSeries<C>(unit.order(), unit.unit());
}

namespace series_detail {

template <class C>
std::string describe(const C& c) {
  return c.to_string();
}

}  // namespace series_detail

// Truncated power series sum_{n < order} c_n t^n. Coefficients past the
// order are unknown rather than zero, so binary operations keep the smaller
// order. The multiplicative unit of C travels with the series since a Poly
// has no ring-free one.
//
// TruncSeries<TruncSeries<CycNum>> is a two-variable series: outer variable
// t2, coefficients are series in the inner variable t3.
template <class C>
class TruncSeries {
 public:
  TruncSeries() = default;
  // Zero series known to `order` terms.
  TruncSeries(std::size_t order, C unit) : coeffs_(order, zero_like(unit)), unit_(std::move(unit)) {}
  TruncSeries(std::vector<C> coeffs, C unit) : coeffs_(std::move(coeffs)), unit_(std::move(unit)) {}

  static TruncSeries one(std::size_t order, const C& unit) { return constant(order, unit, unit); }
  static TruncSeries constant(std::size_t order, const C& unit, const C& c) { return monomial(order, unit, c, 0); }
  // c * t^k
  static TruncSeries monomial(std::size_t order, const C& unit, const C& c, std::size_t k) {
    TruncSeries s(order, unit);
    if (k < order) s.coeffs_[k] = c;
    return s;
  }

  std::size_t order() const { return coeffs_.size(); }
  const C& unit() const { return unit_; }
  const std::vector<C>& coeffs() const { return coeffs_; }
  const C& operator[](std::size_t n) const { return coeffs_.at(n); }
  C& operator[](std::size_t n) { return coeffs_.at(n); }
  // Zero past the order; callers that care must check order() themselves.
  C coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : zero_like(unit_); }
  const C& constant_term() const {
    if (coeffs_.empty()) throw std::logic_error("TruncSeries: order 0 series has no constant term");
    return coeffs_[0];
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const C& c) { return ::u3alg::is_zero(c); });
  }

  TruncSeries truncated(std::size_t order) const {
    TruncSeries r(*this);
    if (order < r.coeffs_.size()) r.coeffs_.resize(order);
    return r;
  }

  template <class Fn>
  TruncSeries map(Fn&& f) const {
    TruncSeries r(*this);
    for (auto& c : r.coeffs_) c = f(c);
    return r;
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    adopt(o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    adopt(o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  TruncSeries operator-() const {
    return map([](const C& c) { return C(-c); });
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t ord = std::min(a.order(), b.order());
    TruncSeries r(ord, ::u3alg::is_zero(a.unit_) ? b.unit_ : a.unit_);
    for (std::size_t i = 0; i < ord; ++i) {
      if (::u3alg::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j < ord; ++j) {
        if (::u3alg::is_zero(b.coeffs_[j])) continue;
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  // Coefficient-wise scaling by anything C multiplies with, including a
  // coefficient series of a nested series.
  template <class S>
  TruncSeries scaled(const S& s) const {
    return map([&](const C& c) { return C(c * s); });
  }
  // Scalars only (Rat, CycNum, Poly); nested series go through scaled().
  template <class S>
    requires(!is_trunc_series<S>::value)
  friend TruncSeries operator*(const TruncSeries& a, const S& s) {
    return a.scaled(s);
  }
  template <class S>
    requires(!is_trunc_series<S>::value)
  friend TruncSeries operator*(const S& s, const TruncSeries& a) {
    return a.scaled(s);
  }

  // Equal as truncated series: same order, same known coefficients.
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) return false;
    for (std::size_t n = 0; n < a.order(); ++n)
      if (!::u3alg::is_zero(C(a.coeffs_[n] - b.coeffs_[n]))) return false;
    return true;
  }

  TruncSeries pow(unsigned e) const {
    TruncSeries r = one(order(), unit_);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  // d/dt; the result is known to one fewer term.
  TruncSeries derivative() const {
    TruncSeries r(order() == 0 ? 0 : order() - 1, unit_);
    for (std::size_t n = 1; n < order(); ++n) r.coeffs_[n - 1] = C(coeffs_[n] * Rat(static_cast<long>(n)));
    return r;
  }

  TruncSeries reciprocal() const {
    const C& a0 = constant_term();
    C b0 = unit_;
    try {
      if (::u3alg::is_zero(a0)) throw std::domain_error("zero");
      b0 = inverse(a0);
    } catch (const std::domain_error&) {
      throw std::domain_error("TruncSeries::reciprocal: constant term " + series_detail::describe(a0) +
                              " is not a unit");
    }
    TruncSeries r(order(), unit_);
    r.coeffs_[0] = b0;
    for (std::size_t n = 1; n < order(); ++n) {
      C acc = zero_like(unit_);
      for (std::size_t k = 1; k <= n; ++k)
        if (!::u3alg::is_zero(coeffs_[k])) acc += coeffs_[k] * r.coeffs_[n - k];
      r.coeffs_[n] = -(b0 * acc);
    }
    return r;
  }

  // Scalar constant terms must vanish; a series-valued constant term S0
  // contributes exp(S0).
  TruncSeries exp() const {
    TruncSeries r(order(), unit_);
    if (order() == 0) return r;
    const C& s0 = coeffs_[0];
    if constexpr (is_trunc_series<C>::value) {
      r.coeffs_[0] = s0.exp();
    } else {
      if (!::u3alg::is_zero(s0))
        throw std::domain_error("TruncSeries::exp: constant term " + series_detail::describe(s0) +
                                " is not 0");
      r.coeffs_[0] = unit_;
    }
    // n E_n = sum_{k=1}^n k S_k E_{n-k}
    for (std::size_t n = 1; n < order(); ++n) {
      C acc = zero_like(unit_);
      for (std::size_t k = 1; k <= n; ++k) {
        if (::u3alg::is_zero(coeffs_[k])) continue;
        acc += C(coeffs_[k] * Rat(static_cast<long>(k))) * r.coeffs_[n - k];
      }
      r.coeffs_[n] = C(acc * Rat(1, static_cast<long>(n)));
    }
    return r;
  }

  // Scalar constant terms must equal 1; a series-valued constant term S0
  // contributes log(S0).
  TruncSeries log() const {
    TruncSeries r(order(), unit_);
    if (order() == 0) return r;
    const C& s0 = coeffs_[0];
    C inv0 = unit_;
    if constexpr (is_trunc_series<C>::value) {
      r.coeffs_[0] = s0.log();
      inv0 = s0.reciprocal();
    } else {
      if (!(s0 == unit_))
        throw std::domain_error("TruncSeries::log: constant term " + series_detail::describe(s0) +
                                " is not 1");
    }
    // S L' = S'  =>  n S0 L_n = n S_n - sum_{k=1}^{n-1} (n-k) S_k L_{n-k}
    for (std::size_t n = 1; n < order(); ++n) {
      C acc = C(coeffs_[n] * Rat(static_cast<long>(n)));
      for (std::size_t k = 1; k < n; ++k) {
        if (::u3alg::is_zero(coeffs_[k])) continue;
        acc -= C(coeffs_[k] * Rat(static_cast<long>(n - k))) * r.coeffs_[n - k];
      }
      r.coeffs_[n] = C(inv0 * acc * Rat(1, static_cast<long>(n)));
    }
    return r;
  }

  // s^e = exp(e log s).
  TruncSeries pow_rational(const Rat& e) const { return (log() * e).exp(); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
      if (n) s += ", ";
      s += series_detail::describe(coeffs_[n]);
    }
    return s + "] + O(t^" + std::to_string(coeffs_.size()) + ")";
  }

 private:
  void adopt(const TruncSeries& o) {
    if (o.order() < order()) coeffs_.resize(o.order());
    if (::u3alg::is_zero(unit_)) unit_ = o.unit_;
  }

  std::vector<C> coeffs_;
  C unit_{};
};

template <class C>
bool is_zero(const TruncSeries<C>& s) {
  return s.is_zero();
}

template <class C>
TruncSeries<C> inverse(const TruncSeries<C>& s) {
  return s.reciprocal();
}

using RatSeries = TruncSeries<Rat>;
using CycSeries = TruncSeries<CycNum>;
using PolySeries = TruncSeries<RatPoly>;
// Outer variable t2 (or s2), inner t3 (or s3).
using BiSeries = TruncSeries<CycSeries>;
using PolyBiSeries = TruncSeries<TruncSeries<CycPoly>>;

// Two-variable helpers over CycNum.
BiSeries bi_zero(std::size_t order2, std::size_t order3);
BiSeries bi_one(std::size_t order2, std::size_t order3);
// c * t2^i * t3^j
BiSeries bi_monomial(std::size_t order2, std::size_t order3, const CycNum& c, std::size_t i, std::size_t j);
// exp(a*t2 + b*t3)
BiSeries bi_exp_linear(std::size_t order2, std::size_t order3, const CycNum& a, const CycNum& b);
// d/dt3 applied to every inner series.
BiSeries bi_derivative_inner(const BiSeries& s);
const CycNum& bi_coeff(const BiSeries& s, std::size_t i, std::size_t j);

// Newton power sums: sum_{n>=1} (-t)^{n-1} p_n = B'(t)/B(t) with
// B(t) = 1 + sum_{i=2}^N b_i t^i over rank_ring(N), known to `order` terms.
PolySeries power_sum_series(int n, std::size_t order);
// p_n read off power_sum_series; p_0 = N.
RatPoly power_sum(int n_rank, int n);

}  // namespace u3alg
