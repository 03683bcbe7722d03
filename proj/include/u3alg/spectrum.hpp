#pragma once

#include <string>
#include <utility>
#include <vector>

#include "u3alg/cyclotomic.hpp"
#include "u3alg/poly.hpp"
#include "u3alg/series.hpp"

namespace u3alg {

// Simultaneous eigenvalues (alpha_2..alpha_N, beta_2..beta_N); four entries
// for rank 3.
struct EigenTuple {
  std::vector<CycNum> lambda;

  friend bool operator==(const EigenTuple& a, const EigenTuple& b) { return a.lambda == b.lambda; }
  std::string to_string() const;
};

// Total order on coefficient vectors, only for canonical sorting.
bool eigen_less(const EigenTuple& a, const EigenTuple& b);

// {(a, b) : |a| + |b| <= 2g - 2, a = b mod 2}, lexicographically sorted.
std::vector<std::pair<int, int>> c_lattice(int g);

struct LabelledEigenTuple {
  int k = 0, a = 0, b = 0;
  EigenTuple tuple;
};

// (sqrt3 z^k a, sqrtm3 z^{2k} b, 3 z^{2k}, 0) over k in {0,1,2} and (a,b) in
// c_lattice(g), z = zeta3, ordered by (k, a, b). Rejects d = 0 mod 3.
std::vector<LabelledEigenTuple> eigenvalue_set(int g, int d);
std::vector<EigenTuple> eigenvalue_tuples(int g, int d);

// Scales alpha_r by w^{r-1} and beta_r by w^r, w = exp(2 pi i j / 2N). Needs
// 2N | 12 so that w lies in Q(zeta12).
EigenTuple evaction(const EigenTuple& lambda, int N, int root_index);

// Relations a2 = sqrt3 z^k a + z^{2k} t2, a3 = sqrtm3 z^{2k} b - 2 z^k t3,
// b2 = 3 z^{2k}, b3 = 0.
struct DeformedModule {
  int k = 0, a = 0, b = 0;
  CycNum alpha2_const, alpha2_t2;
  CycNum alpha3_const, alpha3_t3;
  CycNum beta2, beta3;

  // t2 = t3 = 0.
  EigenTuple limit() const;
  // Action of epsilon, zeta3^{b + d k}.
  CycNum epsilon(int d) const;
  // Substitutes the relations into p (over rank_ring(3)); series in (t2, t3).
  BiSeries evaluate(const RatPoly& p, std::size_t order) const;
};

DeformedModule deformed_module(int k, int a, int b);

// Applies (d/ds2 - lambda2)(d/ds3 - lambda3) to exp(s2 lambda2 + s3 lambda3),
// lambda2 and lambda3 the t-dependent eigenvalues, and checks every s2^i s3^j
// coefficient with i, j < order vanishes.
bool annihilator_check(const DeformedModule& m, std::size_t order);

struct SimpleTypeCensus {
  int g = 0;
  int window_requested = 0;
  int window_used = 0;
  bool finite = false;
  bool stable = false;  // the next window adds nothing new to the ideal
  std::size_t count = 0;
  long expected = 0;  // (2g-1)^2
  std::size_t eigen_count = 0;
  bool match = false;  // stable, 3 count = |E|
  std::string status;
  double elapsed_ms = 0;
};

// Groebner census on ideal_generators(g, w) for w = window, window+1, ...
// until the next window's generators all reduce to zero or max_window is hit.
SimpleTypeCensus simple_type_census(int g, int window, int max_window);

}  // namespace u3alg
