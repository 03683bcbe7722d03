#pragma once

#include <string>
#include <vector>

#include "u3alg/groebner.hpp"
#include "u3alg/poly.hpp"
#include "u3alg/series.hpp"

namespace u3alg {

// Raised when two independent constructions of the same polynomial disagree.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// zeta_n, zbar_n and their half sum / half difference in Q[a2, a3].
struct SmallZeta {
  int n = 0;
  RatPoly zeta, zbar, sigma, sbar;
};

SmallZeta small_zeta(int n);
// small_zeta(0..n_max), sharing the recursion.
std::vector<SmallZeta> small_zetas(int n_max);

struct RelationParams {
  int g = 1;
  int k = 0;
  int N = 3;
  int d_prime = 1;
  bool dual = false;
};

// c = 1 - d'/N, or d'/N for the dual family.
Rat relation_constant(const RelationParams& p);

// G(t) over rank_ring(N), known to `order` terms.
PolySeries g_series(int N, std::size_t order);
// F_{g,k}(t); its t^m coefficient is zeta_m^{g,k} (or the dual).
PolySeries f_series(const RelationParams& p, std::size_t order);

// zeta_0 .. zeta_{m_max} from the recursion in m.
std::vector<RatPoly> zeta_table(const RelationParams& p, int m_max);
// Single value; 0 for m < 0.
RatPoly zeta_gk(int m, const RelationParams& p);
// Recursion values, checked against f_series; throws ConsistencyError.
std::vector<RatPoly> checked_zeta_table(const RelationParams& p, int m_max);

struct CheckResult {
  std::string identity;
  std::string inputs;
  bool pass = false;
};

bool all_pass(const std::vector<CheckResult>& checks);

// Genus shift and slant shift identities for m <= m_max, both families.
std::vector<CheckResult> verify_index_recursions(int g, int k, int N, int m_max);

enum class Parity { odd, even };

// Coefficients c_0..c_{i-1} (odd) or d_0..d_i (even) so that
// sum_j c_j a2^j sbar_{n+i-j} has leading monomial a2^{n-3i+2} a3^{2i-1}
// (odd), resp. sum_j d_j a2^j sigma_{n+i-j} has a2^{n-3i} a3^{2i} (even).
std::vector<Rat> vandermonde_combination(int n, int i, Parity parity);
RatPoly vandermonde_polynomial(int n, int i, Parity parity);
Monomial vandermonde_target(int n, int i, Parity parity);

// Membership checks of the two beta_2 lemmas (and their duals) after sending
// a_{>=4} and b_{>=3} to 0. Rejects k = N/2 - 1.
std::vector<CheckResult> verify_beta_lemmas(int g, int k, int m, int N);

// Image of a rank_ring(3) polynomial in quotient_ring3 (b3 -> 0).
RatPoly to_quotient3(const RatPoly& p);
// Drops a_{>=4}, b_{>=3}: rank_ring(N) -> quotient_ring3.
RatPoly to_quotient3_rank(const RatPoly& p, int N);

// Generators of the ideal whose quotient is bounded by (2g-1)^2, in
// quotient_ring3, with the m ranges extended by `window`.
std::vector<RatPoly> ideal_generators(int g, int window = 4);
// The generators ideal_generators(g, window + 1) adds to ideal_generators(g, window).
std::vector<RatPoly> extra_generators(int g, int window);

// {a2^i a3^j b2^k : k <= 2, 2i + 3j + 2k >= 4g - 2} and b2^3 in quotient_ring3.
MonomialIdeal lt_gen_target(int g);

// (zeta_n, zeta_{n+1}, zbar_{n+1}, zbar_{n+2}) in alpha_ring().
std::vector<RatPoly> small_ideal_generators(int n);

}  // namespace u3alg
