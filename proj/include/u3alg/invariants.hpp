#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "u3alg/cyclotomic.hpp"
#include "u3alg/rational.hpp"
#include "u3alg/series.hpp"

namespace u3alg {

using IntVec = std::vector<long>;
using IntMatrix = std::vector<IntVec>;
using RatVec = std::vector<Rat>;

// Basic classes K_i (as functionals on H_2), coefficients c_{i,j} and the
// bundle cycle w on a lattice with intersection form Q.
struct DonaldsonSpec {
  IntMatrix Q;
  std::vector<IntVec> K;
  std::vector<std::vector<CycNum>> c;  // |K| x |K|
  IntVec w;

  std::size_t rank() const { return Q.size(); }
};

// Throws std::invalid_argument naming the first violated condition: square
// symmetric Q, characteristic classes (K[l] = Q[l][l] mod 2), c real and
// symmetric, sizes consistent.
void validate(const DonaldsonSpec& spec);

// The K3 lattice 3H + 2(-E8), single class 0 with coefficient 1.
DonaldsonSpec k3_spec(IntVec w = {});
// Small random valid spec: rank <= 3, at most 3 classes, c in Q[sqrt3].
DonaldsonSpec random_spec(std::uint64_t seed);

Rat quadratic_form(const IntMatrix& Q, const RatVec& x);

// exp(Q(G) t2^2 / 2 - Q(L) t3^2) sum_{i,j} c_ij zeta3^{w.(K_i-K_j)/2}
//   exp(sqrt3/2 (K_i+K_j).G t2 + sqrtm3/2 (K_i-K_j).L t3), to `order` in both.
BiSeries structure_series(const DonaldsonSpec& spec, const RatVec& gamma, const RatVec& lambda, std::size_t order);

// Series for -w with t3 -> -t3 equals the original.
bool conjugation_symmetry_check(const DonaldsonSpec& spec, const RatVec& gamma, const RatVec& lambda,
                                std::size_t order);

// t3 -> -t3.
BiSeries flip_t3(const BiSeries& s);

enum class BlowupShift { plain, through_E };

// (1/3) exp(-t2^2/2 + t3^2) (cosh(sqrt3 t2) + 2 cos(sqrt3 t3)), or with
// cosh - cos - sqrt3 sin for through_E; from the Taylor expansions.
BiSeries blowup_factor(BlowupShift shift, std::size_t order);
// Same factor assembled from exponentials with the 1/6 and 1/3 weights.
BiSeries blowup_factor_exponential(BlowupShift shift, std::size_t order);

// Lattice extended by E (E.E = -1), classes K_i +- E, coefficients c/6 on
// equal signs and c/3 on opposite signs, w extended by 0 or 1.
DonaldsonSpec blow_up(const DonaldsonSpec& spec, BlowupShift shift);

struct BlowupReport {
  bool factor_forms_agree = false;
  bool identity_holds = false;
  std::size_t order = 0;
};

// structure_series(blow_up(spec), (G,1), (L,1)) = factor * structure_series(spec, G, L).
BlowupReport verify_blowup(const DonaldsonSpec& spec, const RatVec& gamma, const RatVec& lambda,
                           std::size_t order, BlowupShift shift);

struct EmbeddedSurface {
  int genus = 0;
  long self_intersection = 0;
  long pairing = 0;  // <K, Sigma>
};

// 2g - 2 >= |<K, Sigma>| + Sigma.Sigma. Requires Sigma.Sigma >= 0.
bool adjunction_check(const EmbeddedSurface& s);

struct EllipticExpansion {
  int g = 0;
  int wf = 0;
  std::map<std::pair<int, int>, CycNum> d;  // nonzero d_{a,b} only
  bool routes_agree = false;                // Taylor + solve vs. direct exponential product
  bool support_ok = false;                  // |a|+|b| <= g-1, a+b = g-1 mod 2
  CycNum d_top;                             // computed d_{g-1,0}
  Rat d_top_stated;                         // (2/3)^{g-1} as printed
};

// ((2/3) cosh(2 sqrt3 t2) - (2/3) cosh(-(2 pi i/3) wf + 2 sqrt3 i t3))^{g-1}
//   = sum d_{a,b} exp(2 sqrt3 a t2 + 2 sqrt3 i b t3).
EllipticExpansion elliptic_coefficients(int g, int wf);

struct FinAbGroup {
  std::vector<long> orders;  // H = sum Z/n_i
  long order() const;
};

enum class EulerMode { direct, orbit_formula };

long framed_euler_char(const FinAbGroup& h, int N, EulerMode mode);

// Symmetric Laurent polynomial sum A_j t^j with Delta(1) = +-1.
struct AlexPoly {
  std::map<long, long> coeffs;
  long radius() const;
  long at(long j) const;
};

// Throws std::invalid_argument unless symmetric with Delta(1) = +-1.
void validate(const AlexPoly& delta);

enum class AlexanderMode { product, coefficient_rule };
using LaurentCoeffs2 = std::map<std::pair<long, long>, long>;

// Nonzero coefficients A_{a,b} of Delta(t2 t3) Delta(t2 / t3), defined up to
// an overall sign.
LaurentCoeffs2 alexander_u3(const AlexPoly& delta, AlexanderMode mode);

// Conjectural c_{i,j} = 9 A_i A_j; checks 9 A_{a,b} = c_{(a+b)/2,(a-b)/2}.
struct ConjecturalCoefficients {
  std::map<std::pair<long, long>, long> c;
  bool consistent = false;
};
ConjecturalCoefficients conjectural_coefficients(const AlexPoly& delta);

}  // namespace u3alg
