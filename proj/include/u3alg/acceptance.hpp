#pragma once

#include <string>
#include <vector>

#include "u3alg/poly.hpp"

namespace u3alg {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

constexpr int kCriterionCount = 10;

// Runs acceptance criterion `id` (1..10).
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

// Quotient dimension of the homogeneous ideal generated by `gens` (in
// quotient_ring3) by ranks of Macaulay matrices, degree by degree; stops
// after two consecutive zero degrees. Independent of the Groebner code.
long macaulay_quotient_dimension(const std::vector<RatPoly>& gens);

}  // namespace u3alg
