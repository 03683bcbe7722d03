#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "u3alg/cyclotomic.hpp"
#include "u3alg/invariants.hpp"
#include "u3alg/mumford.hpp"
#include "u3alg/poly.hpp"
#include "u3alg/rational.hpp"
#include "u3alg/spectrum.hpp"

namespace u3alg {

using nlohmann::json;

// Rat as "p/q"; CycNum as four such strings in the basis 1, x, x^2, x^3.
void to_json(json& j, const Rat& r);
void from_json(const json& j, Rat& r);
void to_json(json& j, const CycNum& z);
// Also accepts a single rational (string or integer).
void from_json(const json& j, CycNum& z);

// {"text": ..., "terms": [{"exponents": {var: e}, "coefficient": ...}]}
void to_json(json& j, const RatPoly& p);
void to_json(json& j, const CycPoly& p);

void to_json(json& j, const EigenTuple& t);
void to_json(json& j, const CheckResult& c);

// {"Q": [[...]], "K": [[...]], "c": [[...]], "w": [...]}; validated on read.
void to_json(json& j, const DonaldsonSpec& s);
void from_json(const json& j, DonaldsonSpec& s);

// "A_{-r},...,A_r" (odd length), e.g. "1,-1,1" for the trefoil.
AlexPoly parse_alex_poly(std::string_view text);
// "n1,n2,..."; "1" or "" for the trivial group.
FinAbGroup parse_group(std::string_view text);

}  // namespace u3alg
