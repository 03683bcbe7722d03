#include "u3alg/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace u3alg {

namespace {

template <class F>
json poly_json(const Poly<F>& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::object();
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) exps[p.ring()->name(i)] = m[i];
    terms.push_back({{"exponents", exps}, {"coefficient", c}});
  }
  return {{"text", p.to_string()}, {"terms", terms}};
}

std::vector<long> parse_long_list(std::string_view text, const char* what) {
  std::vector<long> out;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
      throw std::invalid_argument(std::string(what) + ": '" + item + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

}  // namespace

void to_json(json& j, const Rat& r) { j = r.to_string(); }

void from_json(const json& j, Rat& r) {
  if (j.is_number_integer()) {
    r = Rat(j.get<long>());
  } else if (j.is_string()) {
    r = Rat::parse(j.get<std::string>());
  } else {
    throw std::invalid_argument("expected a rational as \"p/q\" or an integer");
  }
}

void to_json(json& j, const CycNum& z) {
  j = json::array();
  for (std::size_t i = 0; i < 4; ++i) j.push_back(z[i].to_string());
}

void from_json(const json& j, CycNum& z) {
  if (j.is_array()) {
    if (j.size() != 4) throw std::invalid_argument("expected a CycNum as 4 rationals");
    z = CycNum(j[0].get<Rat>(), j[1].get<Rat>(), j[2].get<Rat>(), j[3].get<Rat>());
  } else {
    z = CycNum(j.get<Rat>());
  }
}

void to_json(json& j, const RatPoly& p) { j = poly_json(p); }
void to_json(json& j, const CycPoly& p) { j = poly_json(p); }

void to_json(json& j, const EigenTuple& t) { j = t.lambda; }

void to_json(json& j, const CheckResult& c) {
  j = {{"identity", c.identity}, {"inputs", c.inputs}, {"pass", c.pass}};
}

void to_json(json& j, const DonaldsonSpec& s) { j = {{"Q", s.Q}, {"K", s.K}, {"c", s.c}, {"w", s.w}}; }

void from_json(const json& j, DonaldsonSpec& s) {
  s.Q = j.at("Q").get<IntMatrix>();
  s.K = j.value("K", std::vector<IntVec>{});
  s.c = j.value("c", std::vector<std::vector<CycNum>>{});
  s.w = j.contains("w") ? j.at("w").get<IntVec>() : IntVec(s.Q.size(), 0);
  validate(s);
}

AlexPoly parse_alex_poly(std::string_view text) {
  const auto v = parse_long_list(text, "alexander polynomial");
  if (v.size() % 2 == 0) throw std::invalid_argument("alexander polynomial: need an odd number of coefficients A_{-r}..A_r");
  AlexPoly d;
  const long r = static_cast<long>(v.size() / 2);
  for (long j = -r; j <= r; ++j)
    if (v[static_cast<std::size_t>(j + r)] != 0) d.coeffs[j] = v[static_cast<std::size_t>(j + r)];
  validate(d);
  return d;
}

FinAbGroup parse_group(std::string_view text) {
  FinAbGroup h;
  if (text.empty()) return h;
  for (long n : parse_long_list(text, "group")) {
    if (n < 1) throw std::invalid_argument("group: cyclic orders must be >= 1");
    if (n > 1) h.orders.push_back(n);
  }
  return h;
}

}  // namespace u3alg
