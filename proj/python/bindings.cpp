#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "u3alg/acceptance.hpp"
#include "u3alg/cli.hpp"
#include "u3alg/groebner.hpp"
#include "u3alg/invariants.hpp"
#include "u3alg/json_io.hpp"
#include "u3alg/mumford.hpp"
#include "u3alg/spectrum.hpp"

namespace py = pybind11;
using namespace u3alg;

namespace {

// Coefficients in the basis 1, x, x^2, x^3 of Q(zeta12), x = exp(pi i / 6).
std::vector<std::string> cyc_strings(const CycNum& z) {
  std::vector<std::string> out;
  for (const auto& c : z.coeffs()) out.push_back(c.to_string());
  return out;
}

py::dict census(int g, int window, int max_window) {
  const auto s = simple_type_census(g, window, max_window);
  py::dict d;
  d["g"] = s.g;
  d["window_used"] = s.window_used;
  d["count"] = s.count;
  d["expected"] = s.expected;
  d["eigen_count"] = s.eigen_count;
  d["stable"] = s.stable;
  d["match"] = s.match;
  d["status"] = s.status;
  return d;
}

std::vector<py::dict> eigenvalues(int g, int d) {
  std::vector<py::dict> out;
  for (const auto& e : eigenvalue_set(g, d)) {
    py::dict r;
    r["k"] = e.k;
    r["a"] = e.a;
    r["b"] = e.b;
    std::vector<std::vector<std::string>> lam;
    for (const auto& z : e.tuple.lambda) lam.push_back(cyc_strings(z));
    r["lambda"] = lam;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::string> zetas(int g, int k, int N, int d_prime, bool dual, int m_max) {
  std::vector<std::string> out;
  for (const auto& p : checked_zeta_table({g, k, N, d_prime, dual}, m_max)) out.push_back(p.to_string());
  return out;
}

py::dict elliptic(int g, int wf) {
  const auto e = elliptic_coefficients(g, wf);
  py::dict coeffs;
  for (const auto& [ab, v] : e.d) coeffs[py::make_tuple(ab.first, ab.second)] = cyc_strings(v);
  py::dict d;
  d["coefficients"] = coeffs;
  d["routes_agree"] = e.routes_agree;
  d["support_ok"] = e.support_ok;
  d["d_top"] = cyc_strings(e.d_top);
  d["d_top_stated"] = e.d_top_stated.to_string();
  return d;
}

long euler(const std::vector<long>& orders, int N, const std::string& mode) {
  if (mode != "direct" && mode != "orbit") throw std::invalid_argument("mode must be 'direct' or 'orbit'");
  return framed_euler_char({orders}, N, mode == "direct" ? EulerMode::direct : EulerMode::orbit_formula);
}

std::map<std::pair<long, long>, long> alexander(const std::vector<long>& coeffs, const std::string& mode) {
  if (mode != "product" && mode != "rule") throw std::invalid_argument("mode must be 'product' or 'rule'");
  if (coeffs.size() % 2 == 0) throw std::invalid_argument("need an odd number of coefficients A_-r..A_r");
  AlexPoly p;
  const long r = static_cast<long>(coeffs.size() / 2);
  for (long j = -r; j <= r; ++j)
    if (coeffs[static_cast<std::size_t>(j + r)]) p.coeffs[j] = coeffs[static_cast<std::size_t>(j + r)];
  return alexander_u3(p, mode == "product" ? AlexanderMode::product : AlexanderMode::coefficient_rule);
}

py::dict blowup(const std::string& spec_json, const std::vector<std::string>& gamma,
                const std::vector<std::string>& lambda, std::size_t order, bool through_e) {
  const DonaldsonSpec spec = json::parse(spec_json).get<DonaldsonSpec>();
  RatVec g, l;
  for (const auto& s : gamma) g.push_back(Rat::parse(s));
  for (const auto& s : lambda) l.push_back(Rat::parse(s));
  if (g.size() != spec.rank() || l.size() != spec.rank()) throw std::invalid_argument("gamma and lambda need length b");
  const auto r = verify_blowup(spec, g, l, order, through_e ? BlowupShift::through_E : BlowupShift::plain);
  py::dict d;
  d["factor_forms_agree"] = r.factor_forms_agree;
  d["identity_holds"] = r.identity_holds;
  return d;
}

std::vector<py::dict> acceptance() {
  std::vector<py::dict> out;
  for (const auto& c : run_acceptance()) {
    py::dict d;
    d["id"] = c.id;
    d["title"] = c.title;
    d["pass"] = c.pass;
    d["detail"] = c.detail;
    out.push_back(std::move(d));
  }
  return out;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact U(3) Floer relation, spectrum and invariant checks";
  m.def("simple_type_census", &census, py::arg("g"), py::arg("window") = 0, py::arg("max_window") = 8);
  m.def("eigenvalue_set", &eigenvalues, py::arg("g"), py::arg("d") = 1);
  m.def("c_lattice", &c_lattice, py::arg("g"));
  m.def("zeta_table", &zetas, py::arg("g"), py::arg("k"), py::arg("N") = 3, py::arg("d_prime") = 1,
        py::arg("dual") = false, py::arg("m_max") = 6);
  m.def("lattice_count", [](long n) { return lattice_count(n, LatticeMode::closed_form); }, py::arg("n"));
  m.def("elliptic_coefficients", &elliptic, py::arg("g"), py::arg("wf") = 0);
  m.def("framed_euler_char", &euler, py::arg("orders"), py::arg("N"), py::arg("mode") = "direct");
  m.def("alexander_u3", &alexander, py::arg("coeffs"), py::arg("mode") = "product");
  m.def("verify_blowup", &blowup, py::arg("spec_json"), py::arg("gamma"), py::arg("lambda_"), py::arg("order") = 6,
        py::arg("through_e") = false);
  m.def("k3_spec_json", [] { return json(k3_spec()).dump(); });
  m.def("acceptance", &acceptance);
  m.def("run_cli", &run_cli, py::arg("args"));
}
