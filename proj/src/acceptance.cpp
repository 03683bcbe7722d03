#include "u3alg/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "u3alg/groebner.hpp"
#include "u3alg/invariants.hpp"
#include "u3alg/linalg.hpp"
#include "u3alg/mumford.hpp"
#include "u3alg/spectrum.hpp"

namespace u3alg {

namespace {

std::vector<Monomial> monomials_of_degree(const Ring& ring, long d) {
  std::vector<Monomial> out;
  std::vector<Monomial::Exp> e(ring.size(), 0);
  auto rec = [&](auto&& self, std::size_t v, long left) -> void {
    if (v + 1 == ring.size()) {
      if (left % ring.weight(v) == 0) {
        e[v] = static_cast<Monomial::Exp>(left / ring.weight(v));
        out.emplace_back(ring, e);
      }
      return;
    }
    for (long x = 0; x * ring.weight(v) <= left; ++x) {
      e[v] = static_cast<Monomial::Exp>(x);
      self(self, v + 1, left - x * ring.weight(v));
    }
  };
  if (d >= 0 && ring.size() > 0) rec(rec, 0, d);
  return out;
}

std::string join_ints(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

using Clock = std::chrono::steady_clock;

CriterionResult criterion_dimension() {
  CriterionResult r{1, "dimension census 1, 9, 25, 49 for g = 1..4", true, "", 0};
  const long expected[] = {1, 9, 25, 49};
  std::ostringstream os;
  for (int g = 1; g <= 4; ++g) {
    const auto c = simple_type_census(g, 0, 8);
    const long oracle = c.stable ? macaulay_quotient_dimension(ideal_generators(g, c.window_used)) : -1;
    const bool ok = c.match && static_cast<long>(c.count) == expected[g - 1] && oracle == expected[g - 1];
    r.pass = r.pass && ok;
    os << "g=" << g << " count=" << c.count << " macaulay=" << oracle << " window=" << c.window_used
       << " status=" << c.status << (ok ? "" : " MISMATCH") << "; ";
  }
  r.detail = os.str();
  return r;
}

CriterionResult criterion_relations() {
  CriterionResult r{2, "recursion vs generating function, N=3, g<=4, k<=g, m<=3g+4", true, "", 0};
  long checked = 0;
  std::string bad;
  for (int g = 1; g <= 4; ++g)
    for (int k = 0; k <= g; ++k)
      for (bool dual : {false, true}) {
        const RelationParams p{g, k, 3, 1, dual};
        const int m_max = 3 * g + 4;
        const auto z = zeta_table(p, m_max);
        const auto f = f_series(p, static_cast<std::size_t>(m_max + 1));
        for (int m = 0; m <= m_max; ++m, ++checked)
          if (!(z[static_cast<std::size_t>(m)] == f[static_cast<std::size_t>(m)]) && bad.empty())
            bad = "g=" + std::to_string(g) + " k=" + std::to_string(k) + " m=" + std::to_string(m) +
                  (dual ? " dual" : "");
      }
  r.pass = bad.empty();
  r.detail = std::to_string(checked) + " coefficients compared" + (bad.empty() ? "" : "; first mismatch " + bad);
  return r;
}

CriterionResult criterion_leading_terms() {
  CriterionResult r{3, "LT-gen inclusions for g = 2, 3 and |std(I0_n)| = f(2n) for n = 2..8", true, "", 0};
  std::ostringstream os;
  for (int g = 2; g <= 3; ++g) {
    const auto c = simple_type_census(g, 0, 8);
    const auto gb = buchberger(ideal_generators(g, c.window_used));
    const auto rep = lt_contains(gb, lt_gen_target(g));
    r.pass = r.pass && rep.all_contained;
    os << "g=" << g << " LT-gen " << rep.entries.size() << " generators " << (rep.all_contained ? "contained" : "NOT contained")
       << "; ";
  }
  std::vector<long> counts, f;
  for (int n = 2; n <= 8; ++n) {
    const auto census = standard_monomials(buchberger(small_ideal_generators(n)));
    counts.push_back(census.finite ? static_cast<long>(census.count) : -1);
    f.push_back(lattice_count(2 * n, LatticeMode::brute_force));
  }
  r.pass = r.pass && counts == f;
  os << "I0 counts [" << join_ints(counts) << "] f(2n) [" << join_ints(f) << "]";
  r.detail = os.str();
  return r;
}

CriterionResult criterion_lattice() {
  CriterionResult r{4, "lattice lemma: closed form = brute force, f(4g-2)+f(4g-4)+f(4g-6) = (2g-1)^2", true, "", 0};
  std::string bad;
  for (long n = 0; n <= 200; ++n)
    if (lattice_count(n, LatticeMode::closed_form) != lattice_count(n, LatticeMode::brute_force) && bad.empty())
      bad = "closed form differs at n=" + std::to_string(n);
  for (long g = 1; g <= 20; ++g) {
    const long s = lattice_count(4 * g - 2, LatticeMode::brute_force) + lattice_count(4 * g - 4, LatticeMode::brute_force) +
                   lattice_count(4 * g - 6 < 0 ? 0 : 4 * g - 6, LatticeMode::brute_force);
    if (s != (2 * g - 1) * (2 * g - 1) && bad.empty()) bad = "sum identity fails at g=" + std::to_string(g);
  }
  r.pass = bad.empty();
  r.detail = bad.empty() ? "n = 0..200 and g = 1..20 checked" : bad;
  return r;
}

CriterionResult criterion_recursions_and_lemmas() {
  CriterionResult r{5, "index recursions (g<=4) and beta2 lemmas (N=3, g<=3, m<=3g+2)", true, "", 0};
  long recursions = 0, lemmas = 0;
  std::vector<std::string> failures;
  std::set<std::string> failing_k;
  for (int g = 1; g <= 4; ++g)
    for (int k = 0; k <= g; ++k)
      for (const auto& c : verify_index_recursions(g, k, 3, 3 * g + 4)) {
        ++recursions;
        if (!c.pass) failures.push_back(c.identity + " " + c.inputs);
      }
  long lemma_failures = 0;
  for (int g = 1; g <= 3; ++g)
    for (int k = 0; k <= g; ++k)
      for (int m = 0; m <= 3 * g + 2; ++m)
        for (const auto& c : verify_beta_lemmas(g, k, m, 3)) {
          ++lemmas;
          if (c.pass) continue;
          ++lemma_failures;
          failing_k.insert("g=" + std::to_string(g) + " k=" + std::to_string(k));
          if (failures.size() < 3) failures.push_back(c.identity + " " + c.inputs);
        }
  r.pass = failures.empty();
  std::ostringstream os;
  os << recursions << " recursion checks, " << lemmas << " lemma memberships, " << lemma_failures << " failing";
  if (!failing_k.empty()) {
    os << " (at";
    for (const auto& s : failing_k) os << " [" << s << "]";
    os << ")";
  }
  for (const auto& f : failures) os << "; " << f;
  r.detail = os.str();
  return r;
}

CriterionResult criterion_spectrum() {
  CriterionResult r{6, "spectrum size, evaction closure, deformed limits, annihilator to order 6", true, "", 0};
  std::ostringstream os;
  const CycNum s3 = CycNum::constant(CycNum::Constant::sqrt3);
  const CycNum sm3 = CycNum::constant(CycNum::Constant::sqrtm3);
  for (int g = 1; g <= 10; ++g)
    for (int d : {1, 2}) {
      auto set = eigenvalue_tuples(g, d);
      std::sort(set.begin(), set.end(), eigen_less);
      const bool distinct = std::adjacent_find(set.begin(), set.end()) == set.end();
      auto member = [&](const EigenTuple& t) { return std::binary_search(set.begin(), set.end(), t, eigen_less); };
      // direct formula as the oracle
      std::vector<EigenTuple> direct;
      for (int k = 0; k < 3; ++k) {
        const CycNum z = CycNum::zeta3_pow(k), z2 = CycNum::zeta3_pow(2 * k);
        for (int a = -(2 * g - 2); a <= 2 * g - 2; ++a)
          for (int b = -(2 * g - 2); b <= 2 * g - 2; ++b)
            if (std::abs(a) + std::abs(b) <= 2 * g - 2 && (a + b) % 2 == 0)
              direct.push_back({{s3 * z * Rat(a), sm3 * z2 * Rat(b), z2 * Rat(3), CycNum()}});
      }
      std::sort(direct.begin(), direct.end(), eigen_less);
      const bool size_ok = distinct && static_cast<long>(set.size()) == 3L * (2 * g - 1) * (2 * g - 1) && set == direct;
      bool closed = true;
      for (const auto& t : set)
        for (int j = 0; j < 6; ++j) closed = closed && member(evaction(t, 3, j));
      bool limits = true;
      for (int k = 0; k < 3; ++k)
        for (auto [a, b] : c_lattice(g)) limits = limits && member(deformed_module(k, a, b).limit());
      if (!(size_ok && closed && limits)) {
        r.pass = false;
        os << "g=" << g << " d=" << d << (size_ok ? "" : " size") << (closed ? "" : " closure") << (limits ? "" : " limits")
           << " failed; ";
      }
    }
  long annihilated = 0, modules = 0;
  for (int k = 0; k < 3; ++k)
    for (auto [a, b] : c_lattice(2)) {
      ++modules;
      if (annihilator_check(deformed_module(k, a, b), 6)) ++annihilated;
    }
  r.pass = r.pass && annihilated == modules;
  os << "g<=10, d in {1,2}: sizes, 6 evactions, limits checked; annihilator order 6: " << annihilated << "/" << modules
     << " modules (g=2)";
  r.detail = os.str();
  return r;
}

RatVec random_vector(std::mt19937_64& rng, std::size_t n) {
  RatVec v(n);
  for (auto& x : v)
    x = Rat(std::uniform_int_distribution<long>(-3, 3)(rng), std::uniform_int_distribution<long>(1, 3)(rng));
  return v;
}

CriterionResult criterion_blowup() {
  CriterionResult r{7, "blowup identity to order 8, K3 + 10 random specs, plain and through_E", true, "", 0};
  std::mt19937_64 rng(20240917);
  std::vector<std::pair<std::string, DonaldsonSpec>> specs = {{"K3", k3_spec()}};
  for (std::uint64_t s = 1; s <= 10; ++s) specs.emplace_back("random#" + std::to_string(s), random_spec(s));
  long passed = 0, total = 0;
  std::ostringstream os;
  for (const auto& [name, spec] : specs) {
    const RatVec gamma = random_vector(rng, spec.rank());
    const RatVec lambda = random_vector(rng, spec.rank());
    for (auto shift : {BlowupShift::plain, BlowupShift::through_E}) {
      ++total;
      // 1/6 on equal signs, 1/3 on opposite signs
      const DonaldsonSpec up = blow_up(spec, shift);
      const std::size_t n = spec.K.size();
      bool pattern = up.K.size() == 2 * n;
      for (std::size_t i = 0; i < 2 * n && pattern; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j)
          pattern = pattern && up.c[i][j] == spec.c[i % n][j % n] * ((i < n) == (j < n) ? Rat(1, 6) : Rat(1, 3));
      const auto rep = verify_blowup(spec, gamma, lambda, 8, shift);
      if (rep.identity_holds && rep.factor_forms_agree && pattern) {
        ++passed;
      } else {
        os << name << (shift == BlowupShift::plain ? " plain" : " through_E") << " failed; ";
      }
    }
  }
  r.pass = passed == total;
  os << passed << "/" << total << " identities hold exactly";
  r.detail = os.str();
  return r;
}

CriterionResult criterion_euler() {
  CriterionResult r{8, "framed Euler characteristic, |H| <= 64, <= 3 cyclic factors, N in {2,3,4}", true, "", 0};
  long groups = 0;
  std::string bad;
  for (long n1 = 1; n1 <= 64; ++n1)
    for (long n2 = n1; n1 * n2 <= 64; ++n2)
      for (long n3 = n2; n1 * n2 * n3 <= 64; ++n3) {
        ++groups;
        const FinAbGroup h{{n1, n2, n3}};
        for (int N = 2; N <= 4; ++N) {
          long expect = 1;
          for (int i = 1; i < N; ++i) expect *= n1 * n2 * n3;
          const long d = framed_euler_char(h, N, EulerMode::direct);
          const long o = framed_euler_char(h, N, EulerMode::orbit_formula);
          if ((d != expect || o != expect) && bad.empty())
            bad = "H=Z/" + std::to_string(n1) + "+Z/" + std::to_string(n2) + "+Z/" + std::to_string(n3) +
                  " N=" + std::to_string(N) + " direct=" + std::to_string(d) + " orbit=" + std::to_string(o);
        }
      }
  r.pass = bad.empty();
  r.detail = std::to_string(groups) + " factorizations checked" + (bad.empty() ? "" : "; " + bad);
  return r;
}

CriterionResult criterion_alexander() {
  CriterionResult r{9, "Alexander product = coefficient rule, unknot, trefoil, figure-eight, 50 random", true, "", 0};
  std::vector<std::pair<std::string, AlexPoly>> cases = {
      {"unknot", AlexPoly{{{0, 1}}}},
      {"trefoil", AlexPoly{{{-1, 1}, {0, -1}, {1, 1}}}},
      {"figure-eight", AlexPoly{{{-1, -1}, {0, 3}, {1, -1}}}},
  };
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    AlexPoly d;
    const long radius = std::uniform_int_distribution<long>(0, 5)(rng);
    long half = 0;
    for (long j = 1; j <= radius; ++j) {
      const long a = std::uniform_int_distribution<long>(-4, 4)(rng);
      d.coeffs[j] = d.coeffs[-j] = a;
      half += a;
    }
    const long target = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
    d.coeffs[0] = target - 2 * half;
    cases.emplace_back("random#" + std::to_string(i), d);
  }
  std::string bad;
  for (const auto& [name, d] : cases) {
    const auto p = alexander_u3(d, AlexanderMode::product);
    const auto c = alexander_u3(d, AlexanderMode::coefficient_rule);
    // naive double loop as the oracle
    LaurentCoeffs2 naive;
    for (long i = -5; i <= 5; ++i)
      for (long j = -5; j <= 5; ++j) {
        const long v = d.at(i) * d.at(j);
        if (v != 0) naive[{i + j, i - j}] += v;
      }
    std::erase_if(naive, [](const auto& kv) { return kv.second == 0; });
    bool symmetric = true;
    for (const auto& [ab, v] : p) {
      const auto get = [&](long a, long b) {
        const auto it = p.find({a, b});
        return it == p.end() ? 0L : it->second;
      };
      symmetric = symmetric && get(-ab.first, -ab.second) == v && get(ab.first, -ab.second) == v &&
                  std::abs(ab.first) + std::abs(ab.second) <= 2 * d.radius();
    }
    if (!(p == c && p == naive && symmetric) && bad.empty()) bad = name;
  }
  r.pass = bad.empty();
  r.detail = std::to_string(cases.size()) + " polynomials" + (bad.empty() ? "" : "; first failure " + bad);
  return r;
}

CriterionResult criterion_elliptic() {
  CriterionResult r{10, "elliptic expansion support and parity for g <= 6", true, "", 0};
  std::ostringstream os;
  for (int g = 1; g <= 6; ++g) {
    bool ok = true;
    for (int wf = 0; wf < 3; ++wf) {
      const auto e = elliptic_coefficients(g, wf);
      ok = ok && e.support_ok && e.routes_agree;
    }
    const auto e = elliptic_coefficients(g, 0);
    r.pass = r.pass && ok;
    os << "g=" << g << (ok ? "" : " FAILED") << " d_{g-1,0} computed=" << e.d_top[0].to_string()
       << " stated=" << e.d_top_stated.to_string() << "; ";
  }
  r.detail = os.str();
  return r;
}

}  // namespace

long macaulay_quotient_dimension(const std::vector<RatPoly>& gens) {
  const RingPtr ring = quotient_ring3();
  for (const auto& p : gens) {
    if (!same_ring(p.ring(), ring)) throw std::invalid_argument("macaulay_quotient_dimension: generators must be in a2, a3, b2");
    if (!p.is_homogeneous()) throw std::invalid_argument("macaulay_quotient_dimension: generators must be homogeneous");
  }
  long total = 0;
  int zero_run = 0;
  for (long d = 0; zero_run < 2; d += 2) {
    if (d > 400) throw std::runtime_error("macaulay_quotient_dimension: quotient does not vanish by degree 400");
    const auto basis = monomials_of_degree(*ring, d);
    std::map<std::vector<Monomial::Exp>, std::size_t> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i].exponents()] = i;
    Matrix<Rat> rows;
    for (const auto& p : gens) {
      if (p.is_zero() || p.degree() > d) continue;
      for (const auto& m : monomials_of_degree(*ring, d - p.degree())) {
        std::vector<Rat> row(basis.size());
        const RatPoly shifted = p.times_term(m, Rat(1));
        for (const auto& [mono, c] : shifted.terms()) row[column.at(mono.exponents())] = c;
        rows.push_back(std::move(row));
      }
    }
    const long dim = static_cast<long>(basis.size()) - static_cast<long>(rows.empty() ? 0 : rank(rows));
    total += dim;
    zero_run = dim == 0 ? zero_run + 1 : 0;
  }
  return total;
}

CriterionResult run_criterion(int id) {
  const auto t0 = Clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = criterion_dimension(); break;
    case 2: r = criterion_relations(); break;
    case 3: r = criterion_leading_terms(); break;
    case 4: r = criterion_lattice(); break;
    case 5: r = criterion_recursions_and_lemmas(); break;
    case 6: r = criterion_spectrum(); break;
    case 7: r = criterion_blowup(); break;
    case 8: r = criterion_euler(); break;
    case 9: r = criterion_alexander(); break;
    case 10: r = criterion_elliptic(); break;
    default: throw std::invalid_argument("run_criterion: id must be in 1.." + std::to_string(kCriterionCount));
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace u3alg
