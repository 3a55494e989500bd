// Acceptance run: one PASS/FAIL line per criterion. Exits nonzero if any fail.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "coxlab/cli.hpp"
#include "coxlab/errors.hpp"
#include "coxlab/hurwitz.hpp"
#include "coxlab/identities.hpp"
#include "coxlab/laplacian.hpp"

using namespace coxlab;

namespace {

// Limits
constexpr double kChainSeconds = 60.0;
constexpr double kSuiteSeconds = 300.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

// Table values: Coxeter number and degrees of each irreducible type.
struct Classical {
  int h;
  std::vector<long> degrees;
};

Classical classical(const std::string& type) {
  static const std::map<std::string, Classical> table = {
      {"A1", {2, {2}}},        {"A2", {3, {2, 3}}},         {"A3", {4, {2, 3, 4}}},
      {"A4", {5, {2, 3, 4, 5}}}, {"B2", {4, {2, 4}}},       {"B3", {6, {2, 4, 6}}},
      {"B4", {8, {2, 4, 6, 8}}}, {"D4", {6, {2, 4, 4, 6}}}, {"F4", {12, {2, 6, 8, 12}}},
      {"H3", {10, {2, 6, 10}}}};
  if (auto it = table.find(type); it != table.end()) return it->second;
  const int m = std::stoi(type.substr(3));  // I2(m)
  return {m, {2, m}};
}

std::vector<std::string> criterion_one_types() {
  std::vector<std::string> t = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "H3", "F4"};
  for (int m = 3; m <= 12; ++m) t.push_back("I2(" + std::to_string(m) + ")");
  return t;
}

mpz_class order_from_degrees(const std::vector<long>& d) {
  mpz_class v = 1;
  for (long x : d) v *= x;
  return v;
}

mpz_class factorial(int n) {
  mpz_class v = 1;
  for (int i = 2; i <= n; ++i) v *= i;
  return v;
}

std::string text(const nlohmann::ordered_json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void require_identity(Outcome& o, const std::string& id, const std::string& type, CheckOptions opts = {}) {
  TypeContext ctx(type);
  const IdentityReport r = run_identity(id, ctx, opts);
  std::string why = id + " " + type + ": lhs " + text(r.lhs) + " rhs " + text(r.rhs);
  for (const auto& n : r.notes) why += "; " + n;
  o.expect(r.pass, why);
}

Outcome chain_numbers() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::map<std::string, long> pinned = {{"A3", 16}, {"B3", 27}, {"H3", 50}, {"D4", 162}, {"F4", 432}};
  for (const auto& type : criterion_one_types()) {
    TypeContext ctx(type);
    const Classical cl = classical(type);
    const int n = ctx.rank();
    mpz_class formula = factorial(n);
    for (int i = 0; i < n; ++i) formula *= cl.h;
    formula /= order_from_degrees(cl.degrees);
    const mpz_class by_chains = count_maximal_chains(ctx.nc());
    const mpz_class by_words = count_reduced_factorizations(ctx.group(), ctx.coxeter_index());
    o.expect(mpz_class(static_cast<unsigned long>(ctx.group().order())) == order_from_degrees(cl.degrees),
             type + ": group order");
    o.expect(by_chains == formula && by_words == formula,
             type + ": chains " + by_chains.get_str() + ", factorizations " + by_words.get_str() + ", formula " +
                 formula.get_str());
    if (auto it = pinned.find(type); it != pinned.end()) o.expect(by_chains == it->second, type + ": pinned value");
  }
  const double s = seconds_since(t0);
  o.expect(s < kChainSeconds, "runtime " + std::to_string(s) + " s");
  std::ostringstream d;
  d.precision(2);
  d << std::fixed << s << " s, limit " << kChainSeconds << " s";
  o.detail = d.str();
  return o;
}

Outcome reducible_law() {
  Outcome o;
  struct Row {
    std::string type;
    std::vector<std::string> factors;
    long expected;
  };
  const std::vector<Row> rows = {{"A1xA1", {"A1", "A1"}, 2}, {"A2xA1", {"A2", "A1"}, 9}, {"A2xB2", {"A2", "B2"}, 72}};
  for (const auto& r : rows) {
    TypeContext ctx(r.type);
    mpz_class formula = factorial(ctx.rank());
    mpz_class order = 1;
    for (const auto& f : r.factors) {
      const Classical cl = classical(f);
      for (std::size_t i = 0; i < cl.degrees.size(); ++i) formula *= cl.h;
      order *= order_from_degrees(cl.degrees);
    }
    formula /= order;
    const IdentityReport rep = check_chain_number(ctx);
    o.expect(rep.pass && text(rep.lhs) == formula.get_str() && formula == r.expected,
             r.type + ": lhs " + text(rep.lhs) + ", formula " + formula.get_str());
  }
  return o;
}

Outcome chapoton() {
  Outcome o;
  for (const std::string type : {"A2", "A3", "B2", "B3", "H3", "D4", "I2(5)", "I2(6)", "I2(7)", "I2(8)"}) {
    TypeContext ctx(type);
    const Classical cl = classical(type);
    for (long k = 1; k <= 4; ++k) {
      mpz_class num = 1, den = 1;
      for (long d : cl.degrees) {
        num *= k * cl.h + d;
        den *= d;
      }
      const mpz_class z = zeta_value(ctx.nc(), static_cast<int>(k));
      o.expect(z * den == num, type + " k=" + std::to_string(k) + ": " + z.get_str());
    }
    require_identity(o, "chapoton", type);
  }
  return o;
}

Outcome laplacian() {
  Outcome o;
  for (const std::string type : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "H3", "I2(5)", "I2(6)"}) {
    const RootSystem rs = build_root_system(type);
    const QMatrix l = w_laplacian(rs).matrix;
    const long h = classical(type).h;
    bool scalar = true;
    for (std::size_t i = 0; i < l.rows(); ++i)
      for (std::size_t j = 0; j < l.cols(); ++j) scalar = scalar && l(i, j) == QScalar(i == j ? h : 0);
    o.expect(scalar, type + ": L_W is not h I");
  }
  // determinant law on products: product of h_i over the rank
  for (const auto& [type, det] : std::vector<std::pair<std::string, long>>{{"A2xB2", 3 * 3 * 4 * 4}, {"A2xA1", 3 * 3 * 2}}) {
    const auto p = pseudodet(w_laplacian(build_root_system(type)));
    o.expect(p.value == det, type + ": det " + p.value.get_str());
  }
  for (const std::string type : {"A2", "A3", "B2", "B3", "H3"}) require_identity(o, "laplacian-suite", type);
  const std::string a3 = laplacian_charpoly(w_laplacian(build_root_system("A3"))).to_string();
  o.expect(a3 == "t^3 + 12 t^2 + 48 t + 64", "A3 charpoly " + a3);
  return o;
}

Outcome recursions() {
  Outcome o;
  for (const std::string type : {"A2", "A3", "A4", "B2", "B3", "B4", "D4", "H3"}) {
    require_identity(o, "deligne-reading", type);
    require_identity(o, "simples-to-flats", type);
    require_identity(o, "t1-slice", type);
  }
  return o;
}

Outcome nu_formula() {
  Outcome o;
  for (const std::string type : {"A2", "A3", "B2", "B3"}) require_identity(o, "nu-formula", type);
  return o;
}

Outcome kreweras() {
  Outcome o;
  for (const std::string type : {"A2", "A3", "B2", "B3", "H3"}) require_identity(o, "kreweras", type);
  return o;
}

Outcome fomin_reading() {
  Outcome o;
  for (const std::string type : {"A2", "A3", "B2", "B3", "H3"}) require_identity(o, "fr1", type);
  for (const std::string type : {"A2", "A3", "B2"}) require_identity(o, "fr2", type);
  return o;
}

Outcome hurwitz() {
  Outcome o;
  for (const std::string type : {"A2", "A3", "B2", "B3", "D4", "H3"}) {
    require_identity(o, "hurwitz-transitivity", type);
    require_identity(o, "c-orbits", type);
    TypeContext ctx(type);
    const int h = classical(type).h;
    const auto fs = enumerate_factorizations(ctx.group(), ctx.coxeter_index());
    o.expect(hurwitz_orbits(ctx.roots(), fs).size() == 1, type + ": Hurwitz orbit count");
    try {
      const auto co = c_conjugation_orbits(ctx.roots(), fs, ctx.group().element(ctx.coxeter_index()));
      for (std::size_t s : co.sizes)
        o.expect(s == static_cast<std::size_t>(h) || 2 * s == static_cast<std::size_t>(h),
                 type + ": orbit size " + std::to_string(s));
    } catch (const Error& e) {
      o.expect(false, e.what());
    }
  }
  TypeContext a2("A2");
  const auto p =
      export_dual_presentation(a2.roots(), enumerate_factorizations(a2.group(), a2.coxeter_index()));
  const std::string rel = p.rank_two_relations();
  o.expect(rel == "ab = bc = ca", "A2 presentation " + rel);
  return o;
}

Outcome bipartite_orbits() {
  Outcome o;
  for (const auto& type : criterion_one_types()) require_identity(o, "bipartite-orbits", type);
  return o;
}

Outcome degree_round_trip() {
  Outcome o;
  std::vector<std::string> types = criterion_one_types();
  for (const auto& t : cli::default_suite_types())
    if (std::find(types.begin(), types.end(), t) == types.end()) types.push_back(t);
  for (const auto& type : types) {
    require_identity(o, "degrees", type);
    if (type.find('x') != std::string::npos) continue;
    TypeContext ctx(type);
    const auto degs = ctx.degrees();
    o.expect(degs.size() == 1 && std::vector<long>(degs[0].degrees.begin(), degs[0].degrees.end()) ==
                                     classical(type).degrees,
             type + ": degrees differ from the table");
  }
  // the full suite must finish within its budget
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"suite", "all"}, out, err);
  const double s = seconds_since(t0);
  o.expect(code == 0, "suite all exit code " + std::to_string(code));
  o.expect(s < kSuiteSeconds, "suite all took " + std::to_string(s) + " s");
  std::ostringstream d;
  d << "tolerance " << kDegreeTolerance << "; full suite ";
  d.precision(2);
  d << std::fixed << s << " s, limit " << kSuiteSeconds << " s";
  o.detail = d.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"chain number h^n n!/|W|, two independent counts", chain_numbers},
      {"reducible chain numbers", reducible_law},
      {"zeta values against the degree product, k = 1..4", chapoton},
      {"W-Laplacian: h I, determinants, parabolic expansion", laplacian},
      {"Deligne-Reading, simples-to-flats, t^1 slice", recursions},
      {"nu over flats against standard parabolic counts", nu_formula},
      {"Kreweras numbers of lines", kreweras},
      {"Fomin-Reading identities", fomin_reading},
      {"Hurwitz transitivity, c-orbits, rank two presentation", hurwitz},
      {"bipartite reflection orbits", bipartite_orbits},
      {"degree extraction round trip", degree_round_trip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << "  " << criteria[i].first;
    if (!o.detail.empty()) std::cout << "  (" << o.detail << ")";
    std::cout << "\n";
    for (const auto& f : o.failures) std::cout << "      " << f << "\n";
    failed += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
