#include "coxlab/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxlab/errors.hpp"
#include "coxlab/hurwitz.hpp"
#include "coxlab/identities.hpp"
#include "coxlab/laplacian.hpp"

namespace coxlab::cli {

using json = nlohmann::ordered_json;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string format = "json";
  bool allow_large = false;
  bool timing = false;
};

std::string compact(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

// validate before any computation
CoxeterSpec checked_type(const std::string& text) {
  try {
    return parse_type(text);
  } catch (const InvalidType& e) {
    throw Usage(e.what());
  }
}

void print_reports(std::vector<IdentityReport> reports, const Settings& s, std::ostream& out) {
  std::sort(reports.begin(), reports.end(), [](const IdentityReport& a, const IdentityReport& b) {
    return std::tie(a.identity, a.type) < std::tie(b.identity, b.type);
  });
  if (!s.timing)
    for (auto& r : reports) r.millis.reset();
  if (s.format == "table") {
    for (const auto& r : reports) {
      out << (r.pass ? "PASS" : "FAIL") << "  " << r.identity << "  " << r.type << "  lhs=" << compact(r.lhs)
          << "  rhs=" << compact(r.rhs);
      if (r.millis) out << "  " << *r.millis << " ms";
      out << "\n";
      for (const auto& n : r.notes) out << "      " << n << "\n";
    }
    const auto passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
    out << passed << "/" << reports.size() << " checks passed\n";
    return;
  }
  if (reports.size() == 1) {
    out << reports.front().to_json().dump(2) << "\n";
    return;
  }
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  out << arr.dump(2) << "\n";
}

int exit_code(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; }) ? 0 : 1;
}

json group_info(const std::string& type, const Settings& s) {
  TypeContext ctx(type, s.allow_large);
  const RootSystem& rs = ctx.roots();
  json j{{"type", ctx.label()}, {"rank", rs.rank()}, {"reflections", rs.num_positive()}};
  j["coxeter_numbers"] = decompose_components(rs, rs.all()).coxeter_multiset();
  j["coordinates"] = rs.has_matrix_model() ? (rs.field() ? "Q(sqrt " + std::to_string(rs.field()) + ")" : "Q")
                                           : "none (dihedral model)";
  j["bipartition"] = {rs.bipartition().first, rs.bipartition().second};
  const GroupTable& gt = ctx.group();
  j["order"] = gt.order();
  j["coxeter_element_order"] = element_order(gt.element(ctx.coxeter_index()));
  json degs = json::array();
  for (const auto& c : ctx.degrees()) degs.push_back(c.degrees);
  j["degrees"] = degs;
  std::vector<std::size_t> by_length(static_cast<std::size_t>(rs.rank()) + 1, 0);
  for (std::size_t i = 0; i < gt.order(); ++i) ++by_length[static_cast<std::size_t>(gt.reflection_length(i))];
  j["elements_by_reflection_length"] = by_length;
  return j;
}

json lattice_summary(const std::string& type, const Settings& s) {
  TypeContext ctx(type, s.allow_large);
  const IntersectionLattice& lat = ctx.lattice();
  json j{{"type", ctx.label()}, {"flats", lat.size()}, {"flats_by_dimension", lat.graded_counts()}};
  j["characteristic_polynomial"] = characteristic_polynomial(lat, lat.top()).to_string();
  j["chambers"] = chamber_count(lat, lat.top()).get_str();
  json exps = json::array();
  for (const auto& b : os_exponents(lat, lat.top())) exps.push_back(b.get_str());
  j["exponents"] = exps;
  return j;
}

void emit(const json& j, const Settings& s, std::ostream& out) {
  if (s.format == "table") {
    for (const auto& [k, v] : j.items()) out << k << ": " << compact(v) << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
}

std::vector<IdentityReport> run_suite(const std::vector<std::string>& types, int jobs, const Settings& s) {
  std::vector<IdentityReport> reports;
  std::mutex mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < types.size(); i = next++) {
      std::vector<IdentityReport> local;
      TypeContext ctx(types[i], s.allow_large);
      for (const auto& id : identity_names()) {
        if (not_applicable(id, ctx)) continue;
        local.push_back(run_identity(id, ctx));
      }
      std::lock_guard<std::mutex> lock(mutex);
      reports.insert(reports.end(), local.begin(), local.end());
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return reports;
}

}  // namespace

const std::vector<std::string>& default_suite_types() {
  static const std::vector<std::string> types = {
      "A1",     "A2",     "A3",     "A4",     "B2",      "B3",      "B4",      "D4",     "F4",     "H3",
      "I2(3)",  "I2(4)",  "I2(5)",  "I2(6)",  "I2(7)",   "I2(8)",   "I2(9)",   "I2(10)", "I2(11)", "I2(12)",
      "A1xA1",  "A2xA1",  "A2xB2",  "A2xB3"};
  return types;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for finite real reflection groups", "coxlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--allow-large", s.allow_large, "Allow groups of order above 10000 (H4, E6, ...)");
  app.add_flag("--timing", s.timing, "Report wall time per check");

  std::string type;
  std::string identity;
  std::optional<int> k;
  std::optional<int> r;
  std::string out_path;
  std::vector<std::string> types;
  int jobs = 1;

  auto* group = app.add_subcommand("group", "Group data");
  auto* group_info_cmd = group->add_subcommand("info", "Order, degrees and Coxeter numbers");
  group_info_cmd->add_option("type", type)->required();
  group->require_subcommand(1);

  auto* lattice = app.add_subcommand("lattice", "Intersection lattice");
  auto* lattice_summary_cmd = lattice->add_subcommand("summary", "Flat counts and characteristic polynomial");
  lattice_summary_cmd->add_option("type", type)->required();
  lattice->require_subcommand(1);

  auto* laplacian = app.add_subcommand("laplacian", "W-Laplacian");
  auto* charpoly_cmd = laplacian->add_subcommand("charpoly", "det(tI + L)");
  charpoly_cmd->add_option("type", type)->required();
  laplacian->require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Check one identity on one type");
  verify->add_option("identity", identity)->required()->check(CLI::IsMember(identity_names()));
  verify->add_option("type", type)->required();
  verify->add_option("--k", k, "Largest k (chapoton, fr1, fr2)")->check(CLI::NonNegativeNumber);
  verify->add_option("--r", r, "Flat dimension (fr2)")->check(CLI::NonNegativeNumber);

  auto* nc = app.add_subcommand("nc", "Noncrossing partition lattice");
  auto* zeta_cmd = nc->add_subcommand("zeta", "Number of k-multichains");
  zeta_cmd->add_option("type", type)->required();
  zeta_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  nc->require_subcommand(1);

  auto* hurwitz = app.add_subcommand("hurwitz", "Reflection factorizations");
  auto* export_cmd = hurwitz->add_subcommand("export", "Write the dual presentation");
  export_cmd->add_option("type", type)->required();
  export_cmd->add_option("--out", out_path, "Text output; a .json mirror is written alongside")->required();
  hurwitz->require_subcommand(1);

  auto* suite = app.add_subcommand("suite", "Run identity suites");
  auto* all_cmd = suite->add_subcommand("all", "Every applicable identity on every type");
  all_cmd->add_option("--types", types, "Types to run (default: the standard set)");
  all_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  suite->require_subcommand(1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (!type.empty()) checked_type(type);
    for (const auto& t : types) checked_type(t);

    if (*group_info_cmd) {
      emit(group_info(type, s), s, out);
      return 0;
    }
    if (*lattice_summary_cmd) {
      emit(lattice_summary(type, s), s, out);
      return 0;
    }
    if (*charpoly_cmd) {
      TypeContext ctx(type, s.allow_large);
      out << laplacian_charpoly(w_laplacian(ctx.roots())).to_string() << "\n";
      return 0;
    }
    if (*verify) {
      TypeContext ctx(type, s.allow_large);
      if (auto why = not_applicable(identity, ctx)) throw Usage(identity + " on " + ctx.label() + ": " + *why);
      std::vector<IdentityReport> reports{run_identity(identity, ctx, CheckOptions{k, r})};
      print_reports(reports, s, out);
      return exit_code(reports);
    }
    if (*zeta_cmd) {
      TypeContext ctx(type, s.allow_large);
      out << zeta_value(ctx.nc(), *k).get_str() << "\n";
      return 0;
    }
    if (*export_cmd) {
      TypeContext ctx(type, s.allow_large);
      const auto fs = enumerate_factorizations(ctx.group(), ctx.coxeter_index());
      const DualPresentation p = export_dual_presentation(ctx.roots(), fs);
      std::ofstream text(out_path);
      std::ofstream mirror(out_path + ".json");
      if (!text || !mirror) throw Usage("cannot write " + out_path);
      text << p.to_text();
      mirror << p.to_json(ctx.roots()).dump(2) << "\n";
      out << "wrote " << p.generators.size() << " generators and " << p.words.size() << " words to " << out_path
          << "\n";
      return 0;
    }
    if (*all_cmd) {
      const auto reports = run_suite(types.empty() ? default_suite_types() : types, jobs, s);
      print_reports(reports, s, out);
      return exit_code(reports);
    }
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const GroupTooLarge& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace coxlab::cli
