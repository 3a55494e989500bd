#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coxlab/cli.hpp"
#include "coxlab/errors.hpp"
#include "coxlab/hurwitz.hpp"
#include "coxlab/identities.hpp"
#include "coxlab/laplacian.hpp"

namespace py = pybind11;
using namespace coxlab;

namespace {

// big integers cross as decimal strings
py::int_ to_py(const mpz_class& v) { return py::int_(py::str(v.get_str())); }

}  // namespace

PYBIND11_MODULE(_coxlab, m) {
  m.doc() = "Exact computations for finite real reflection groups";

  static py::exception<Error> base(m, "CoxlabError");
  static py::exception<InvalidType> invalid(m, "InvalidType", base.ptr());
  static py::exception<GroupTooLarge> too_large(m, "GroupTooLarge", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidType& e) {
      invalid(e.what());
    } catch (const GroupTooLarge& e) {
      too_large(e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a coxlab command line; returns (exit code, stdout, stderr).");

  m.def("identity_names", &identity_names);
  m.def("default_suite_types", &cli::default_suite_types);

  m.def(
      "verify",
      [](const std::string& identity, const std::string& type, std::optional<int> k, std::optional<int> r,
         bool allow_large) {
        TypeContext ctx(type, allow_large);
        if (auto why = not_applicable(identity, ctx)) throw py::value_error(*why);
        return run_identity(identity, ctx, CheckOptions{k, r}).to_json().dump();
      },
      py::arg("identity"), py::arg("type"), py::arg("k") = py::none(), py::arg("r") = py::none(),
      py::arg("allow_large") = false, "JSON report of one identity on one type.");

  m.def(
      "laplacian_charpoly",
      [](const std::string& type) { return laplacian_charpoly(w_laplacian(build_root_system(type))).to_string(); },
      py::arg("type"));

  m.def(
      "chain_number",
      [](const std::string& type, bool allow_large) {
        TypeContext ctx(type, allow_large);
        return to_py(count_maximal_chains(ctx.nc()));
      },
      py::arg("type"), py::arg("allow_large") = false);

  m.def(
      "zeta",
      [](const std::string& type, int k, bool allow_large) {
        if (k < 1) throw py::value_error("k must be positive");
        TypeContext ctx(type, allow_large);
        return to_py(zeta_value(ctx.nc(), k));
      },
      py::arg("type"), py::arg("k"), py::arg("allow_large") = false);

  m.def(
      "degrees",
      [](const std::string& type, bool allow_large) {
        TypeContext ctx(type, allow_large);
        std::vector<std::vector<int>> out;
        for (const auto& c : ctx.degrees()) out.push_back(c.degrees);
        return out;
      },
      py::arg("type"), py::arg("allow_large") = false);

  m.def(
      "factorizations",
      [](const std::string& type, bool allow_large) {
        TypeContext ctx(type, allow_large);
        return enumerate_factorizations(ctx.group(), ctx.coxeter_index());
      },
      py::arg("type"), py::arg("allow_large") = false,
      "Reduced reflection factorizations of the bipartite Coxeter element, as positive root indices.");
}
