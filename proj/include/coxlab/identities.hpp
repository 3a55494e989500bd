#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

#include "coxlab/arrangement.hpp"
#include "coxlab/group.hpp"
#include "coxlab/ncposet.hpp"
#include "coxlab/root_system.hpp"

namespace coxlab {

/// Outcome of one identity on one type. lhs and rhs hold decimal strings (or
/// arrays / objects of them) so big integers survive any JSON consumer.
struct IdentityReport {
  std::string identity;
  std::string type;
  nlohmann::ordered_json lhs;
  nlohmann::ordered_json rhs;
  bool pass = false;
  std::optional<double> millis;
  std::vector<std::string> notes;

  nlohmann::ordered_json to_json() const;
};

/// Groups above this order need allow_large.
inline constexpr double kLargeOrder = 10000;

/// Lazily built objects for one type, shared by all checks on it. Not
/// thread-safe; use one context per worker.
class TypeContext {
 public:
  explicit TypeContext(const std::string& type, bool allow_large = false);

  const CoxeterSpec& spec() const { return spec_; }
  const std::string& label() const { return spec_label_; }
  std::shared_ptr<const RootSystem> roots_ptr() const { return rs_; }
  const RootSystem& roots() const { return *rs_; }
  bool irreducible() const { return spec_.irreducible(); }
  int rank() const { return rs_->rank(); }
  /// Coxeter number of an irreducible type.
  int coxeter_number() const;

  const GroupTable& group();
  const IntersectionLattice& lattice();
  const NCPoset& nc();
  std::size_t coxeter_index();
  const std::vector<FlatOrbitData>& flat_data();
  const std::vector<ComponentDegrees>& degrees();
  /// Degrees of W_X with each component's h, cached per flat.
  const std::vector<ComponentDegrees>& flat_degrees(std::size_t flat);

 private:
  CoxeterSpec spec_;
  std::string spec_label_;
  bool allow_large_;
  std::shared_ptr<const RootSystem> rs_;
  std::unique_ptr<GroupTable> group_;
  std::unique_ptr<IntersectionLattice> lattice_;
  std::unique_ptr<NCPoset> nc_;
  std::optional<std::size_t> c_;
  std::optional<std::vector<FlatOrbitData>> flat_data_;
  std::optional<std::vector<ComponentDegrees>> degrees_;
  std::vector<std::optional<std::vector<ComponentDegrees>>> flat_degrees_;
};

/// Number of maximal chains of NC for the reflection subgroup generated by
/// `roots` (reflection closed), counted by brute force on each irreducible
/// component rebuilt from its own Coxeter matrix and combined by shuffles.
mpz_class parabolic_chain_number(const RootSystem& rs, RootSet roots);

IdentityReport check_chain_number(TypeContext& ctx);
IdentityReport check_deligne_reading(TypeContext& ctx);
enum class SimplesToFlatsMode { Trivial, ChainNumber, Both };
IdentityReport check_simples_to_flats(TypeContext& ctx, SimplesToFlatsMode mode = SimplesToFlatsMode::Both);
IdentityReport check_t1_slice(TypeContext& ctx);
IdentityReport check_chapoton(TypeContext& ctx, int kmax = 4);
/// k = 0..kmax; kmax defaults to n + 1.
IdentityReport check_fr1(TypeContext& ctx, std::optional<int> kmax = {});
/// All r unless one is given.
IdentityReport check_fr2(TypeContext& ctx, std::optional<int> kmax = {}, std::optional<int> r = {});
IdentityReport check_laplacian_suite(TypeContext& ctx);
IdentityReport check_kreweras(TypeContext& ctx);
IdentityReport check_nu_formula(TypeContext& ctx);
IdentityReport check_degrees(TypeContext& ctx);
IdentityReport check_bipartite_orbits(TypeContext& ctx);
IdentityReport check_hurwitz_transitivity(TypeContext& ctx);
IdentityReport check_c_orbits(TypeContext& ctx);

struct CheckOptions {
  std::optional<int> k;
  std::optional<int> r;
};

/// Names accepted by run_identity, in suite order.
const std::vector<std::string>& identity_names();
/// Why `identity` does not apply to the type, if it does not.
std::optional<std::string> not_applicable(const std::string& identity, TypeContext& ctx);
/// Runs one named identity. Library errors become a failing report.
IdentityReport run_identity(const std::string& identity, TypeContext& ctx, const CheckOptions& opts = {});

}  // namespace coxlab
