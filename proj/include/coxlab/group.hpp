#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coxlab/root_system.hpp"

namespace coxlab {

/// A group element stored as its signed permutation of the roots: entry i is
/// the signed index of w(root i). Products compose right to left, matching
/// matrix multiplication: (u * v)(r) = u(v(r)).
class GroupElement {
 public:
  GroupElement() = default;
  static GroupElement identity(const RootSystem& rs);
  static GroupElement reflection(const RootSystem& rs, int k);

  int num_positive() const { return static_cast<int>(image_.size()); }
  int apply(int signed_root) const;
  const std::vector<std::uint16_t>& images() const { return image_; }

  GroupElement inverse() const;
  bool is_identity() const;
  /// True if w sends every root to its negative.
  bool is_minus_identity() const;

  friend GroupElement operator*(const GroupElement& u, const GroupElement& v);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<std::uint16_t> image_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const;
};

/// Matrix of w in the simple-root basis; column j is w(alpha_j).
QMatrix element_matrix(const RootSystem& rs, const GroupElement& w);

/// Multiplicative order.
int element_order(const GroupElement& w);

/// Minimal number of reflections whose product is w, computed as
/// n - dim Fix(w) = rank(M - I). Abstract dihedral models use the direct
/// definition (0 for 1, 1 for reflections, 2 for rotations).
int reflection_length(const RootSystem& rs, const GroupElement& w);

/// Closed hyperplane set of the flat Fix(w): the positive roots orthogonal to
/// every vector fixed by w.
RootSet fixed_flat(const RootSystem& rs, const GroupElement& w);

/// Group order cap: $COXLAB_CAP if set, else 60000.
std::size_t default_group_cap();

/// Every element of W with its reflection length.
class GroupTable {
 public:
  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> roots_ptr() const { return rs_; }
  std::size_t order() const { return elements_.size(); }

  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> find(const GroupElement& g) const;
  std::size_t index_of(const GroupElement& g) const;

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  int reflection_length(std::size_t i) const { return refl_len_[i]; }

  /// Element index of the reflection in positive root k, for every k.
  const std::vector<std::size_t>& reflections() const { return refl_indices_; }
  static constexpr std::size_t identity_index() { return 0; }

  friend GroupTable enumerate_group(std::shared_ptr<const RootSystem> rs, std::size_t cap);

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index_;
  std::vector<std::size_t> inverse_;
  std::vector<std::int8_t> refl_len_;
  std::vector<std::size_t> refl_indices_;
};

/// Breadth-first closure over the simple reflections. Throws GroupTooLarge
/// once more than `cap` elements have been found.
GroupTable enumerate_group(std::shared_ptr<const RootSystem> rs, std::size_t cap = default_group_cap());

enum class CoxeterMode { Bipartite, Standard };

/// Product of all simple reflections, in bipartition order (first block,
/// then second) or in diagram order s_1 s_2 ... s_n.
GroupElement coxeter_element(const RootSystem& rs, CoxeterMode mode = CoxeterMode::Bipartite);
GroupElement product_of_reflections(const RootSystem& rs, const std::vector<int>& roots);

struct ComponentDegrees {
  RootSet roots;
  int rank = 0;
  int coxeter_number = 0;
  std::vector<int> degrees;  // ascending
};

/// Largest rounding residue accepted when reading degrees off eigenvalues.
inline constexpr double kDegreeTolerance = 1e-6;

/// Fundamental degrees of each irreducible component of the (reflection
/// closed) subsystem, read off the eigenvalue arguments of a component
/// Coxeter element. This is the only floating-point step in the library; the
/// result is validated against exact identities and DegreeExtractionError is
/// thrown on any failure, including a rounding residue above kDegreeTolerance.
std::vector<ComponentDegrees> degrees(const RootSystem& rs, std::optional<RootSet> subsystem = {});

/// Throws DegreeExtractionError unless the product of all degrees is `order`.
void validate_degree_product(const std::vector<ComponentDegrees>& degs, std::size_t order);

struct ReflectionOrbit {
  int size = 0;
  int simple_count = 0;
  RootSet members;
};

/// Orbits of t -> c^-1 t c on the reflections for the bipartite Coxeter
/// element. Throws PropertyViolation unless every orbit has size h/2 with one
/// simple reflection or size h with two (h of the orbit's component).
std::vector<ReflectionOrbit> bipartite_conjugation_orbits(const RootSystem& rs);

}  // namespace coxlab
