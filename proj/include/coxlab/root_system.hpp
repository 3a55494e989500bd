#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxlab/matrix.hpp"

namespace coxlab {

enum class Family { A, B, D, E, F, H, I };

/// One irreducible Coxeter type. `m` is only meaningful for family I.
struct CoxeterType {
  Family family = Family::A;
  int rank = 1;
  int m = 0;

  std::string to_string() const;
  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
};

/// A (possibly reducible) type: the product of its factors.
struct CoxeterSpec {
  std::vector<CoxeterType> factors;

  int rank() const;
  bool irreducible() const { return factors.size() == 1; }
  std::string to_string() const;
  /// Classical order formula, used only for gating expensive work.
  double nominal_order() const;
};

/// Parses "A3", "I2(7)", "E6", "A2xB3", ... Throws InvalidType.
CoxeterSpec parse_type(std::string_view text);

using CoxeterMatrix = std::vector<std::vector<int>>;

/// Block-diagonal Coxeter matrix in the fixed (Bourbaki) simple-root order.
CoxeterMatrix coxeter_matrix(const CoxeterSpec& spec);

/// Subset of positive roots, bit i = root i. Root systems here have N <= 64.
class RootSet {
 public:
  constexpr RootSet() = default;
  constexpr explicit RootSet(std::uint64_t bits) : bits_(bits) {}
  static RootSet single(int i) { return RootSet(std::uint64_t{1} << i); }
  static RootSet first(int n) {
    return RootSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  std::uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  bool contains(int i) const { return (bits_ >> i) & 1U; }
  bool contains(RootSet o) const { return (o.bits_ & ~bits_) == 0; }
  void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  int lowest() const { return std::countr_zero(bits_); }

  std::vector<int> indices() const;

  friend RootSet operator|(RootSet a, RootSet b) { return RootSet(a.bits_ | b.bits_); }
  friend RootSet operator&(RootSet a, RootSet b) { return RootSet(a.bits_ & b.bits_); }
  friend bool operator==(RootSet a, RootSet b) = default;
  friend auto operator<=>(RootSet a, RootSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

struct RootSetHash {
  std::size_t operator()(RootSet s) const { return std::hash<std::uint64_t>{}(s.bits()); }
};

/// Positive root system of a finite Coxeter group with its reflections.
///
/// Roots are stored in the basis of simple roots, with the symmetric bilinear
/// form B(a_i, a_j) = -2 cos(pi / m_ij) so that every root has <r, r> = 2.
/// Roots are addressed by signed index: 0..N-1 are the positive roots, and
/// N + i is -root(i). Indices 0..n-1 are the simple roots.
///
/// Dihedral types I2(m) whose 2cos(pi/m) is not in a quadratic field have no
/// coordinates; they carry a combinatorial model (roots at angles j*pi/m) and
/// every coordinate-dependent accessor throws NoMatrixModel.
class RootSystem {
 public:
  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  int num_positive() const { return num_pos_; }
  bool has_matrix_model() const { return matrix_model_; }
  /// d of the coordinate field Q(sqrt d); 0 for the rationals.
  int field() const { return field_; }
  const CoxeterMatrix& coxeter() const { return coxeter_; }

  RootSet all() const { return RootSet::first(num_pos_); }
  RootSet simples() const { return RootSet::first(rank_); }
  /// Two blocks of simple-root indices; reflections within a block commute.
  const std::pair<std::vector<int>, std::vector<int>>& bipartition() const { return bipartition_; }

  int negate(int j) const { return j < num_pos_ ? j + num_pos_ : j - num_pos_; }
  bool is_positive(int j) const { return j < num_pos_; }
  int positive_part(int j) const { return j < num_pos_ ? j : j - num_pos_; }

  /// Signed index of s_k(root j), k a positive root index.
  int reflect(int k, int j) const { return reflect_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]; }

  bool orthogonal(int i, int j) const;

  const QVector& root(int i) const;
  QVector signed_root(int j) const;
  const QMatrix& gram() const;
  QScalar inner(const QVector& x, const QVector& y) const;
  QMatrix reflection_matrix(int k) const;

  /// Rank of the span of the given roots.
  int rank_of(RootSet s) const;
  /// All positive roots in the span of s.
  RootSet closure(RootSet s) const;

  /// For an abstract dihedral model: position of a signed root on the circle
  /// of 2m roots (angle = position * pi / m).
  int dihedral_position(int j) const;
  int dihedral_order() const { return dihedral_m_; }

  friend RootSystem build_root_system(const CoxeterSpec& spec);
  friend RootSystem root_system_from_coxeter(const CoxeterMatrix& m, std::string label);

 private:
  void build_geometric();
  void build_dihedral(int m);
  void build_bipartition();

  std::string label_;
  int rank_ = 0;
  int num_pos_ = 0;
  bool matrix_model_ = true;
  int field_ = 0;
  CoxeterMatrix coxeter_;
  QMatrix gram_;
  std::vector<QVector> roots_;
  std::vector<std::vector<std::uint16_t>> reflect_;
  std::pair<std::vector<int>, std::vector<int>> bipartition_;
  int dihedral_m_ = 0;
  std::vector<int> dihedral_pos_;  // positive root -> position in [0, m)
};

RootSystem build_root_system(const CoxeterSpec& spec);
inline RootSystem build_root_system(std::string_view text) { return build_root_system(parse_type(text)); }

/// Builds the root system of an arbitrary finite Coxeter matrix; used for
/// parabolic subsystems identified by their own simple roots.
RootSystem root_system_from_coxeter(const CoxeterMatrix& m, std::string label);

struct Component {
  RootSet roots;
  int rank = 0;
  int reflections = 0;
  int coxeter_number = 0;
};

struct ComponentDecomposition {
  std::vector<Component> components;

  /// {h_i}: each component's Coxeter number repeated rank times, ascending.
  std::vector<int> coxeter_multiset() const;
};

/// Connected classes of the non-orthogonality graph on `roots`.
ComponentDecomposition decompose_components(const RootSystem& rs, RootSet roots);

/// Simple roots of the subsystem spanned by `roots` (a reflection-closed set
/// of positive roots): those whose reflection permutes the others.
RootSet simple_subsystem(const RootSystem& rs, RootSet roots);

/// Coxeter matrix among the given roots, m_ij = order of s_i s_j.
CoxeterMatrix coxeter_matrix_of(const RootSystem& rs, const std::vector<int>& simple_roots);

/// For type A_n only: the transposition (i j), 1-based, of a positive root.
std::pair<int, int> a_type_transposition(const RootSystem& rs, int root);

}  // namespace coxlab
