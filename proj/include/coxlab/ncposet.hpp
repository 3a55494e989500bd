#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "coxlab/arrangement.hpp"
#include "coxlab/group.hpp"

namespace coxlab {

/// Finite poset on 0..size-1 given by its reflexive order relation. Element
/// indices must be a linear extension (x <= y implies index x <= index y).
class Poset {
 public:
  Poset() = default;
  explicit Poset(std::vector<std::vector<char>> leq);

  std::size_t size() const { return leq_.size(); }
  bool leq(std::size_t x, std::size_t y) const { return leq_[x][y] != 0; }
  /// Elements covered by y.
  const std::vector<std::size_t>& lower_covers(std::size_t y) const { return covers_[y]; }

  std::vector<std::size_t> minimal() const;
  std::vector<std::size_t> maximal() const;

  /// Number of maximal chains from the unique minimum to the unique maximum.
  mpz_class count_maximal_chains() const;
  /// Number of multichains x_1 <= ... <= x_k: 1^T zeta^(k-1) 1.
  mpz_class zeta_value(int k) const;

  /// Cartesian product with the componentwise order, indexed x * |b| + y.
  static Poset product(const Poset& a, const Poset& b);

 private:
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<std::size_t>> covers_;
};

/// u <=_R v iff l_R(u) + l_R(u^-1 v) = l_R(v). Arguments are table indices.
bool absolute_leq(const GroupTable& gt, std::size_t u, std::size_t v);

/// The interval [1, c] in absolute order.
class NCPoset {
 public:
  const Poset& poset() const { return poset_; }
  std::size_t size() const { return members_.size(); }
  /// Group table index of poset element i; ordered by rank, then table index.
  std::size_t member(std::size_t i) const { return members_[i]; }
  const std::vector<std::size_t>& members() const { return members_; }
  int rank(std::size_t i) const { return ranks_[i]; }
  std::size_t coxeter_index() const { return c_; }
  /// Number of elements of each rank.
  std::vector<std::size_t> rank_sizes() const;

  friend NCPoset build_nc(const GroupTable& gt, std::size_t c);

 private:
  std::vector<std::size_t> members_;
  std::vector<int> ranks_;
  std::size_t c_ = 0;
  Poset poset_;
};

NCPoset build_nc(const GroupTable& gt, std::size_t c);

inline mpz_class count_maximal_chains(const NCPoset& p) { return p.poset().count_maximal_chains(); }
inline mpz_class zeta_value(const NCPoset& p, int k) { return p.poset().zeta_value(k); }

/// Independent oracle: depth-first count of reflection sequences t_1..t_n
/// with product c.
mpz_class count_reduced_factorizations(const GroupTable& gt, std::size_t c);

struct KrewerasLine {
  std::size_t orbit = 0;   // representative flat index
  std::size_t count = 0;   // NC elements whose fixed space lies in the orbit
  mpz_class formula;       // h / [N(L) : W_L]
};

/// Kreweras numbers of the line orbits of an irreducible group; throws
/// PropertyViolation when a direct count differs from the formula.
std::vector<KrewerasLine> kreweras_line_numbers(const NCPoset& p, const IntersectionLattice& lat, const GroupTable& gt,
                                                const std::vector<FlatOrbitData>& orbits);

}  // namespace coxlab
