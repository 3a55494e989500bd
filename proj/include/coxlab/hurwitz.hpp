#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "coxlab/group.hpp"

namespace coxlab {

/// Reflection factorization of c, as positive root indices read left to
/// right: t_1 t_2 ... t_n = c.
using Factorization = std::vector<int>;

/// Every reduced reflection factorization of the element at table index c,
/// in lexicographic order.
std::vector<Factorization> enumerate_factorizations(const GroupTable& gt, std::size_t c);

/// Hurwitz move at 1-based position i < n. direction +1 replaces
/// (t_i, t_{i+1}) by (t_i t_{i+1} t_i, t_i); direction -1 is its inverse,
/// (t_i, t_{i+1}) -> (t_{i+1}, t_{i+1} t_i t_{i+1}).
Factorization hurwitz_move(const RootSystem& rs, const Factorization& f, int i, int direction);

/// Orbits of the Hurwitz action, each sorted; orbits ordered by first member.
std::vector<std::vector<Factorization>> hurwitz_orbits(const RootSystem& rs, const std::vector<Factorization>& fs);

struct ConjugationOrbits {
  int coxeter_number = 0;
  bool half_turn_central = false;  // c^(h/2) = -1
  std::vector<std::size_t> sizes;
};

/// Orbits of termwise conjugation t -> c t c^-1. Throws PropertyViolation
/// unless every orbit has size h/2 (when c^(h/2) = -1) or h (otherwise).
ConjugationOrbits c_conjugation_orbits(const RootSystem& rs, const std::vector<Factorization>& fs,
                                       const GroupElement& c);

/// One generator per reflection and every factorization as a word; all words
/// are declared equal.
struct DualPresentation {
  std::vector<int> generators;  // root index of generator t_{k+1}
  std::vector<Factorization> words;

  std::string to_text() const;
  nlohmann::ordered_json to_json(const RootSystem& rs) const;
  /// For rank two: the relation chain after renaming generators a, b, c, ...
  /// in order of appearance, e.g. "ab = bc = ca".
  std::string rank_two_relations() const;
};

DualPresentation export_dual_presentation(const RootSystem& rs, const std::vector<Factorization>& fs);

}  // namespace coxlab
