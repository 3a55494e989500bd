#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coxlab/group.hpp"
#include "coxlab/polynomial.hpp"
#include "coxlab/root_system.hpp"

namespace coxlab {

/// A flat of the reflection arrangement, identified by the closed set of
/// hyperplanes containing it. `basis` spans the flat and is left empty for
/// coordinate-free dihedral models.
struct Flat {
  RootSet hyperplanes;
  std::vector<QVector> basis;
  int dim = 0;
  int codim = 0;
};

/// Intersection lattice of all flats, sorted by codimension and then by
/// hyperplane set. Index 0 is the whole space V.
class IntersectionLattice {
 public:
  explicit IntersectionLattice(std::shared_ptr<const RootSystem> rs);

  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> roots_ptr() const { return rs_; }
  int rank() const { return rs_->rank(); }

  std::size_t size() const { return flats_.size(); }
  const Flat& flat(std::size_t i) const { return flats_[i]; }
  const std::vector<Flat>& flats() const { return flats_; }
  std::optional<std::size_t> find(RootSet hyperplanes) const;
  std::size_t index_of(RootSet hyperplanes) const;

  std::size_t top() const { return 0; }
  std::size_t bottom() const { return flats_.size() - 1; }
  /// Indices of flats of the given dimension.
  std::vector<std::size_t> of_dimension(int dim) const;
  std::vector<int> graded_counts() const;  // indexed by dimension

  /// Y is a subspace of X.
  bool below(std::size_t y, std::size_t x) const {
    return flats_[y].hyperplanes.contains(flats_[x].hyperplanes);
  }
  /// X intersected with Y.
  std::size_t meet(std::size_t x, std::size_t y) const;

  /// mu(base, Y) for every flat, zero unless Y lies in base. Rows are
  /// memoized on first use; safe to call concurrently.
  const std::vector<long>& mobius_row(std::size_t base) const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<Flat> flats_;
  std::unordered_map<RootSet, std::size_t, RootSetHash> index_;
  std::unique_ptr<std::mutex> memo_mutex_ = std::make_unique<std::mutex>();
  mutable std::unordered_map<std::size_t, std::unique_ptr<std::vector<long>>> mobius_;
};

IntersectionLattice build_lattice(std::shared_ptr<const RootSystem> rs);

/// Positive roots whose hyperplane contains the flat: the root system of its
/// pointwise stabilizer.
RootSet parabolic_of_flat(const Flat& f);

/// Characteristic polynomial of the restriction of the arrangement to `base`.
IntPolynomial characteristic_polynomial(const IntersectionLattice& lat, std::size_t base);
/// Number of chambers of the restriction: (-1)^dim * chi(-1).
mpz_class chamber_count(const IntersectionLattice& lat, std::size_t base);
/// Integer roots of the restricted characteristic polynomial, ascending.
std::vector<mpz_class> os_exponents(const IntersectionLattice& lat, std::size_t base);

/// Hyperplane set of w(X).
RootSet act_on_flat(const RootSystem& rs, const GroupElement& w, RootSet hyperplanes);

/// Order of the subgroup generated by the reflections in `roots`.
std::size_t subgroup_order(const GroupTable& gt, RootSet roots);

struct FlatOrbitData {
  std::size_t orbit = 0;          // orbit id, numbered by first flat index
  std::size_t normalizer = 0;     // |N(X)|
  std::size_t parabolic = 0;      // |W_X|
  mpz_class chambers;             // c(A^X)
  mpz_class nu;                   // c(A^X) / [N(X) : W_X]
  int direct_count = 0;           // standard parabolics W_I with Fix(W_I) in the orbit
};

/// Orbit and normalizer data of every flat, with nu checked against the
/// direct count of standard parabolics. Throws PropertyViolation on any
/// disagreement or non-integral nu.
std::vector<FlatOrbitData> flat_orbit_data(const IntersectionLattice& lat, const GroupTable& gt);

}  // namespace coxlab
