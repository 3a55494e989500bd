#include "coxlab/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "coxlab/errors.hpp"

namespace coxlab {

namespace {

std::vector<QVector> flat_basis(const RootSystem& rs, RootSet hyperplanes) {
  if (!rs.has_matrix_model()) return {};
  const auto n = static_cast<std::size_t>(rs.rank());
  if (hyperplanes.empty()) {
    std::vector<QVector> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(QMatrix::identity(n).column(i));
    return basis;
  }
  // X = { v : <sigma, v> = 0 for sigma in hyperplanes }
  std::vector<QVector> normals;
  for (int k : hyperplanes.indices()) normals.push_back(rs.gram().apply(rs.root(k)));
  return null_space(QMatrix::from_rows(normals));
}

}  // namespace

IntersectionLattice::IntersectionLattice(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {
  const RootSystem& r = *rs_;
  std::vector<RootSet> level{RootSet{}};
  std::vector<std::pair<int, RootSet>> found{{0, RootSet{}}};
  for (int codim = 1; codim <= r.rank(); ++codim) {
    std::vector<RootSet> next;
    std::unordered_map<RootSet, bool, RootSetHash> seen;
    for (RootSet x : level) {
      RootSet covered = x;
      for (int k = 0; k < r.num_positive(); ++k) {
        if (covered.contains(k)) continue;
        RootSet y = x;
        y.insert(k);
        y = r.closure(y);
        covered = covered | y;
        if (seen.emplace(y, true).second) next.push_back(y);
      }
    }
    std::sort(next.begin(), next.end());
    for (RootSet y : next) found.emplace_back(codim, y);
    level = std::move(next);
  }
  for (const auto& [codim, hyp] : found) {
    Flat f;
    f.hyperplanes = hyp;
    f.codim = codim;
    f.dim = r.rank() - codim;
    f.basis = flat_basis(r, hyp);
    if (r.has_matrix_model() && static_cast<int>(f.basis.size()) != f.dim)
      throw PropertyViolation(r.label() + ": flat basis has the wrong dimension");
    index_.emplace(hyp, flats_.size());
    flats_.push_back(std::move(f));
  }
}

IntersectionLattice build_lattice(std::shared_ptr<const RootSystem> rs) { return IntersectionLattice(std::move(rs)); }

std::optional<std::size_t> IntersectionLattice::find(RootSet hyperplanes) const {
  auto it = index_.find(hyperplanes);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t IntersectionLattice::index_of(RootSet hyperplanes) const {
  auto it = index_.find(hyperplanes);
  if (it == index_.end()) throw PropertyViolation(rs_->label() + ": hyperplane set is not a flat");
  return it->second;
}

std::vector<std::size_t> IntersectionLattice::of_dimension(int dim) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < flats_.size(); ++i)
    if (flats_[i].dim == dim) out.push_back(i);
  return out;
}

std::vector<int> IntersectionLattice::graded_counts() const {
  std::vector<int> counts(static_cast<std::size_t>(rank() + 1), 0);
  for (const auto& f : flats_) ++counts[static_cast<std::size_t>(f.dim)];
  return counts;
}

std::size_t IntersectionLattice::meet(std::size_t x, std::size_t y) const {
  return index_of(rs_->closure(flats_[x].hyperplanes | flats_[y].hyperplanes));
}

const std::vector<long>& IntersectionLattice::mobius_row(std::size_t base) const {
  {
    std::lock_guard<std::mutex> lock(*memo_mutex_);
    auto it = mobius_.find(base);
    if (it != mobius_.end()) return *it->second;
  }
  auto row = std::make_unique<std::vector<long>>(flats_.size(), 0);
  auto& mu = *row;
  mu[base] = 1;
  // flats are sorted by codimension, so every Z strictly above Y comes first
  for (std::size_t y = base + 1; y < flats_.size(); ++y) {
    if (!below(y, base) || flats_[y].codim == flats_[base].codim) continue;
    long s = 0;
    for (std::size_t z = base; z < y; ++z)
      if (mu[z] != 0 && flats_[z].codim < flats_[y].codim && below(y, z)) s += mu[z];
    mu[y] = -s;
  }
  std::lock_guard<std::mutex> lock(*memo_mutex_);
  auto [it, inserted] = mobius_.emplace(base, std::move(row));
  return *it->second;
}

RootSet parabolic_of_flat(const Flat& f) { return f.hyperplanes; }

IntPolynomial characteristic_polynomial(const IntersectionLattice& lat, std::size_t base) {
  const auto& mu = lat.mobius_row(base);
  IntPolynomial chi;
  for (std::size_t y = 0; y < lat.size(); ++y)
    if (mu[y] != 0) chi += IntPolynomial::monomial(mpz_class(mu[y]), lat.flat(y).dim);
  return chi;
}

mpz_class chamber_count(const IntersectionLattice& lat, std::size_t base) {
  mpz_class v = characteristic_polynomial(lat, base).evaluate(-1);
  return lat.flat(base).dim % 2 ? mpz_class(-v) : v;
}

std::vector<mpz_class> os_exponents(const IntersectionLattice& lat, std::size_t base) {
  return poly_integer_roots(characteristic_polynomial(lat, base));
}

RootSet act_on_flat(const RootSystem& rs, const GroupElement& w, RootSet hyperplanes) {
  RootSet out;
  for (int k : hyperplanes.indices()) out.insert(rs.positive_part(w.apply(k)));
  return out;
}

std::size_t subgroup_order(const GroupTable& gt, RootSet roots) {
  std::vector<std::size_t> gens;
  for (int k : roots.indices()) gens.push_back(gt.reflections()[static_cast<std::size_t>(k)]);
  std::vector<char> seen(gt.order(), 0);
  std::vector<std::size_t> queue{GroupTable::identity_index()};
  seen[GroupTable::identity_index()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (std::size_t g : gens) {
      const std::size_t x = gt.multiply(queue[head], g);
      if (!seen[x]) {
        seen[x] = 1;
        queue.push_back(x);
      }
    }
  return queue.size();
}

std::vector<FlatOrbitData> flat_orbit_data(const IntersectionLattice& lat, const GroupTable& gt) {
  const RootSystem& rs = lat.roots();
  const std::size_t none = lat.size();
  std::vector<std::size_t> orbit_of(lat.size(), none);
  std::vector<std::size_t> orbit_size(lat.size(), 0);
  std::vector<GroupElement> gens;
  for (int s = 0; s < rs.rank(); ++s) gens.push_back(GroupElement::reflection(rs, s));

  for (std::size_t x = 0; x < lat.size(); ++x) {
    if (orbit_of[x] != none) continue;
    orbit_of[x] = x;
    std::size_t count = 1;
    std::deque<std::size_t> queue{x};
    while (!queue.empty()) {
      const std::size_t y = queue.front();
      queue.pop_front();
      for (const auto& s : gens) {
        const std::size_t z = lat.index_of(act_on_flat(rs, s, lat.flat(y).hyperplanes));
        if (orbit_of[z] == none) {
          orbit_of[z] = x;
          ++count;
          queue.push_back(z);
        }
      }
    }
    orbit_size[x] = count;
  }

  // direct count: standard parabolic W_I fixes the flat spanned by I
  std::vector<int> direct(lat.size(), 0);
  const int n = rs.rank();
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    RootSet gens_i;
    for (int s = 0; s < n; ++s)
      if (mask & (1U << s)) gens_i.insert(s);
    ++direct[orbit_of[lat.index_of(rs.closure(gens_i))]];
  }

  std::vector<FlatOrbitData> out(lat.size());
  for (std::size_t x = 0; x < lat.size(); ++x) {
    const std::size_t rep = orbit_of[x];
    FlatOrbitData& d = out[x];
    d.orbit = rep;
    if (rep != x) {
      d = out[rep];
      continue;
    }
    const RootSet hyp = lat.flat(x).hyperplanes;
    for (std::size_t i = 0; i < gt.order(); ++i)
      if (act_on_flat(rs, gt.element(i), hyp) == hyp) ++d.normalizer;
    if (d.normalizer * orbit_size[x] != gt.order())
      throw PropertyViolation(rs.label() + ": orbit-stabilizer mismatch on a flat");
    d.parabolic = subgroup_order(gt, hyp);
    if (d.normalizer % d.parabolic != 0)
      throw PropertyViolation(rs.label() + ": W_X is not a subgroup of N(X)");
    d.chambers = chamber_count(lat, x);
    const mpz_class index(static_cast<unsigned long>(d.normalizer / d.parabolic));
    if (d.chambers % index != 0)
      throw PropertyViolation(rs.label() + ": c(A^X) not divisible by [N(X):W_X]");
    d.nu = d.chambers / index;
    d.direct_count = direct[x];
    if (d.nu != d.direct_count)
      throw PropertyViolation(rs.label() + ": nu_X = " + d.nu.get_str() + " but " + std::to_string(d.direct_count) +
                              " standard parabolics are conjugate to W_X");
  }
  return out;
}

}  // namespace coxlab
