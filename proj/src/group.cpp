#include "coxlab/group.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <deque>
#include <numbers>
#include <string>

#include "coxlab/errors.hpp"

namespace coxlab {

GroupElement GroupElement::identity(const RootSystem& rs) {
  GroupElement g;
  g.image_.resize(static_cast<std::size_t>(rs.num_positive()));
  for (int i = 0; i < rs.num_positive(); ++i) g.image_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i);
  return g;
}

GroupElement GroupElement::reflection(const RootSystem& rs, int k) {
  GroupElement g;
  g.image_.resize(static_cast<std::size_t>(rs.num_positive()));
  for (int i = 0; i < rs.num_positive(); ++i) g.image_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(rs.reflect(k, i));
  return g;
}

int GroupElement::apply(int j) const {
  const int n = num_positive();
  if (j < n) return image_[static_cast<std::size_t>(j)];
  const int img = image_[static_cast<std::size_t>(j - n)];
  return img < n ? img + n : img - n;
}

GroupElement operator*(const GroupElement& u, const GroupElement& v) {
  GroupElement r;
  r.image_.resize(v.image_.size());
  for (std::size_t i = 0; i < v.image_.size(); ++i) r.image_[i] = static_cast<std::uint16_t>(u.apply(v.image_[i]));
  return r;
}

GroupElement GroupElement::inverse() const {
  const int n = num_positive();
  GroupElement r;
  r.image_.resize(image_.size());
  for (int i = 0; i < n; ++i) {
    const int img = image_[static_cast<std::size_t>(i)];
    if (img < n)
      r.image_[static_cast<std::size_t>(img)] = static_cast<std::uint16_t>(i);
    else
      r.image_[static_cast<std::size_t>(img - n)] = static_cast<std::uint16_t>(i + n);
  }
  return r;
}

bool GroupElement::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

bool GroupElement::is_minus_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i + image_.size()) return false;
  return true;
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : g.images()) h = (h ^ x) * 1099511628211ULL;
  return h;
}

QMatrix element_matrix(const RootSystem& rs, const GroupElement& w) {
  const auto n = static_cast<std::size_t>(rs.rank());
  std::vector<QVector> cols;
  cols.reserve(n);
  for (int j = 0; j < rs.rank(); ++j) cols.push_back(rs.signed_root(w.apply(j)));
  return QMatrix::from_columns(cols, n);
}

int element_order(const GroupElement& w) {
  GroupElement p = w;
  int k = 1;
  while (!p.is_identity()) {
    p = p * w;
    ++k;
  }
  return k;
}

namespace {

int reflection_root(const RootSystem& rs, const GroupElement& w) {
  for (int k = 0; k < rs.num_positive(); ++k)
    if (GroupElement::reflection(rs, k) == w) return k;
  return -1;
}

}  // namespace

int reflection_length(const RootSystem& rs, const GroupElement& w) {
  if (!rs.has_matrix_model()) {
    if (w.is_identity()) return 0;
    return reflection_root(rs, w) >= 0 ? 1 : 2;
  }
  QMatrix m = element_matrix(rs, w) - QMatrix::identity(static_cast<std::size_t>(rs.rank()));
  return static_cast<int>(mat_rank(m));
}

RootSet fixed_flat(const RootSystem& rs, const GroupElement& w) {
  if (!rs.has_matrix_model()) {
    if (w.is_identity()) return {};
    const int k = reflection_root(rs, w);
    return k >= 0 ? RootSet::single(k) : rs.all();
  }
  // Fix(w)^perp = Im(w - 1) for orthogonal w
  const QMatrix m = element_matrix(rs, w) - QMatrix::identity(static_cast<std::size_t>(rs.rank()));
  Subspace image(static_cast<std::size_t>(rs.rank()));
  for (std::size_t j = 0; j < m.cols(); ++j) image.insert(m.column(j));
  RootSet out;
  for (int i = 0; i < rs.num_positive(); ++i)
    if (image.contains(rs.root(i))) out.insert(i);
  return out;
}

std::size_t default_group_cap() {
  if (const char* env = std::getenv("COXLAB_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 60000;
}

std::optional<std::size_t> GroupTable::find(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroupTable::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw PropertyViolation(rs_->label() + ": element not in group table");
  return it->second;
}

std::size_t GroupTable::multiply(std::size_t a, std::size_t b) const { return index_of(elements_[a] * elements_[b]); }

GroupTable enumerate_group(std::shared_ptr<const RootSystem> rs, std::size_t cap) {
  GroupTable t;
  t.rs_ = std::move(rs);
  const RootSystem& r = *t.rs_;
  std::vector<GroupElement> gens;
  for (int s = 0; s < r.rank(); ++s) gens.push_back(GroupElement::reflection(r, s));

  t.elements_.push_back(GroupElement::identity(r));
  t.index_.emplace(t.elements_.front(), 0);
  for (std::size_t head = 0; head < t.elements_.size(); ++head) {
    for (const auto& s : gens) {
      GroupElement g = t.elements_[head] * s;
      if (t.index_.count(g)) continue;
      if (t.elements_.size() >= cap)
        throw GroupTooLarge(r.label() + ": group order exceeds cap " + std::to_string(cap));
      t.index_.emplace(g, t.elements_.size());
      t.elements_.push_back(std::move(g));
    }
  }

  const std::size_t order = t.elements_.size();
  t.inverse_.resize(order);
  t.refl_len_.resize(order);
  for (std::size_t i = 0; i < order; ++i) {
    t.inverse_[i] = t.index_of(t.elements_[i].inverse());
    t.refl_len_[i] = static_cast<std::int8_t>(reflection_length(r, t.elements_[i]));
  }
  for (int k = 0; k < r.num_positive(); ++k) t.refl_indices_.push_back(t.index_of(GroupElement::reflection(r, k)));

  // the elements of reflection length one must be exactly the root reflections
  std::vector<std::size_t> len_one;
  for (std::size_t i = 0; i < order; ++i)
    if (t.refl_len_[i] == 1) len_one.push_back(i);
  std::vector<std::size_t> expected = t.refl_indices_;
  std::sort(expected.begin(), expected.end());
  if (len_one != expected) throw PropertyViolation(r.label() + ": reflections do not match the length-one elements");
  return t;
}

GroupElement product_of_reflections(const RootSystem& rs, const std::vector<int>& roots) {
  GroupElement g = GroupElement::identity(rs);
  for (int k : roots) g = g * GroupElement::reflection(rs, k);
  return g;
}

GroupElement coxeter_element(const RootSystem& rs, CoxeterMode mode) {
  std::vector<int> order;
  if (mode == CoxeterMode::Bipartite) {
    order = rs.bipartition().first;
    order.insert(order.end(), rs.bipartition().second.begin(), rs.bipartition().second.end());
  } else {
    for (int s = 0; s < rs.rank(); ++s) order.push_back(s);
  }
  return product_of_reflections(rs, order);
}

namespace {


// Matrix (doubles) of the Coxeter element of one component, restricted to the
// span of that component's simple roots.
Eigen::MatrixXd component_coxeter_matrix(const RootSystem& rs, const std::vector<int>& simples,
                                         const GroupElement& c) {
  const auto r = static_cast<Eigen::Index>(simples.size());
  Eigen::MatrixXd out(r, r);
  if (!rs.has_matrix_model()) {
    if (r == 1) {
      out(0, 0) = -1;
      return out;
    }
    // c is a rotation; its angle is read off the displacement of one root
    const int m = rs.dihedral_order();
    const int shift = ((rs.dihedral_position(c.apply(0)) - rs.dihedral_position(0)) % (2 * m) + 2 * m) % (2 * m);
    const double theta = shift * std::numbers::pi / m;
    out << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return out;
  }
  std::vector<QVector> basis;
  for (int s : simples) basis.push_back(rs.root(s));
  const QMatrix b = QMatrix::from_columns(basis, static_cast<std::size_t>(rs.rank()));
  for (Eigen::Index j = 0; j < r; ++j) {
    const QVector x = solve_in_span(b, rs.signed_root(c.apply(simples[static_cast<std::size_t>(j)])));
    for (Eigen::Index i = 0; i < r; ++i) out(i, j) = x[static_cast<std::size_t>(i)].to_double();
  }
  return out;
}

}  // namespace

std::vector<ComponentDegrees> degrees(const RootSystem& rs, std::optional<RootSet> subsystem) {
  const RootSet roots = subsystem.value_or(rs.all());
  std::vector<ComponentDegrees> out;
  for (const auto& comp : decompose_components(rs, roots).components) {
    ComponentDegrees cd;
    cd.roots = comp.roots;
    cd.rank = comp.rank;
    cd.coxeter_number = comp.coxeter_number;
    const std::vector<int> simples = simple_subsystem(rs, comp.roots).indices();
    if (static_cast<int>(simples.size()) != comp.rank)
      throw DegreeExtractionError(rs.label() + ": component simple system has the wrong size");
    const GroupElement c = product_of_reflections(rs, simples);
    const Eigen::MatrixXd m = component_coxeter_matrix(rs, simples, c);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
    if (solver.info() != Eigen::Success) throw DegreeExtractionError(rs.label() + ": eigenvalue solver failed");
    const double h = comp.coxeter_number;
    for (Eigen::Index k = 0; k < m.rows(); ++k) {
      double theta = std::arg(solver.eigenvalues()(k));
      if (theta < 0) theta += 2 * std::numbers::pi;
      const double scaled = h * theta / (2 * std::numbers::pi);
      const double exponent = std::round(scaled);
      if (std::abs(scaled - exponent) > kDegreeTolerance)
        throw DegreeExtractionError(rs.label() + ": eigenvalue argument off the 2pi/h grid by " +
                                    std::to_string(std::abs(scaled - exponent)));
      cd.degrees.push_back(static_cast<int>(exponent) + 1);
    }
    std::sort(cd.degrees.begin(), cd.degrees.end());

    const int r = cd.rank;
    const auto& d = cd.degrees;
    auto fail = [&](const std::string& what) {
      return DegreeExtractionError(rs.label() + ": extracted degrees violate " + what);
    };
    if (d.front() != 2) throw fail("d_1 = 2");
    if (d.back() != cd.coxeter_number) throw fail("d_n = h");
    for (int i = 0; i < r; ++i)
      if (d[static_cast<std::size_t>(i)] + d[static_cast<std::size_t>(r - 1 - i)] != cd.coxeter_number + 2)
        throw fail("d_i + d_{n+1-i} = h + 2");
    int exps = 0;
    for (int x : d) exps += x - 1;
    if (exps != comp.reflections) throw fail("sum (d_i - 1) = N");
    out.push_back(std::move(cd));
  }
  return out;
}

void validate_degree_product(const std::vector<ComponentDegrees>& degs, std::size_t order) {
  mpz_class prod = 1;
  for (const auto& c : degs)
    for (int d : c.degrees) prod *= d;
  if (prod != mpz_class(static_cast<unsigned long>(order)))
    throw DegreeExtractionError("product of degrees " + prod.get_str() + " differs from |W| = " + std::to_string(order));
}

std::vector<ReflectionOrbit> bipartite_conjugation_orbits(const RootSystem& rs) {
  const GroupElement c = coxeter_element(rs, CoxeterMode::Bipartite);
  const GroupElement cinv = c.inverse();
  const auto comps = decompose_components(rs, rs.all());
  std::vector<ReflectionOrbit> out;
  RootSet seen;
  for (int start = 0; start < rs.num_positive(); ++start) {
    if (seen.contains(start)) continue;
    ReflectionOrbit orbit;
    int k = start;
    do {
      orbit.members.insert(k);
      // c^-1 s_k c is the reflection in c^-1(root k)
      k = rs.positive_part(cinv.apply(k));
    } while (k != start);
    seen = seen | orbit.members;
    orbit.size = orbit.members.size();
    orbit.simple_count = (orbit.members & rs.simples()).size();
    int h = 0;
    for (const auto& comp : comps.components)
      if (comp.roots.contains(start)) h = comp.coxeter_number;
    const bool half = orbit.size * 2 == h && orbit.simple_count == 1;
    const bool full = orbit.size == h && orbit.simple_count == 2;
    if (!half && !full)
      throw PropertyViolation(rs.label() + ": bipartite orbit of size " + std::to_string(orbit.size) + " with " +
                              std::to_string(orbit.simple_count) + " simple reflections (h = " + std::to_string(h) + ")");
    out.push_back(orbit);
  }
  return out;
}

}  // namespace coxlab
