#include "coxlab/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>

#include "coxlab/errors.hpp"

namespace coxlab {

namespace {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::H: return 'H';
    case Family::I: return 'I';
  }
  return '?';
}

bool admissible(const CoxeterType& t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::D: return t.rank >= 4;
    case Family::E: return t.rank == 6;
    case Family::F: return t.rank == 4;
    case Family::H: return t.rank == 3 || t.rank == 4;
    case Family::I: return t.rank == 2 && t.m >= 3;
  }
  return false;
}

CoxeterType parse_factor(std::string_view s, std::string_view whole) {
  auto fail = [&](const std::string& why) {
    return InvalidType("invalid Coxeter type '" + std::string(whole) + "': " + why);
  };
  if (s.empty()) throw fail("empty factor");
  CoxeterType t;
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    case 'F': t.family = Family::F; break;
    case 'H': t.family = Family::H; break;
    case 'I': t.family = Family::I; break;
    default: throw fail("unknown family");
  }
  std::string_view rest = s.substr(1);
  auto parse_int = [&](std::string_view digits) {
    if (digits.empty() || digits.size() > 4) throw fail("bad number");
    int v = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw fail("bad number");
      v = v * 10 + (c - '0');
    }
    return v;
  };
  if (t.family == Family::I) {
    if (rest.size() < 4 || rest[0] != '2' || rest[1] != '(' || rest.back() != ')')
      throw fail("dihedral types are written I2(m)");
    t.rank = 2;
    t.m = parse_int(rest.substr(2, rest.size() - 3));
  } else {
    t.rank = parse_int(rest);
  }
  if (!admissible(t)) throw fail("not an admissible finite type");
  return t;
}

// 2cos(pi/m) as an exact quadratic irrationality, when it is one.
bool two_cos_pi_over(int m, QScalar& out) {
  switch (m) {
    case 2: out = 0; return true;
    case 3: out = 1; return true;
    case 4: out = QScalar::sqrt_of(2); return true;
    case 5: out = QScalar(mpq_class(1, 2), mpq_class(1, 2), 5); return true;
    case 6: out = QScalar::sqrt_of(3); return true;
    default: return false;
  }
}

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

std::string CoxeterType::to_string() const {
  if (family == Family::I) return "I2(" + std::to_string(m) + ")";
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

int CoxeterSpec::rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank;
  return r;
}

std::string CoxeterSpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + factors[i].to_string();
  return s;
}

double CoxeterSpec::nominal_order() const {
  double order = 1;
  for (const auto& f : factors) {
    const int n = f.rank;
    switch (f.family) {
      case Family::A: order *= static_cast<double>(factorial(n + 1)); break;
      case Family::B: order *= static_cast<double>(factorial(n)) * static_cast<double>(1LL << n); break;
      case Family::D: order *= static_cast<double>(factorial(n)) * static_cast<double>(1LL << (n - 1)); break;
      case Family::E: order *= 51840; break;
      case Family::F: order *= 1152; break;
      case Family::H: order *= n == 3 ? 120 : 14400; break;
      case Family::I: order *= 2 * f.m; break;
    }
  }
  return order;
}

CoxeterSpec parse_type(std::string_view text) {
  CoxeterSpec spec;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == 'x' || text[i] == 'X') {
      spec.factors.push_back(parse_factor(text.substr(start, i - start), text));
      start = i + 1;
    }
  }
  return spec;
}

CoxeterMatrix coxeter_matrix(const CoxeterSpec& spec) {
  const int n = spec.rank();
  CoxeterMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  int off = 0;
  for (const auto& f : spec.factors) {
    auto edge = [&](int i, int j, int label) {
      m[static_cast<std::size_t>(off + i)][static_cast<std::size_t>(off + j)] = label;
      m[static_cast<std::size_t>(off + j)][static_cast<std::size_t>(off + i)] = label;
    };
    const int r = f.rank;
    switch (f.family) {
      case Family::A:
        for (int i = 0; i + 1 < r; ++i) edge(i, i + 1, 3);
        break;
      case Family::B:
        for (int i = 0; i + 1 < r; ++i) edge(i, i + 1, i + 2 == r ? 4 : 3);
        break;
      case Family::D:
        for (int i = 0; i + 2 < r; ++i) edge(i, i + 1, 3);
        edge(r - 3, r - 1, 3);
        break;
      case Family::E:
        edge(0, 2, 3);
        edge(2, 3, 3);
        edge(3, 4, 3);
        edge(4, 5, 3);
        edge(1, 3, 3);
        break;
      case Family::F:
        edge(0, 1, 3);
        edge(1, 2, 4);
        edge(2, 3, 3);
        break;
      case Family::H:
        edge(0, 1, 5);
        for (int i = 1; i + 1 < r; ++i) edge(i, i + 1, 3);
        break;
      case Family::I:
        edge(0, 1, f.m);
        break;
    }
    off += r;
  }
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

std::vector<int> RootSet::indices() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

void RootSystem::build_geometric() {
  const auto n = static_cast<std::size_t>(rank_);
  gram_ = QMatrix(n, n);
  field_ = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        gram_(i, j) = 2;
        continue;
      }
      QScalar c;
      if (!two_cos_pi_over(coxeter_[i][j], c))
        throw InvalidType(label_ + ": no quadratic-field model for m = " + std::to_string(coxeter_[i][j]));
      gram_(i, j) = -c;
      if (c.field() != 0) {
        if (field_ != 0 && field_ != c.field())
          throw MixedFieldError(label_ + ": factors need different quadratic fields (sqrt " +
                            std::to_string(field_) + " and sqrt " + std::to_string(c.field()) + ")");
        field_ = c.field();
      }
    }

  // closure of the simple roots under the simple reflections
  std::map<QVector, int> seen;
  std::vector<QVector> all;
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    QVector e(n);
    e[i] = 1;
    seen.emplace(e, static_cast<int>(all.size()));
    queue.push_back(all.size());
    all.push_back(std::move(e));
  }
  while (!queue.empty()) {
    const QVector r = all[queue.front()];
    queue.pop_front();
    const QVector gr = gram_.apply(r);
    for (std::size_t i = 0; i < n; ++i) {
      if (gr[i].is_zero()) continue;
      QVector img = r;
      img[i] -= gr[i];
      if (seen.count(img)) continue;
      if (all.size() >= 128) throw InvalidType(label_ + ": root system too large (more than 64 positive roots)");
      seen.emplace(img, static_cast<int>(all.size()));
      queue.push_back(all.size());
      all.push_back(std::move(img));
    }
  }

  std::vector<QVector> pos;
  for (const auto& r : all) {
    bool positive = true;
    for (const auto& x : r)
      if (x.sign() < 0) positive = false;
    if (positive) pos.push_back(r);
  }
  auto height = [](const QVector& r) {
    QScalar h;
    for (const auto& x : r) h += x;
    return h;
  };
  // simple roots keep their diagram index; the rest sort by height, then coordinates
  std::stable_sort(pos.begin(), pos.end(), [&](const QVector& x, const QVector& y) {
    const QScalar hx = height(x), hy = height(y);
    const bool sx = hx == QScalar(1) && std::count_if(x.begin(), x.end(), [](const QScalar& v) { return !v.is_zero(); }) == 1;
    const bool sy = hy == QScalar(1) && std::count_if(y.begin(), y.end(), [](const QScalar& v) { return !v.is_zero(); }) == 1;
    if (sx != sy) return sx;
    if (sx) return y < x;  // e_0 sorts before e_1
    if (!(hx == hy)) return hx < hy;
    return x < y;
  });
  num_pos_ = static_cast<int>(pos.size());
  if (num_pos_ > 64) throw InvalidType(label_ + ": more than 64 positive roots is not supported");
  roots_ = pos;

  std::map<QVector, int> signed_index;
  for (int i = 0; i < num_pos_; ++i) {
    signed_index.emplace(roots_[static_cast<std::size_t>(i)], i);
    QVector neg = roots_[static_cast<std::size_t>(i)];
    for (auto& x : neg) x = -x;
    signed_index.emplace(std::move(neg), i + num_pos_);
  }
  reflect_.assign(static_cast<std::size_t>(num_pos_), std::vector<std::uint16_t>(static_cast<std::size_t>(2 * num_pos_)));
  for (int k = 0; k < num_pos_; ++k) {
    const QVector& rk = roots_[static_cast<std::size_t>(k)];
    const QVector grk = gram_.apply(rk);
    for (int j = 0; j < 2 * num_pos_; ++j) {
      QVector rj = signed_root(j);
      const QScalar c = dot(grk, rj);
      if (!c.is_zero())
        for (std::size_t t = 0; t < n; ++t) rj[t] -= c * rk[t];
      auto it = signed_index.find(rj);
      if (it == signed_index.end()) throw PropertyViolation(label_ + ": root set not closed under reflections");
      reflect_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(it->second);
    }
  }
}

void RootSystem::build_dihedral(int m) {
  matrix_model_ = false;
  dihedral_m_ = m;
  num_pos_ = m;
  dihedral_pos_.resize(static_cast<std::size_t>(m));
  dihedral_pos_[0] = 0;
  dihedral_pos_[1] = m - 1;
  for (int i = 2; i < m; ++i) dihedral_pos_[static_cast<std::size_t>(i)] = i - 1;
  std::vector<int> index_of_pos(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) index_of_pos[static_cast<std::size_t>(dihedral_pos_[static_cast<std::size_t>(i)])] = i;
  reflect_.assign(static_cast<std::size_t>(m), std::vector<std::uint16_t>(static_cast<std::size_t>(2 * m)));
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < 2 * m; ++j) {
      // reflection in the root at angle a maps angle b to 2a + pi - b
      const int p = ((2 * dihedral_position(k) + m - dihedral_position(j)) % (2 * m) + 2 * m) % (2 * m);
      const int idx = p < m ? index_of_pos[static_cast<std::size_t>(p)] : index_of_pos[static_cast<std::size_t>(p - m)] + m;
      reflect_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(idx);
    }
}

void RootSystem::build_bipartition() {
  std::vector<int> color(static_cast<std::size_t>(rank_), -1);
  for (int s = 0; s < rank_; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      const int u = q.front();
      q.pop_front();
      for (int v = 0; v < rank_; ++v) {
        if (v == u || coxeter_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == 2) continue;
        if (color[static_cast<std::size_t>(v)] < 0) {
          color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
          q.push_back(v);
        } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
          throw PropertyViolation(label_ + ": Coxeter diagram is not bipartite");
        }
      }
    }
  }
  bipartition_ = {};
  for (int s = 0; s < rank_; ++s) (color[static_cast<std::size_t>(s)] == 0 ? bipartition_.first : bipartition_.second).push_back(s);
}

int RootSystem::dihedral_position(int j) const {
  if (matrix_model_) throw NoMatrixModel(label_ + ": not a combinatorial dihedral model");
  return j < num_pos_ ? dihedral_pos_[static_cast<std::size_t>(j)] : dihedral_pos_[static_cast<std::size_t>(j - num_pos_)] + dihedral_m_;
}

bool RootSystem::orthogonal(int i, int j) const {
  if (!matrix_model_) {
    if (dihedral_m_ % 2) return false;
    return std::abs(dihedral_position(i) - dihedral_position(j)) == dihedral_m_ / 2;
  }
  return inner(root(i), root(j)).is_zero();
}

const QVector& RootSystem::root(int i) const {
  if (!matrix_model_) throw NoMatrixModel(label_ + " has no coordinate model");
  return roots_.at(static_cast<std::size_t>(i));
}

QVector RootSystem::signed_root(int j) const {
  QVector r = root(positive_part(j));
  if (!is_positive(j))
    for (auto& x : r) x = -x;
  return r;
}

const QMatrix& RootSystem::gram() const {
  if (!matrix_model_) throw NoMatrixModel(label_ + " has no coordinate model");
  return gram_;
}

QScalar RootSystem::inner(const QVector& x, const QVector& y) const { return dot(gram().apply(x), y); }

QMatrix RootSystem::reflection_matrix(int k) const {
  const QVector& r = root(k);
  const QVector gr = gram_.apply(r);
  const auto n = static_cast<std::size_t>(rank_);
  QMatrix m = QMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!r[i].is_zero() && !gr[j].is_zero()) m(i, j) -= r[i] * gr[j];
  return m;
}

int RootSystem::rank_of(RootSet s) const {
  if (!matrix_model_) return std::min(s.size(), 2);
  Subspace span(static_cast<std::size_t>(rank_));
  for (int i : s.indices()) span.insert(root(i));
  return static_cast<int>(span.dimension());
}

RootSet RootSystem::closure(RootSet s) const {
  if (!matrix_model_) return s.size() >= 2 ? all() : s;
  Subspace span(static_cast<std::size_t>(rank_));
  for (int i : s.indices()) span.insert(root(i));
  RootSet out = s;
  for (int i = 0; i < num_pos_; ++i)
    if (!out.contains(i) && span.contains(root(i))) out.insert(i);
  return out;
}

RootSystem root_system_from_coxeter(const CoxeterMatrix& m, std::string label) {
  RootSystem rs;
  rs.label_ = std::move(label);
  rs.rank_ = static_cast<int>(m.size());
  rs.coxeter_ = m;
  if (rs.rank_ < 1) throw InvalidType("empty Coxeter matrix");
  QScalar tmp;
  if (rs.rank_ == 2 && !two_cos_pi_over(m[0][1], tmp)) {
    rs.build_dihedral(m[0][1]);
  } else {
    rs.build_geometric();
  }
  rs.build_bipartition();
  return rs;
}

RootSystem build_root_system(const CoxeterSpec& spec) {
  for (const auto& f : spec.factors) {
    QScalar tmp;
    if (f.family == Family::I && !two_cos_pi_over(f.m, tmp) && spec.factors.size() > 1)
      throw InvalidType(spec.to_string() + ": products with a non-quadratic dihedral factor are not supported");
  }
  return root_system_from_coxeter(coxeter_matrix(spec), spec.to_string());
}

std::vector<int> ComponentDecomposition::coxeter_multiset() const {
  std::vector<int> out;
  for (const auto& c : components) out.insert(out.end(), static_cast<std::size_t>(c.rank), c.coxeter_number);
  std::sort(out.begin(), out.end());
  return out;
}

ComponentDecomposition decompose_components(const RootSystem& rs, RootSet roots) {
  ComponentDecomposition dec;
  RootSet left = roots;
  while (!left.empty()) {
    const int seed = left.lowest();
    RootSet comp = RootSet::single(seed);
    std::deque<int> q{seed};
    while (!q.empty()) {
      const int u = q.front();
      q.pop_front();
      for (int v : left.indices())
        if (!comp.contains(v) && !rs.orthogonal(u, v)) {
          comp.insert(v);
          q.push_back(v);
        }
    }
    left = RootSet(left.bits() & ~comp.bits());
    Component c;
    c.roots = comp;
    c.rank = rs.rank_of(comp);
    c.reflections = comp.size();
    if ((2 * c.reflections) % c.rank != 0)
      throw PropertyViolation(rs.label() + ": component with 2N/r not an integer");
    c.coxeter_number = 2 * c.reflections / c.rank;
    dec.components.push_back(c);
  }
  return dec;
}

RootSet simple_subsystem(const RootSystem& rs, RootSet roots) {
  RootSet out;
  for (int s : roots.indices()) {
    bool simple = true;
    for (int t : roots.indices()) {
      if (t == s) continue;
      const int img = rs.reflect(s, t);
      if (!rs.is_positive(img)) {
        simple = false;
        break;
      }
    }
    if (simple) out.insert(s);
  }
  return out;
}

CoxeterMatrix coxeter_matrix_of(const RootSystem& rs, const std::vector<int>& simple_roots) {
  const std::size_t r = simple_roots.size();
  CoxeterMatrix m(r, std::vector<int>(r, 1));
  std::vector<int> id(static_cast<std::size_t>(2 * rs.num_positive()));
  std::iota(id.begin(), id.end(), 0);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) {
      // order of s_a s_b acting on the signed roots
      std::vector<int> cur = id;
      int order = 0;
      do {
        for (auto& j : cur) j = rs.reflect(simple_roots[a], rs.reflect(simple_roots[b], j));
        ++order;
      } while (cur != id);
      m[a][b] = m[b][a] = order;
    }
  return m;
}

std::pair<int, int> a_type_transposition(const RootSystem& rs, int root) {
  const auto& cm = rs.coxeter();
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = i + 1; j < rs.rank(); ++j)
      if (cm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != (j == i + 1 ? 3 : 2))
        throw InvalidType(rs.label() + " is not of type A");
  const QVector& r = rs.root(root);
  int first = -1, last = -1;
  for (int i = 0; i < rs.rank(); ++i) {
    if (r[static_cast<std::size_t>(i)].is_zero()) continue;
    if (!(r[static_cast<std::size_t>(i)] == QScalar(1))) throw PropertyViolation("unexpected A-type root coordinate");
    if (first < 0) first = i;
    last = i;
  }
  return {first + 1, last + 2};
}

}  // namespace coxlab
