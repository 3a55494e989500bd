#include "coxlab/ncposet.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "coxlab/errors.hpp"

namespace coxlab {

Poset::Poset(std::vector<std::vector<char>> leq) : leq_(std::move(leq)), covers_(leq_.size()) {
  const std::size_t n = leq_.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq_[x][y] && x > y) throw std::invalid_argument("Poset: indices are not a linear extension");
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < y; ++x) {
      if (!leq_[x][y]) continue;
      bool cover = true;
      for (std::size_t z = x + 1; z < y && cover; ++z)
        if (leq_[x][z] && leq_[z][y]) cover = false;
      if (cover) covers_[y].push_back(x);
    }
}

std::vector<std::size_t> Poset::minimal() const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < size(); ++y)
    if (covers_[y].empty()) out.push_back(y);
  return out;
}

std::vector<std::size_t> Poset::maximal() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x) {
    bool top = true;
    for (std::size_t y = x + 1; y < size() && top; ++y)
      if (leq_[x][y]) top = false;
    if (top) out.push_back(x);
  }
  return out;
}

mpz_class Poset::count_maximal_chains() const {
  const auto lo = minimal();
  const auto hi = maximal();
  if (lo.size() != 1 || hi.size() != 1) throw std::invalid_argument("Poset: not bounded");
  std::vector<mpz_class> f(size(), 0);
  f[lo.front()] = 1;
  for (std::size_t y = 0; y < size(); ++y)
    for (std::size_t x : covers_[y]) f[y] += f[x];
  return f[hi.front()];
}

mpz_class Poset::zeta_value(int k) const {
  if (k < 1) throw std::invalid_argument("zeta_value: k must be positive");
  std::vector<mpz_class> v(size(), 1);
  for (int step = 1; step < k; ++step) {
    std::vector<mpz_class> next(size(), 0);
    for (std::size_t y = 0; y < size(); ++y)
      for (std::size_t x = 0; x <= y; ++x)
        if (leq_[x][y]) next[y] += v[x];
    v = std::move(next);
  }
  return std::accumulate(v.begin(), v.end(), mpz_class(0));
}

Poset Poset::product(const Poset& a, const Poset& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  std::vector<std::vector<char>> leq(na * nb, std::vector<char>(na * nb, 0));
  for (std::size_t x1 = 0; x1 < na; ++x1)
    for (std::size_t y1 = 0; y1 < nb; ++y1)
      for (std::size_t x2 = 0; x2 < na; ++x2)
        for (std::size_t y2 = 0; y2 < nb; ++y2)
          leq[x1 * nb + y1][x2 * nb + y2] = static_cast<char>(a.leq(x1, x2) && b.leq(y1, y2));
  // componentwise order is compatible with lexicographic indexing
  return Poset(std::move(leq));
}

bool absolute_leq(const GroupTable& gt, std::size_t u, std::size_t v) {
  return gt.reflection_length(u) + gt.reflection_length(gt.multiply(gt.inverse(u), v)) == gt.reflection_length(v);
}

std::vector<std::size_t> NCPoset::rank_sizes() const {
  std::vector<std::size_t> sizes;
  for (int r : ranks_) {
    if (static_cast<std::size_t>(r) >= sizes.size()) sizes.resize(static_cast<std::size_t>(r) + 1, 0);
    ++sizes[static_cast<std::size_t>(r)];
  }
  return sizes;
}

NCPoset build_nc(const GroupTable& gt, std::size_t c) {
  NCPoset p;
  p.c_ = c;
  for (std::size_t w = 0; w < gt.order(); ++w)
    if (absolute_leq(gt, w, c)) p.members_.push_back(w);
  std::stable_sort(p.members_.begin(), p.members_.end(), [&](std::size_t a, std::size_t b) {
    return gt.reflection_length(a) < gt.reflection_length(b);
  });
  const std::size_t n = p.members_.size();
  for (std::size_t w : p.members_) p.ranks_.push_back(gt.reflection_length(w));
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      leq[i][j] = static_cast<char>(absolute_leq(gt, p.members_[i], p.members_[j]));
  p.poset_ = Poset(std::move(leq));
  return p;
}

namespace {

mpz_class count_from(const GroupTable& gt, std::size_t prefix, std::size_t c, int remaining) {
  if (remaining == 0) return prefix == c ? 1 : 0;
  mpz_class total = 0;
  const int lp = gt.reflection_length(prefix);
  for (std::size_t t : gt.reflections()) {
    const std::size_t next = gt.multiply(prefix, t);
    // viable iff the prefix stays a reduced left factor of c
    if (gt.reflection_length(next) != lp + 1) continue;
    if (gt.reflection_length(gt.multiply(gt.inverse(next), c)) != remaining - 1) continue;
    total += count_from(gt, next, c, remaining - 1);
  }
  return total;
}

}  // namespace

mpz_class count_reduced_factorizations(const GroupTable& gt, std::size_t c) {
  return count_from(gt, GroupTable::identity_index(), c, gt.reflection_length(c));
}

std::vector<KrewerasLine> kreweras_line_numbers(const NCPoset& p, const IntersectionLattice& lat, const GroupTable& gt,
                                                const std::vector<FlatOrbitData>& orbits) {
  const RootSystem& rs = lat.roots();
  const auto comps = decompose_components(rs, rs.all());
  if (comps.components.size() != 1) throw InvalidType(rs.label() + ": Kreweras line numbers need an irreducible type");
  const int h = comps.components.front().coxeter_number;

  std::map<std::size_t, KrewerasLine> by_orbit;
  for (std::size_t x : lat.of_dimension(1)) {
    KrewerasLine& k = by_orbit[orbits[x].orbit];
    k.orbit = orbits[x].orbit;
    const mpz_class index(static_cast<unsigned long>(orbits[x].normalizer / orbits[x].parabolic));
    if (mpz_class(h) % index != 0) throw PropertyViolation(rs.label() + ": [N(L):W_L] does not divide h");
    k.formula = h / index;
  }
  for (std::size_t w : p.members()) {
    const auto x = lat.find(fixed_flat(rs, gt.element(w)));
    if (!x) throw PropertyViolation(rs.label() + ": fixed space of an NC element is not a flat");
    if (lat.flat(*x).dim != 1) continue;
    ++by_orbit.at(orbits[*x].orbit).count;
  }
  std::vector<KrewerasLine> out;
  for (auto& [orbit, k] : by_orbit) {
    if (k.formula != k.count)
      throw PropertyViolation(rs.label() + ": Kreweras count " + std::to_string(k.count) + " differs from h/[N:W_L] = " +
                              k.formula.get_str());
    out.push_back(k);
  }
  return out;
}

}  // namespace coxlab
