#include "coxlab/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "coxlab/errors.hpp"

namespace coxlab {

namespace {

void extend(const GroupTable& gt, std::size_t c, std::size_t prefix, int remaining, Factorization& current,
            std::vector<Factorization>& out) {
  if (remaining == 0) {
    if (prefix == c) out.push_back(current);
    return;
  }
  const auto& refl = gt.reflections();
  for (std::size_t k = 0; k < refl.size(); ++k) {
    const std::size_t next = gt.multiply(prefix, refl[k]);
    if (gt.reflection_length(gt.multiply(gt.inverse(next), c)) != remaining - 1) continue;
    current.push_back(static_cast<int>(k));
    extend(gt, c, next, remaining - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Factorization> enumerate_factorizations(const GroupTable& gt, std::size_t c) {
  std::vector<Factorization> out;
  Factorization current;
  extend(gt, c, GroupTable::identity_index(), gt.reflection_length(c), current, out);
  return out;
}

Factorization hurwitz_move(const RootSystem& rs, const Factorization& f, int i, int direction) {
  if (i < 1 || i >= static_cast<int>(f.size())) throw std::out_of_range("hurwitz_move: position out of range");
  Factorization g = f;
  const auto a = static_cast<std::size_t>(i - 1);
  const int x = f[a];
  const int y = f[a + 1];
  // the reflection s_x s_y s_x is the reflection in s_x(root y)
  if (direction > 0) {
    g[a] = rs.positive_part(rs.reflect(x, y));
    g[a + 1] = x;
  } else {
    g[a] = y;
    g[a + 1] = rs.positive_part(rs.reflect(y, x));
  }
  return g;
}

std::vector<std::vector<Factorization>> hurwitz_orbits(const RootSystem& rs, const std::vector<Factorization>& fs) {
  std::set<Factorization> pending(fs.begin(), fs.end());
  std::vector<std::vector<Factorization>> orbits;
  while (!pending.empty()) {
    std::set<Factorization> orbit{*pending.begin()};
    std::vector<Factorization> queue{*pending.begin()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Factorization f = queue[head];
      for (int i = 1; i < static_cast<int>(f.size()); ++i)
        for (int dir : {1, -1}) {
          Factorization g = hurwitz_move(rs, f, i, dir);
          if (orbit.insert(g).second) queue.push_back(std::move(g));
        }
    }
    for (const auto& f : orbit) pending.erase(f);
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return orbits;
}

ConjugationOrbits c_conjugation_orbits(const RootSystem& rs, const std::vector<Factorization>& fs,
                                       const GroupElement& c) {
  ConjugationOrbits out;
  out.coxeter_number = element_order(c);
  const int h = out.coxeter_number;
  if (h % 2 == 0) {
    GroupElement p = GroupElement::identity(rs);
    for (int i = 0; i < h / 2; ++i) p = p * c;
    out.half_turn_central = p.is_minus_identity();
  }
  std::set<Factorization> pending(fs.begin(), fs.end());
  while (!pending.empty()) {
    const Factorization start = *pending.begin();
    Factorization f = start;
    std::size_t size = 0;
    do {
      pending.erase(f);
      ++size;
      for (int& t : f) t = rs.positive_part(c.apply(t));
    } while (f != start);
    out.sizes.push_back(size);
  }
  const std::size_t expected = out.half_turn_central ? static_cast<std::size_t>(h / 2) : static_cast<std::size_t>(h);
  for (std::size_t s : out.sizes)
    if (s != expected)
      throw PropertyViolation(rs.label() + ": c-conjugation orbit of size " + std::to_string(s) + ", expected " +
                              std::to_string(expected));
  return out;
}

DualPresentation export_dual_presentation(const RootSystem& rs, const std::vector<Factorization>& fs) {
  DualPresentation p;
  for (int k = 0; k < rs.num_positive(); ++k) p.generators.push_back(k);
  p.words = fs;
  std::sort(p.words.begin(), p.words.end());
  return p;
}

std::string DualPresentation::to_text() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < generators.size(); ++k)
    os << "gen t" << k + 1 << " = reflection " << generators[k] << "\n";
  for (const auto& w : words) {
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "." : "") << "t" << w[i] + 1;
    os << "\n";
  }
  os << "words: " << words.size() << "\n";
  return os.str();
}

nlohmann::ordered_json DualPresentation::to_json(const RootSystem& rs) const {
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < generators.size(); ++k) {
    nlohmann::ordered_json g{{"name", "t" + std::to_string(k + 1)}, {"root", generators[k]}};
    if (rs.has_matrix_model()) {
      nlohmann::ordered_json coords = nlohmann::ordered_json::array();
      for (const auto& x : rs.root(generators[k])) coords.push_back(x.to_string());
      g["coordinates"] = coords;
    }
    gens.push_back(g);
  }
  nlohmann::ordered_json ws = nlohmann::ordered_json::array();
  for (const auto& w : words) {
    nlohmann::ordered_json word = nlohmann::ordered_json::array();
    for (int t : w) word.push_back("t" + std::to_string(t + 1));
    ws.push_back(word);
  }
  return {{"type", rs.label()}, {"generators", gens}, {"words", ws}, {"count", words.size()}};
}

std::string DualPresentation::rank_two_relations() const {
  if (words.empty()) return {};
  for (const auto& w : words)
    if (w.size() != 2) throw std::invalid_argument("rank_two_relations: words are not of length two");
  std::map<int, int> next;
  for (const auto& w : words)
    if (!next.emplace(w[0], w[1]).second) throw PropertyViolation("rank-two relations do not form a single cycle");
  std::map<int, char> name;
  std::vector<std::pair<int, int>> chain;
  int x = words.front()[0];
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto it = next.find(x);
    if (it == next.end()) throw PropertyViolation("rank-two relations do not form a single cycle");
    chain.emplace_back(x, it->second);
    x = it->second;
  }
  if (x != words.front()[0]) throw PropertyViolation("rank-two relations do not form a single cycle");
  auto letter = [&](int g) {
    auto [it, fresh] = name.emplace(g, static_cast<char>('a' + name.size()));
    return it->second;
  };
  std::string out;
  for (const auto& [a, b] : chain) {
    if (!out.empty()) out += " = ";
    out += letter(a);
    out += letter(b);
  }
  return out;
}

}  // namespace coxlab
