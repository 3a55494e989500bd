#include "doctest.h"

#include <algorithm>
#include <deque>
#include <memory>
#include <numeric>
#include <random>

#include "coxlab/hurwitz.hpp"

using namespace coxlab;

namespace {

GroupElement product(const RootSystem& rs, const Factorization& f) {
  GroupElement g = GroupElement::identity(rs);
  for (int t : f) g = g * GroupElement::reflection(rs, t);
  return g;
}

// apply transpositions right to left to 1..n+1
std::vector<int> as_permutation(const RootSystem& rs, const Factorization& f) {
  std::vector<int> p(static_cast<std::size_t>(rs.rank()) + 2);
  std::iota(p.begin(), p.end(), 0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    const auto [i, j] = a_type_transposition(rs, *it);
    for (int& x : p) {
      if (x == i) x = j;
      else if (x == j) x = i;
    }
  }
  return p;
}

}  // namespace

TEST_CASE("A2 factorizations are three 3-cycles") {
  auto rs = std::make_shared<const RootSystem>(build_root_system("A2"));
  const GroupTable gt = enumerate_group(rs);
  const std::size_t c = gt.index_of(coxeter_element(*rs));
  const auto fs = enumerate_factorizations(gt, c);
  REQUIRE(fs.size() == 3);
  const auto target = as_permutation(*rs, fs.front());
  for (const auto& f : fs) {
    CHECK(f[0] != f[1]);
    CHECK(as_permutation(*rs, f) == target);
    CHECK(product(*rs, f) == gt.element(c));
  }
  CHECK(export_dual_presentation(*rs, fs).rank_two_relations() == "ab = bc = ca");
}

TEST_CASE("Hurwitz moves") {
  for (const char* type : {"A3", "B3", "H3"}) {
    CAPTURE(type);
    auto rs = std::make_shared<const RootSystem>(build_root_system(type));
    const GroupTable gt = enumerate_group(rs);
    const std::size_t c = gt.index_of(coxeter_element(*rs));
    const auto fs = enumerate_factorizations(gt, c);
    for (const auto& f : fs) {
      for (int i = 1; i < 3; ++i) {
        const auto g = hurwitz_move(*rs, f, i, 1);
        CHECK(product(*rs, g) == gt.element(c));
        CHECK(hurwitz_move(*rs, g, i, -1) == f);
        CHECK(hurwitz_move(*rs, hurwitz_move(*rs, f, i, -1), i, 1) == f);
      }
    }
    CHECK(hurwitz_orbits(*rs, fs).size() == 1);
  }
}

TEST_CASE("distant Hurwitz moves commute") {
  auto rs = std::make_shared<const RootSystem>(build_root_system("A4"));
  const GroupTable gt = enumerate_group(rs);
  const auto fs = enumerate_factorizations(gt, gt.index_of(coxeter_element(*rs)));
  CHECK(fs.size() == 125);
  for (const auto& f : fs) {
    CHECK(hurwitz_move(*rs, hurwitz_move(*rs, f, 1, 1), 3, 1) == hurwitz_move(*rs, hurwitz_move(*rs, f, 3, 1), 1, 1));
    CHECK(hurwitz_move(*rs, hurwitz_move(*rs, f, 1, -1), 3, 1) ==
          hurwitz_move(*rs, hurwitz_move(*rs, f, 3, 1), 1, -1));
  }
}

TEST_CASE("reflection length is distance in the reflection Cayley graph") {
  for (const char* type : {"B3", "H3"}) {
    CAPTURE(type);
    auto rs = std::make_shared<const RootSystem>(build_root_system(type));
    const GroupTable gt = enumerate_group(rs);
    std::vector<int> dist(gt.order(), -1);
    std::deque<std::size_t> queue{GroupTable::identity_index()};
    dist[GroupTable::identity_index()] = 0;
    while (!queue.empty()) {
      const std::size_t w = queue.front();
      queue.pop_front();
      for (std::size_t t : gt.reflections()) {
        const std::size_t v = gt.multiply(w, t);
        if (dist[v] < 0) {
          dist[v] = dist[w] + 1;
          queue.push_back(v);
        }
      }
    }
    for (std::size_t i = 0; i < gt.order(); ++i) CHECK(gt.reflection_length(i) == dist[i]);
  }
}

TEST_CASE("Coxeter elements in any order have order h") {
  std::mt19937 rng(7);
  for (const auto& [type, h] : std::vector<std::pair<const char*, int>>{{"A4", 5}, {"D4", 6}, {"F4", 12}, {"H3", 10}}) {
    CAPTURE(type);
    const RootSystem rs = build_root_system(type);
    std::vector<int> simples(static_cast<std::size_t>(rs.rank()));
    std::iota(simples.begin(), simples.end(), 0);
    for (int trial = 0; trial < 6; ++trial) {
      std::shuffle(simples.begin(), simples.end(), rng);
      CHECK(element_order(product_of_reflections(rs, simples)) == h);
    }
  }
}

TEST_CASE("c-conjugation orbits") {
  for (const auto& [type, size] : std::vector<std::pair<const char*, std::size_t>>{{"A3", 4}, {"B3", 3}, {"H3", 5}}) {
    CAPTURE(type);
    auto rs = std::make_shared<const RootSystem>(build_root_system(type));
    const GroupTable gt = enumerate_group(rs);
    const GroupElement c = coxeter_element(*rs);
    const auto orbits = c_conjugation_orbits(*rs, enumerate_factorizations(gt, gt.index_of(c)), c);
    for (std::size_t s : orbits.sizes) CHECK(s == size);
  }
}

TEST_CASE("presentation text format") {
  auto rs = std::make_shared<const RootSystem>(build_root_system("A2"));
  const GroupTable gt = enumerate_group(rs);
  const auto p = export_dual_presentation(*rs, enumerate_factorizations(gt, gt.index_of(coxeter_element(*rs))));
  const std::string text = p.to_text();
  CHECK(text.rfind("gen t1 = reflection 0\n", 0) == 0);
  CHECK(text.find("words: 3\n") != std::string::npos);
  CHECK(p.to_json(*rs)["count"] == 3);
}
