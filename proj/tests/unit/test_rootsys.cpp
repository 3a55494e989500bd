#include "doctest.h"

#include <map>

#include "coxlab/errors.hpp"
#include "coxlab/group.hpp"
#include "coxlab/root_system.hpp"

using namespace coxlab;

namespace {

// classical tables
const std::map<std::string, std::pair<int, int>> kPositiveAndH = {
    {"A1", {1, 2}},  {"A2", {3, 3}},   {"A3", {6, 4}},   {"A4", {10, 5}}, {"B2", {4, 4}},
    {"B3", {9, 6}},  {"B4", {16, 8}},  {"D4", {12, 6}},  {"D5", {20, 8}}, {"E6", {36, 12}},
    {"F4", {24, 12}}, {"H3", {15, 10}}, {"H4", {60, 30}}, {"I2(5)", {5, 5}}, {"I2(6)", {6, 6}},
    {"I2(7)", {7, 7}}, {"I2(8)", {8, 8}}};

}  // namespace

TEST_CASE("positive root counts and 2N = nh") {
  for (const auto& [type, nh] : kPositiveAndH) {
    CAPTURE(type);
    const RootSystem rs = build_root_system(type);
    CHECK(rs.num_positive() == nh.first);
    const auto dec = decompose_components(rs, rs.all());
    REQUIRE(dec.components.size() == 1);
    CHECK(dec.components[0].coxeter_number == nh.second);
    CHECK(2 * rs.num_positive() == rs.rank() * nh.second);
  }
}

TEST_CASE("roots have norm two and reflections permute roots") {
  for (const char* type : {"B3", "H3", "F4", "I2(5)", "I2(6)"}) {
    CAPTURE(type);
    const RootSystem rs = build_root_system(type);
    for (int i = 0; i < rs.num_positive(); ++i) CHECK(rs.inner(rs.root(i), rs.root(i)) == QScalar(2));
    for (int k = 0; k < rs.num_positive(); ++k) {
      const QMatrix s = rs.reflection_matrix(k);
      CHECK(s * s == QMatrix::identity(static_cast<std::size_t>(rs.rank())));
      for (int j = 0; j < 2 * rs.num_positive(); ++j) CHECK(s.apply(rs.signed_root(j)) == rs.signed_root(rs.reflect(k, j)));
    }
  }
}

TEST_CASE("closure and rank of root subsets") {
  const RootSystem rs = build_root_system("A3");
  CHECK(rs.rank_of(RootSet::single(0) | RootSet::single(1)) == 2);
  CHECK(rs.closure(RootSet::single(0) | RootSet::single(1)).size() == 3);
  CHECK(rs.closure(RootSet::single(0) | RootSet::single(2)).size() == 2);
  CHECK(rs.closure(rs.simples()) == rs.all());
}

TEST_CASE("product types are block diagonal") {
  const RootSystem rs = build_root_system("A2xB2");
  CHECK(rs.num_positive() == 7);
  const auto dec = decompose_components(rs, rs.all());
  CHECK(dec.components.size() == 2);
  CHECK(dec.coxeter_multiset() == std::vector<int>{3, 3, 4, 4});
  CHECK_THROWS_AS(build_root_system("B2xH3"), MixedFieldError);
  CHECK_THROWS_AS(build_root_system("Q7"), InvalidType);
  CHECK_THROWS_AS(build_root_system("D3"), InvalidType);
}

TEST_CASE("simple subsystem recovers parabolic Coxeter matrices") {
  const RootSystem rs = build_root_system("H3");
  const RootSet simples = simple_subsystem(rs, rs.all());
  CHECK(simples == rs.simples());
  const CoxeterMatrix m = coxeter_matrix_of(rs, simples.indices());
  CHECK(m == rs.coxeter());
  const RootSystem again = root_system_from_coxeter(m, "H3'");
  CHECK(again.num_positive() == 15);
}

TEST_CASE("group orders and reflection lengths") {
  const std::map<std::string, std::size_t> orders = {{"A3", 24},  {"B3", 48},   {"D4", 192},   {"H3", 120},
                                                     {"F4", 1152}, {"I2(7)", 14}, {"A2xA1", 12}};
  for (const auto& [type, order] : orders) {
    CAPTURE(type);
    auto rs = std::make_shared<const RootSystem>(build_root_system(type));
    const GroupTable t = enumerate_group(rs);
    CHECK(t.order() == order);
    // reflection length generating function at t=1 counts everything
    std::size_t top = 0;
    for (std::size_t i = 0; i < t.order(); ++i)
      if (t.reflection_length(i) == rs->rank()) ++top;
    CHECK(top > 0);
  }
  auto big = std::make_shared<const RootSystem>(build_root_system("F4"));
  CHECK_THROWS_AS(enumerate_group(big, 100), GroupTooLarge);
}

TEST_CASE("degrees") {
  const std::map<std::string, std::vector<int>> table = {
      {"A3", {2, 3, 4}},       {"B3", {2, 4, 6}},      {"D4", {2, 4, 4, 6}}, {"H3", {2, 6, 10}},
      {"F4", {2, 6, 8, 12}},   {"H4", {2, 12, 20, 30}}, {"E6", {2, 5, 6, 8, 9, 12}},
      {"I2(7)", {2, 7}},       {"I2(5)", {2, 5}}};
  for (const auto& [type, degs] : table) {
    CAPTURE(type);
    const RootSystem rs = build_root_system(type);
    const auto d = degrees(rs);
    REQUIRE(d.size() == 1);
    CHECK(d[0].degrees == degs);
  }
}

TEST_CASE("bipartite orbits") {
  for (const char* type : {"A4", "B3", "D4", "H3", "I2(7)", "I2(8)", "A2xB2"}) {
    CAPTURE(type);
    const RootSystem rs = build_root_system(type);
    int total = 0;
    for (const auto& o : bipartite_conjugation_orbits(rs)) total += o.size;
    CHECK(total == rs.num_positive());
  }
}
