#include "doctest.h"

#include <map>
#include <memory>

#include "coxlab/arrangement.hpp"
#include "coxlab/group.hpp"

using namespace coxlab;

namespace {

std::shared_ptr<const RootSystem> roots(const char* type) {
  return std::make_shared<const RootSystem>(build_root_system(type));
}

IntPolynomial poly(std::initializer_list<long> low_to_high) {
  std::vector<mpz_class> c;
  for (long x : low_to_high) c.emplace_back(x);
  return IntPolynomial(c);
}

}  // namespace

TEST_CASE("flat counts by dimension") {
  CHECK(build_lattice(roots("A3")).size() == 15);
  CHECK(build_lattice(roots("A3")).graded_counts() == std::vector<int>{1, 7, 6, 1});
  CHECK(build_lattice(roots("B2")).size() == 6);
  const auto h3 = build_lattice(roots("H3"));
  CHECK(h3.graded_counts() == std::vector<int>{1, 31, 15, 1});
  // dihedral types: V, m lines, origin
  CHECK(build_lattice(roots("I2(9)")).graded_counts() == std::vector<int>{1, 9, 1});
}

TEST_CASE("top is V and bottom is the origin") {
  const auto lat = build_lattice(roots("B3"));
  CHECK(lat.flat(lat.top()).dim == 3);
  CHECK(lat.flat(lat.top()).hyperplanes.empty());
  CHECK(lat.flat(lat.bottom()).dim == 0);
  CHECK(lat.flat(lat.bottom()).hyperplanes == lat.roots().all());
  for (std::size_t x = 0; x < lat.size(); ++x) {
    CHECK(lat.below(lat.bottom(), x));
    CHECK(lat.below(x, lat.top()));
  }
}

TEST_CASE("characteristic polynomials of rank two") {
  const auto a2 = build_lattice(roots("A2"));
  CHECK(characteristic_polynomial(a2, a2.top()) == poly({2, -3, 1}));
  const auto b2 = build_lattice(roots("B2"));
  CHECK(characteristic_polynomial(b2, b2.top()) == poly({3, -4, 1}));
  CHECK(characteristic_polynomial(b2, b2.top()).to_string() == "t^2 - 4 t + 3");
}

TEST_CASE("chamber count equals group order") {
  // regions of a reflection arrangement are simply transitively permuted by W
  for (const char* type : {"A3", "B3", "H3", "D4", "I2(7)"}) {
    CAPTURE(type);
    const auto rs = roots(type);
    const auto lat = build_lattice(rs);
    const auto gt = enumerate_group(rs);
    CHECK(chamber_count(lat, lat.top()) == mpz_class(static_cast<unsigned long>(gt.order())));
  }
}

TEST_CASE("restriction to a line has two chambers") {
  const auto lat = build_lattice(roots("H3"));
  for (std::size_t x : lat.of_dimension(1)) CHECK(chamber_count(lat, x) == 2);
}

TEST_CASE("exponents of the full arrangement") {
  const auto lat = build_lattice(roots("H3"));
  const auto e = os_exponents(lat, lat.top());
  REQUIRE(e.size() == 3);
  CHECK(e[0] == 1);
  CHECK(e[1] == 5);
  CHECK(e[2] == 9);
}

TEST_CASE("meets are intersections") {
  const auto lat = build_lattice(roots("A3"));
  for (std::size_t x = 0; x < lat.size(); ++x)
    for (std::size_t y = 0; y < lat.size(); ++y) {
      const std::size_t m = lat.meet(x, y);
      CHECK(lat.below(m, x));
      CHECK(lat.below(m, y));
      const RootSet both = lat.flat(x).hyperplanes | lat.flat(y).hyperplanes;
      CHECK(lat.flat(m).hyperplanes.contains(both));
    }
}

TEST_CASE("nu agrees with standard parabolic counts") {
  // A2: the three lines form one orbit; W_L = <s>, N(L) = <s, -s> has order 4
  const auto rs = roots("A2");
  const auto lat = build_lattice(rs);
  const auto gt = enumerate_group(rs);
  const auto data = flat_orbit_data(lat, gt);
  for (std::size_t x : lat.of_dimension(1)) {
    CHECK(data[x].parabolic == 2);
    CHECK(data[x].normalizer == 2);
    CHECK(data[x].nu == 2);
    CHECK(data[x].direct_count == 2);
  }
  CHECK(data[lat.top()].nu == 1);
  CHECK(data[lat.bottom()].nu == 1);
}

TEST_CASE("orbit sizes are index of the normalizer") {
  for (const char* type : {"A3", "B3"}) {
    CAPTURE(type);
    const auto rs = roots(type);
    const auto lat = build_lattice(rs);
    const auto gt = enumerate_group(rs);
    const auto data = flat_orbit_data(lat, gt);
    std::map<std::size_t, std::size_t> sizes;
    for (const auto& d : data) ++sizes[d.orbit];
    for (std::size_t x = 0; x < lat.size(); ++x) CHECK(sizes[data[x].orbit] * data[x].normalizer == gt.order());
  }
}
