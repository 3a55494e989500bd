#include "doctest.h"

#include <memory>

#include "coxlab/arrangement.hpp"
#include "coxlab/laplacian.hpp"

using namespace coxlab;

namespace {

bool is_scalar(const QMatrix& m, long h) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != QScalar(i == j ? h : 0)) return false;
  return true;
}

}  // namespace

TEST_CASE("W-Laplacian is h times the identity") {
  const std::vector<std::pair<const char*, long>> cases = {
      {"A2", 3}, {"A3", 4}, {"B3", 6}, {"D4", 6}, {"F4", 12}, {"H3", 10}, {"I2(5)", 5}, {"I2(6)", 6}};
  for (const auto& [type, h] : cases) {
    CAPTURE(type);
    const RootSystem rs = build_root_system(type);
    CHECK(is_scalar(w_laplacian(rs).matrix, h));
    CHECK(is_scalar(laplacian_from_inner_products(rs, rs.all()), h));
    CHECK(is_scalar(laplacian_from_root_matrix(rs, rs.all()), h));
  }
}

TEST_CASE("A3 characteristic polynomial") {
  const RootSystem rs = build_root_system("A3");
  CHECK(laplacian_charpoly(w_laplacian(rs)).to_string() == "t^3 + 12 t^2 + 48 t + 64");
}

TEST_CASE("abstract dihedral Laplacian") {
  const RootSystem rs = build_root_system("I2(7)");
  const auto l = w_laplacian(rs);
  CHECK(l.analytic);
  CHECK(laplacian_charpoly(l).to_string() == "t^2 + 14 t + 49");
  CHECK(pseudodet(l).value == 49);
}

TEST_CASE("product system determinant") {
  // A2 x B2: diag(3, 3, 4, 4)
  const RootSystem rs = build_root_system("A2xB2");
  CHECK(pseudodet(w_laplacian(rs)).value == 3 * 3 * 4 * 4);
  CHECK(coxeter_number_polynomial({3, 3, 4, 4}) == laplacian_charpoly(w_laplacian(rs)));
}

TEST_CASE("parabolic Laplacians are rank deficient") {
  const RootSystem rs = build_root_system("A3");
  // two orthogonal roots: L = 2 on their span, 0 on the orthogonal line
  RootSet pair;
  for (int i = 0; i < rs.num_positive() && pair.size() < 2; ++i) {
    if (pair.empty() || rs.orthogonal(pair.lowest(), i)) pair = pair | RootSet::single(i);
  }
  REQUIRE(pair.size() == 2);
  const auto p = pseudodet(w_laplacian(rs, pair));
  CHECK(p.rank == 2);
  CHECK(p.value == 4);
}

TEST_CASE("K4 from the permutation model") {
  const QMatrix l = permutation_model_laplacian(3);
  REQUIRE(l.rows() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(l(i, j) == QScalar(i == j ? 3 : -1));
}

TEST_CASE("parabolic expansion and the Coxeter-number recursion") {
  for (const char* type : {"A2", "A3", "B2", "B3", "H3", "I2(8)"}) {
    CAPTURE(type);
    const auto lat = build_lattice(std::make_shared<const RootSystem>(build_root_system(type)));
    const auto a = verify_parabolic_charpoly(lat, false);
    CHECK(a.pass);
    CHECK(a.lhs == a.rhs);
    const auto b = verify_cox_number_recursion(lat, false);
    CHECK(b.pass);
    CHECK(b.slice_lhs == b.slice_rhs);
  }
}
