#include "doctest.h"

#include "coxlab/errors.hpp"
#include "coxlab/matrix.hpp"

using namespace coxlab;

TEST_CASE("quadratic field arithmetic") {
  const QScalar r5 = QScalar::sqrt_of(5);
  const QScalar phi = (QScalar(1) + r5) / QScalar(2);
  CHECK(phi * phi == phi + QScalar(1));
  CHECK(phi.sign() > 0);
  CHECK((QScalar(2) - r5).sign() < 0);
  CHECK(phi.inverse() == phi - QScalar(1));
  CHECK((r5 * r5).is_integer());
  CHECK(QScalar(mpq_class(3, 2)) + r5 == QScalar(mpq_class(3, 2), 1, 5));
  CHECK_THROWS_AS(r5 + QScalar::sqrt_of(2), MixedFieldError);
  CHECK_THROWS_AS(QScalar(1, 1, 4), std::invalid_argument);
  CHECK((r5 - r5).is_rational());
}

TEST_CASE("scalar characteristic polynomial of 3I") {
  const QMatrix m = QMatrix::identity(2) * QScalar(3);
  CHECK(mat_charpoly(m).to_string() == "t^2 + 6 t + 9");
  CHECK(determinant(m) == QScalar(9));
}

TEST_CASE("charpoly matches det(tI + M) at sample points") {
  QMatrix m = QMatrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  const IntPolynomial p = mat_charpoly(m);
  for (long t = -3; t <= 3; ++t) {
    QMatrix shifted = m + QMatrix::identity(3) * QScalar(t);
    CHECK(QScalar(mpq_class(p.evaluate(t))) == determinant(shifted));
  }
}

TEST_CASE("irrational charpoly raises") {
  QMatrix m = QMatrix::from_rows({{QScalar::sqrt_of(2), 0}, {0, 1}});
  CHECK_THROWS_AS(mat_charpoly(m), NonIntegerCoefficient);
}

TEST_CASE("rank, null space and spans") {
  QMatrix m = QMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(mat_rank(m) == 2);
  const auto ns = null_space(m);
  REQUIRE(ns.size() == 1);
  for (const auto& x : m.apply(ns[0])) CHECK(x.is_zero());
  Subspace s(3);
  CHECK(s.insert({1, 1, 0}));
  CHECK(s.insert({0, 1, 1}));
  CHECK_FALSE(s.insert({1, 2, 1}));
  CHECK(s.contains({2, 3, 1}));
  CHECK_FALSE(s.contains({0, 0, 1}));
  const QMatrix b = QMatrix::from_columns({{1, 1, 0}, {0, 1, 1}}, 3);
  CHECK(solve_in_span(b, {2, 3, 1}) == QVector{2, 1});
  CHECK_THROWS(solve_in_span(b, {0, 0, 1}));
}

TEST_CASE("integer roots of polynomials") {
  IntPolynomial p = IntPolynomial::linear(-1) * IntPolynomial::linear(-2) * IntPolynomial::linear(0);
  const auto roots = poly_integer_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == 0);
  CHECK(roots[1] == 1);
  CHECK(roots[2] == 2);
  CHECK((IntPolynomial::linear(-1) * IntPolynomial::linear(-2)).to_string() == "t^2 - 3 t + 2");
  CHECK_THROWS_AS(poly_integer_roots(IntPolynomial({1, 0, 1})), NonIntegerRoots);
}
