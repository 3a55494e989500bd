#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace coxlab {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// coefficient i multiplying t^i. Trailing zeros are always stripped, so the
/// zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  static IntPolynomial monomial(const mpz_class& c, int degree);
  /// (t + a)
  static IntPolynomial linear(const mpz_class& a);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  mpz_class coefficient(int i) const;
  mpz_class leading() const;

  /// Lowest index with a nonzero coefficient; -1 for the zero polynomial.
  int lowest_degree() const;

  mpz_class evaluate(const mpz_class& t) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Human form, highest degree first: "t^3 + 12 t^2 + 48 t + 64".
  std::string to_string() const;
  /// Coefficients as decimal strings, index = degree.
  std::vector<std::string> coefficient_strings() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Integer roots of p with multiplicity, ascending. Throws NonIntegerRoots
/// unless p = lead * prod (t - r_i) with every r_i an integer.
std::vector<mpz_class> poly_integer_roots(const IntPolynomial& p);

}  // namespace coxlab
