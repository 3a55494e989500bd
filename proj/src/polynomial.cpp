#include "coxlab/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "coxlab/errors.hpp"

namespace coxlab {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, int degree) {
  std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(const mpz_class& a) { return IntPolynomial({a, 1}); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

mpz_class IntPolynomial::leading() const { return coeffs_.empty() ? mpz_class(0) : coeffs_.back(); }

int IntPolynomial::lowest_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return static_cast<int>(i);
  return -1;
}

mpz_class IntPolynomial::evaluate(const mpz_class& t) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpz_class> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(r);
  trim();
  return *this;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << mag.get_str() << " ";
    os << "t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::vector<std::string> IntPolynomial::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

namespace {

// Divide p by (t - r) in place; returns the remainder.
mpz_class synthetic_divide(std::vector<mpz_class>& p, const mpz_class& r) {
  // p[i] multiplies t^i; quotient has degree deg(p) - 1
  const std::size_t n = p.size();
  std::vector<mpz_class> q(n - 1, 0);
  mpz_class carry = 0;
  for (std::size_t k = n; k-- > 1;) {
    carry = p[k] + carry * r;
    q[k - 1] = carry;
  }
  mpz_class rem = p[0] + carry * r;
  p = std::move(q);
  return rem;
}

}  // namespace

std::vector<mpz_class> poly_integer_roots(const IntPolynomial& poly) {
  if (poly.is_zero()) throw NonIntegerRoots("zero polynomial has no finite root multiset");
  std::vector<mpz_class> p = poly.coefficients();
  std::vector<mpz_class> roots;
  while (p.size() > 1 && sgn(p[0]) == 0) {
    roots.emplace_back(0);
    p.erase(p.begin());
  }
  while (p.size() > 1) {
    // any integer root divides the nonzero constant term
    const mpz_class c = abs(p[0]);
    bool found = false;
    mpz_class k = 1;
    for (; k * k <= c && !found; ++k) {
      if (c % k != 0) continue;
      const mpz_class cands[4] = {k, -k, c / k, -(c / k)};
      for (const auto& r : cands) {
        std::vector<mpz_class> trial = p;
        if (sgn(synthetic_divide(trial, r)) == 0) {
          roots.push_back(r);
          p = std::move(trial);
          found = true;
          break;
        }
      }
    }
    if (!found)
      throw NonIntegerRoots("polynomial " + poly.to_string() + " does not split over the integers");
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace coxlab
