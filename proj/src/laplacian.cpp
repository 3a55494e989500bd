#include "coxlab/laplacian.hpp"

#include <string>

#include "coxlab/errors.hpp"

namespace coxlab {

WLaplacian w_laplacian(const RootSystem& rs, std::optional<RootSet> roots) {
  WLaplacian l;
  l.roots = roots.value_or(rs.all());
  const auto n = static_cast<std::size_t>(rs.rank());
  if (!rs.has_matrix_model()) {
    if (l.roots.empty()) {
      l.matrix = QMatrix(n, n);
    } else if (l.roots == rs.all()) {
      l.matrix = QMatrix::identity(n) * QScalar(static_cast<long>(rs.dihedral_order()));
      l.analytic = true;
    } else {
      throw NoMatrixModel(rs.label() + ": parabolic Laplacian needs coordinates");
    }
    return l;
  }
  l.matrix = QMatrix(n, n);
  const QMatrix id = QMatrix::identity(n);
  for (int k : l.roots.indices()) l.matrix += id - rs.reflection_matrix(k);
  return l;
}

QMatrix laplacian_from_inner_products(const RootSystem& rs, RootSet roots) {
  const auto n = static_cast<std::size_t>(rs.rank());
  std::vector<QVector> cols;
  for (std::size_t j = 0; j < n; ++j) {
    const QVector e = QMatrix::identity(n).column(j);
    QVector img(n);
    for (int k : roots.indices()) {
      const QScalar c = rs.inner(rs.root(k), e);
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) img[i] += c * rs.root(k)[i];
    }
    cols.push_back(std::move(img));
  }
  return QMatrix::from_columns(cols, n);
}

QMatrix laplacian_from_root_matrix(const RootSystem& rs, RootSet roots) {
  std::vector<QVector> cols;
  for (int k : roots.indices()) cols.push_back(rs.root(k));
  const auto n = static_cast<std::size_t>(rs.rank());
  if (cols.empty()) return QMatrix(n, n);
  const QMatrix r = QMatrix::from_columns(cols, n);
  return r * r.transpose() * rs.gram();
}

PseudoDet pseudodet(const IntPolynomial& charpoly) {
  PseudoDet p;
  const int low = charpoly.lowest_degree();
  p.value = charpoly.coefficient(low);
  p.rank = charpoly.degree() - low;
  return p;
}

IntPolynomial laplacian_charpoly(const WLaplacian& l) { return mat_charpoly(l.matrix); }

PseudoDet pseudodet(const WLaplacian& l) { return pseudodet(laplacian_charpoly(l)); }

namespace {

std::string describe_mismatch(const IntPolynomial& a, const IntPolynomial& b) {
  const int deg = std::max(a.degree(), b.degree());
  for (int i = 0; i <= deg; ++i)
    if (a.coefficient(i) != b.coefficient(i))
      return "coefficient of t^" + std::to_string(i) + ": " + a.coefficient(i).get_str() + " vs " +
             b.coefficient(i).get_str();
  return {};
}

void finish(PolynomialCheck& c, const std::string& what, const std::string& label, bool strict) {
  c.mismatch = describe_mismatch(c.lhs, c.rhs);
  if (c.mismatch.empty() && c.slice_lhs != c.slice_rhs)
    c.mismatch = "t^1 slice: " + c.slice_lhs.get_str() + " vs " + c.slice_rhs.get_str();
  c.pass = c.mismatch.empty();
  if (!c.pass && strict) throw PropertyViolation(label + ": " + what + " fails at " + c.mismatch);
}

}  // namespace

PolynomialCheck verify_parabolic_charpoly(const IntersectionLattice& lat, bool strict) {
  const RootSystem& rs = lat.roots();
  PolynomialCheck c;
  const WLaplacian full = w_laplacian(rs);
  c.lhs = laplacian_charpoly(full);
  if (!rs.has_matrix_model()) {
    // pdet of a rank-one Laplacian is <sigma, sigma> = 2; the top term is m^2
    c.analytic = true;
    for (const auto& f : lat.flats()) {
      mpz_class p = 1;
      if (f.codim == 1) p = 2;
      if (f.codim == 2) p = mpz_class(rs.dihedral_order()) * rs.dihedral_order();
      c.rhs += IntPolynomial::monomial(p, f.dim);
    }
  } else {
    for (const auto& f : lat.flats())
      c.rhs += IntPolynomial::monomial(pseudodet(w_laplacian(rs, parabolic_of_flat(f))).value, f.dim);
  }
  finish(c, "parabolic charpoly identity", rs.label(), strict);
  return c;
}

IntPolynomial coxeter_number_polynomial(const std::vector<int>& multiset) {
  IntPolynomial p = IntPolynomial::monomial(1, 0);
  for (int h : multiset) p *= IntPolynomial::linear(h);
  return p;
}

PolynomialCheck verify_cox_number_recursion(const IntersectionLattice& lat, bool strict) {
  const RootSystem& rs = lat.roots();
  PolynomialCheck c;
  c.lhs = coxeter_number_polynomial(decompose_components(rs, rs.all()).coxeter_multiset());
  for (const auto& f : lat.flats()) {
    mpz_class p = 1;
    for (int h : decompose_components(rs, parabolic_of_flat(f)).coxeter_multiset()) p *= h;
    c.rhs += IntPolynomial::monomial(p, f.dim);
    if (f.dim == 1) c.slice_rhs += p;
  }
  c.slice_lhs = c.lhs.coefficient(1);
  finish(c, "Coxeter number recursion", rs.label(), strict);
  return c;
}

QMatrix permutation_model_laplacian(int n) {
  const auto dim = static_cast<std::size_t>(n + 1);
  const QMatrix id = QMatrix::identity(dim);
  QMatrix l(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      // rho(tau) = I - sigma sigma^T for sigma = e_i - e_j, |sigma|^2 = 2
      QMatrix rho = id;
      rho(i, i) -= 1;
      rho(j, j) -= 1;
      rho(i, j) += 1;
      rho(j, i) += 1;
      l += id - rho;
    }
  return l;
}

}  // namespace coxlab
