#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxlab/arrangement.hpp"
#include "coxlab/matrix.hpp"
#include "coxlab/polynomial.hpp"
#include "coxlab/root_system.hpp"

namespace coxlab {

/// Sum of (I - rho(tau)) over the reflections in `roots`, kept n x n even
/// when the roots span a proper subspace. For a coordinate-free dihedral
/// model only the full system is available, as the scalar matrix m*I
/// (`analytic` is then set).
struct WLaplacian {
  QMatrix matrix;
  RootSet roots;
  bool analytic = false;
};

WLaplacian w_laplacian(const RootSystem& rs, std::optional<RootSet> roots = {});

/// The same operator from its second description, v -> sum <sigma, v> sigma.
QMatrix laplacian_from_inner_products(const RootSystem& rs, RootSet roots);

/// R R^T G with R the matrix of root coordinates and G the Gram matrix; the
/// extra factor G converts the orthonormal-basis identity L = R R^T to the
/// simple-root basis used for coordinates.
QMatrix laplacian_from_root_matrix(const RootSystem& rs, RootSet roots);

struct PseudoDet {
  mpz_class value;
  int rank = 0;
};

/// Lowest nonzero coefficient of det(tI + L) and the rank it reflects.
PseudoDet pseudodet(const IntPolynomial& charpoly);
PseudoDet pseudodet(const WLaplacian& l);

/// det(tI + L) for a Laplacian, with the analytic dihedral case handled.
IntPolynomial laplacian_charpoly(const WLaplacian& l);

/// Both sides of a polynomial identity, compared coefficientwise.
struct PolynomialCheck {
  IntPolynomial lhs;
  IntPolynomial rhs;
  bool pass = false;
  bool analytic = false;
  /// Linear coefficients for the t^1 slice (cox-number recursion only).
  mpz_class slice_lhs;
  mpz_class slice_rhs;
  std::string mismatch;
};

/// det(tI + L_W) against sum over flats of pdet(L_{W_X}) t^dim X. Throws
/// PropertyViolation on mismatch when `strict`.
PolynomialCheck verify_parabolic_charpoly(const IntersectionLattice& lat, bool strict = true);

/// prod (t + h_i) against sum over flats of prod h_i(W_X) t^dim X, plus the
/// coefficient of t^1 on its own. Throws PropertyViolation on mismatch when
/// `strict`.
PolynomialCheck verify_cox_number_recursion(const IntersectionLattice& lat, bool strict = true);

/// Graph Laplacian of K_{n+1} from the permutation representation of A_n on
/// R^{n+1}: roots e_i - e_j, same sum of (I - rho(tau)).
QMatrix permutation_model_laplacian(int n);

/// prod over the multiset {h_i} of (t + h_i).
IntPolynomial coxeter_number_polynomial(const std::vector<int>& multiset);

}  // namespace coxlab
