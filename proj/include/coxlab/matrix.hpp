#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxlab/polynomial.hpp"
#include "coxlab/qscalar.hpp"

namespace coxlab {

using QVector = std::vector<QScalar>;

/// Dense row-major matrix over a real quadratic field.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_columns(const std::vector<QVector>& columns, std::size_t rows);
  static QMatrix from_rows(const std::vector<QVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  QScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const QScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVector column(std::size_t j) const;
  QVector row(std::size_t i) const;

  QMatrix transpose() const;
  QScalar trace() const;
  bool is_symmetric() const;
  bool is_zero() const;

  QVector apply(const QVector& v) const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const QScalar& s);

  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const QScalar& s) { return a *= s; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QScalar> data_;
};

QScalar dot(const QVector& a, const QVector& b);

/// Rank over Q(sqrt d) by exact Gaussian elimination.
std::size_t mat_rank(const QMatrix& m);

/// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref_in_place(QMatrix& m);

/// Basis (as vectors) of {x : m x = 0}.
std::vector<QVector> null_space(const QMatrix& m);

/// Solve a * x = b for a full-column-rank a and b in its column space.
/// Throws std::invalid_argument if b is not in the column space.
QVector solve_in_span(const QMatrix& a, const QVector& b);

QScalar determinant(QMatrix m);

/// Coefficients of det(t*I + m). Throws NonIntegerCoefficient unless every
/// coefficient is a rational integer.
IntPolynomial mat_charpoly(const QMatrix& m);

/// Incrementally maintained subspace with exact membership tests.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  std::size_t dimension() const { return basis_.size(); }
  bool contains(const QVector& v) const;
  /// Adds v; returns false if v was already in the span.
  bool insert(const QVector& v);

 private:
  QVector reduce(QVector v) const;

  std::size_t ambient_;
  std::vector<QVector> basis_;  // echelon rows, pivot entry 1
  std::vector<std::size_t> pivots_;
};

}  // namespace coxlab
