#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace coxlab {

/// An exact element a + b*sqrt(d) of a real quadratic field.
///
/// Pure rationals always carry d = 0, so a rational value combines freely
/// with any field. Two values whose irrational parts live over different d
/// cannot be combined and raise MixedFieldError.
class QScalar {
 public:
  QScalar() = default;
  QScalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  QScalar(mpq_class value) : a_(std::move(value)) { a_.canonicalize(); }  // NOLINT
  QScalar(mpq_class a, mpq_class b, int d);

  /// sqrt(d) for a squarefree d > 1.
  static QScalar sqrt_of(int d);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& irrational_part() const { return b_; }
  int field() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return d_ == 0; }
  bool is_integer() const { return d_ == 0 && a_.get_den() == 1; }

  /// Exact sign of the real number represented.
  int sign() const;

  QScalar inverse() const;
  double to_double() const;
  std::string to_string() const;

  QScalar operator-() const;
  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  QScalar& operator/=(const QScalar& o);

  friend QScalar operator+(QScalar x, const QScalar& y) { return x += y; }
  friend QScalar operator-(QScalar x, const QScalar& y) { return x -= y; }
  friend QScalar operator*(QScalar x, const QScalar& y) { return x *= y; }
  friend QScalar operator/(QScalar x, const QScalar& y) { return x /= y; }

  friend bool operator==(const QScalar& x, const QScalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator<(const QScalar& x, const QScalar& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QScalar& x, const QScalar& y) { return y < x; }
  friend bool operator<=(const QScalar& x, const QScalar& y) { return !(y < x); }
  friend bool operator>=(const QScalar& x, const QScalar& y) { return !(x < y); }

 private:
  void normalize();
  static int join_field(const QScalar& x, const QScalar& y);

  mpq_class a_{0};
  mpq_class b_{0};
  int d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const QScalar& x);

/// True if d > 1 has no square factor.
bool is_squarefree(int d);

}  // namespace coxlab
