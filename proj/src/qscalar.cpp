#include "coxlab/qscalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "coxlab/errors.hpp"

namespace coxlab {

bool is_squarefree(int d) {
  if (d < 2) return false;
  for (int p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

QScalar::QScalar(mpq_class a, mpq_class b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) != 0 && !is_squarefree(d_))
    throw std::invalid_argument("QScalar: field parameter must be squarefree and > 1, got " +
                                std::to_string(d_));
  normalize();
}

QScalar QScalar::sqrt_of(int d) { return QScalar(0, 1, d); }

void QScalar::normalize() {
  if (sgn(b_) == 0) d_ = 0;
}

int QScalar::join_field(const QScalar& x, const QScalar& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
  throw MixedFieldError("arithmetic between Q(sqrt " + std::to_string(x.d_) + ") and Q(sqrt " +
                        std::to_string(y.d_) + ")");
}

int QScalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with d*b^2
  const mpq_class lhs = a_ * a_;
  const mpq_class rhs = b_ * b_ * d_;
  if (lhs > rhs) return sa;
  return sb;  // equality impossible for squarefree d
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QScalar& QScalar::operator+=(const QScalar& o) {
  const int d = join_field(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = d;
  normalize();
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) {
  const int d = join_field(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  d_ = d;
  normalize();
  return *this;
}

QScalar& QScalar::operator*=(const QScalar& o) {
  const int d = join_field(*this, o);
  if (d == 0) {
    a_ *= o.a_;
  } else {
    mpq_class a = a_ * o.a_ + b_ * o.b_ * d;
    mpq_class b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
  }
  d_ = d;
  normalize();
  return *this;
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw std::domain_error("QScalar: division by zero");
  if (d_ == 0) return QScalar(mpq_class(1) / a_);
  const mpq_class norm = a_ * a_ - b_ * b_ * d_;
  return QScalar(a_ / norm, -b_ / norm, d_);
}

QScalar& QScalar::operator/=(const QScalar& o) {
  join_field(*this, o);
  return *this *= o.inverse();
}

double QScalar::to_double() const {
  if (d_ == 0) return a_.get_d();
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string QScalar::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QScalar& x) {
  if (x.field() == 0) return os << x.rational_part().get_str();
  if (sgn(x.rational_part()) != 0) {
    os << x.rational_part().get_str() << (sgn(x.irrational_part()) < 0 ? " - " : " + ");
    os << mpq_class(abs(x.irrational_part())).get_str();
  } else {
    os << x.irrational_part().get_str();
  }
  return os << "*sqrt(" << x.field() << ")";
}

}  // namespace coxlab
