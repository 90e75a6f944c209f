#pragma once

#include <iosfwd>
#include <string>

#include "vertexlab/rational.hpp"

namespace vertexlab::exact {

// Interned value of r^2. Two scalars may be combined only when they carry the
// same constant (or one of them carries none).
using Extension = const Rational*;
Extension intern_extension(const Rational& r_squared);

// a + b i + c r + d i r with i^2 = -1 and r^2 fixed by the extension.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(const Rational& v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational a, Rational b, Rational c, Rational d, Extension ext);

  static ExactScalar i();
  static ExactScalar r(Extension ext);
  static ExactScalar ir(Extension ext);

  const Rational& re() const { return a_; }
  const Rational& im() const { return b_; }
  const Rational& r_part() const { return c_; }
  const Rational& ir_part() const { return d_; }
  Extension extension() const { return ext_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_gaussian() const;  // no r component
  Rational to_rational() const;  // throws unless is_rational()

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);
  ExactScalar operator-() const;

  ExactScalar inverse() const;
  ExactScalar conj_i() const;  // i -> -i
  ExactScalar conj_r() const;  // r -> -r

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }
  friend bool operator==(const ExactScalar& x, const ExactScalar& y);
  friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

  std::string str() const;

 private:
  static Extension merge(Extension x, Extension y);

  Rational a_, b_, c_, d_;
  Extension ext_ = nullptr;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

ExactScalar pow(const ExactScalar& base, long exponent);

// [z] = z - 1/z
ExactScalar bracket(const ExactScalar& z);

}  // namespace vertexlab::exact
