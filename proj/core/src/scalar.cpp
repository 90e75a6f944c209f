#include "vertexlab/scalar.hpp"

#include <deque>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vertexlab::exact {

Extension intern_extension(const Rational& r_squared) {
  static std::mutex mu;
  static std::deque<Rational> pool;
  std::lock_guard<std::mutex> lock(mu);
  for (const Rational& v : pool)
    if (v == r_squared) return &v;
  pool.push_back(r_squared);
  return &pool.back();
}

ExactScalar::ExactScalar(Rational a, Rational b, Rational c, Rational d, Extension ext)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), ext_(ext) {
  if (ext_ == nullptr && (sgn(c_) != 0 || sgn(d_) != 0))
    throw std::logic_error("r component without an extension constant");
}

ExactScalar ExactScalar::i() { return ExactScalar(0, 1, 0, 0, nullptr); }
ExactScalar ExactScalar::r(Extension ext) { return ExactScalar(0, 0, 1, 0, ext); }
ExactScalar ExactScalar::ir(Extension ext) { return ExactScalar(0, 0, 0, 1, ext); }

bool ExactScalar::is_zero() const {
  return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0;
}
bool ExactScalar::is_rational() const { return sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
bool ExactScalar::is_gaussian() const { return sgn(c_) == 0 && sgn(d_) == 0; }

Rational ExactScalar::to_rational() const {
  if (!is_rational()) throw std::domain_error("scalar is not rational: " + str());
  return a_;
}

Extension ExactScalar::merge(Extension x, Extension y) {
  if (x == nullptr) return y;
  if (y == nullptr || x == y) return x;
  throw std::logic_error("mixing scalars with different extension constants");
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  ext_ = merge(ext_, o.ext_);
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  ext_ = merge(ext_, o.ext_);
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

ExactScalar ExactScalar::operator-() const { return ExactScalar(-a_, -b_, -c_, -d_, ext_); }

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
  Extension ext = ExactScalar::merge(x.ext_, y.ext_);
  if (x.is_rational()) {
    if (y.is_rational()) return ExactScalar(x.a_ * y.a_);
    return ExactScalar(x.a_ * y.a_, x.a_ * y.b_, x.a_ * y.c_, x.a_ * y.d_, ext);
  }
  if (y.is_rational()) return ExactScalar(x.a_ * y.a_, x.b_ * y.a_, x.c_ * y.a_, x.d_ * y.a_, ext);
  // (u1 + v1 r)(u2 + v2 r) with u, v in Q(i)
  const bool xg = x.is_gaussian();
  const bool yg = y.is_gaussian();
  Rational a = x.a_ * y.a_ - x.b_ * y.b_;
  Rational b = x.a_ * y.b_ + x.b_ * y.a_;
  Rational c, d;
  if (!yg) {
    c += x.a_ * y.c_ - x.b_ * y.d_;
    d += x.a_ * y.d_ + x.b_ * y.c_;
  }
  if (!xg) {
    c += x.c_ * y.a_ - x.d_ * y.b_;
    d += x.c_ * y.b_ + x.d_ * y.a_;
  }
  if (!xg && !yg) {
    const Rational& r2 = *ext;
    a += r2 * (x.c_ * y.c_ - x.d_ * y.d_);
    b += r2 * (x.c_ * y.d_ + x.d_ * y.c_);
  }
  return ExactScalar(std::move(a), std::move(b), std::move(c), std::move(d), ext);
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) { return *this = *this * o; }

ExactScalar ExactScalar::conj_i() const { return ExactScalar(a_, -b_, c_, -d_, ext_); }
ExactScalar ExactScalar::conj_r() const { return ExactScalar(a_, b_, -c_, -d_, ext_); }

ExactScalar ExactScalar::inverse() const {
  if (is_rational()) {
    if (sgn(a_) == 0) throw std::domain_error("division by zero");
    return ExactScalar(Rational(1) / a_);
  }
  // Multiply by the r-conjugate to land in Q(i), then by the i-conjugate.
  ExactScalar num = conj_r();
  ExactScalar n1 = *this * num;
  if (!n1.is_gaussian()) throw std::logic_error("norm form left Q(i)");
  ExactScalar n1c = n1.conj_i();
  Rational n2 = n1.a_ * n1.a_ + n1.b_ * n1.b_;
  if (sgn(n2) == 0) throw std::domain_error("division by zero");
  ExactScalar out = num * n1c;
  Rational inv = Rational(1) / n2;
  return out * ExactScalar(inv);
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) { return *this = *this * o.inverse(); }

bool operator==(const ExactScalar& x, const ExactScalar& y) {
  if (x.ext_ != nullptr && y.ext_ != nullptr && x.ext_ != y.ext_) return false;
  return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

std::string ExactScalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& v, const char* unit) {
    if (sgn(v) == 0) return;
    if (!first) os << (sgn(v) < 0 ? " - " : " + ");
    else if (sgn(v) < 0) os << "-";
    Rational mag = abs(v);
    if (*unit == '\0') os << mag.get_str();
    else if (mag == 1) os << unit;
    else os << mag.get_str() << "*" << unit;
    first = false;
  };
  term(a_, "");
  term(b_, "i");
  term(c_, "r");
  term(d_, "i*r");
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.str(); }

ExactScalar pow(const ExactScalar& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  ExactScalar result(1);
  ExactScalar b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

ExactScalar bracket(const ExactScalar& z) {
  if (z.is_zero()) throw std::domain_error("bracket of non-unit");
  return z - z.inverse();
}

}  // namespace vertexlab::exact
