#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "vertexlab/matrix.hpp"
#include "vertexlab/scalar.hpp"

namespace vertexlab::exact {

// Laurent polynomial in one variable z with ExactScalar coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const ExactScalar& c) { *this = monomial(c, 0); }  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(ExactScalar(c)) {}  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const ExactScalar& c, long exponent);
  static LaurentPoly z() { return monomial(ExactScalar(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }
  long width() const { return is_zero() ? 0 : high() - low(); }
  ExactScalar coeff(long exponent) const;

  ExactScalar evaluate(const ExactScalar& z) const;
  LaurentPoly derivative() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string str(const std::string& var = "z") const;

 private:
  void normalize();

  long low_ = 0;
  std::vector<ExactScalar> coeffs_;
};

inline bool is_zero_value(const LaurentPoly& p) { return p.is_zero(); }

LaurentPoly laurent_derivative(const LaurentPoly& p);
// [c z^k] as a Laurent polynomial in z.
LaurentPoly bracket_monomial(const ExactScalar& c, long k);

// Polynomial in t, y, z with big-integer coefficients.
class GenPoly {
 public:
  using Exponent = std::array<int, 3>;
  static constexpr int kMaxDegree = 256;

  GenPoly() = default;
  GenPoly(long c);  // NOLINT(google-explicit-constructor)
  GenPoly(const Integer& c);  // NOLINT(google-explicit-constructor)

  static GenPoly t() { return monomial(1, {1, 0, 0}); }
  static GenPoly y() { return monomial(1, {0, 1, 0}); }
  static GenPoly z() { return monomial(1, {0, 0, 1}); }
  static GenPoly monomial(const Integer& c, Exponent e);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  Integer coeff(Exponent e) const;
  int total_degree() const;
  int degree_in(int var) const;

  GenPoly& operator+=(const GenPoly& o);
  GenPoly& operator-=(const GenPoly& o);
  GenPoly& operator*=(const GenPoly& o) { return *this = *this * o; }
  GenPoly operator-() const;
  friend GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
  friend GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }
  friend GenPoly operator*(const GenPoly& a, const GenPoly& b);
  friend bool operator==(const GenPoly& a, const GenPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const GenPoly& a, const GenPoly& b) { return !(a == b); }

  // Exact quotient; throws if `d` does not divide this polynomial.
  GenPoly exact_div(const GenPoly& d) const;

  Rational evaluate(const Rational& t, const Rational& y = 1, const Rational& z = 1) const;
  GenPoly substitute_t_squared_root() const;  // p(x) with only even powers -> p(t = x^2)
  // Sum of all coefficients.
  Integer at_one() const;

  std::string str() const;

 private:
  std::map<Exponent, Integer> terms_;
};

inline bool is_zero_value(const GenPoly& p) { return p.is_zero(); }

GenPoly det_genpoly(const Matrix<GenPoly>& m);

// Dense univariate polynomial with rational coefficients, lowest degree first.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  static RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);
  static RatPoly from_genpoly_t(const GenPoly& p);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational evaluate(const Rational& x) const;
  bool is_integral() const;
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

}  // namespace vertexlab::exact
