#include "vertexlab/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vertexlab::exact {

// ---- LaurentPoly ----

LaurentPoly LaurentPoly::monomial(const ExactScalar& c, long exponent) {
  LaurentPoly p;
  if (c.is_zero()) return p;
  p.low_ = exponent;
  p.coeffs_.push_back(c);
  return p;
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    low_ += static_cast<long>(lead);
  }
}

ExactScalar LaurentPoly::coeff(long exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return ExactScalar(0);
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

ExactScalar LaurentPoly::evaluate(const ExactScalar& z) const {
  if (is_zero()) return ExactScalar(0);
  ExactScalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc * pow(z, low_);
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly d;
  if (is_zero()) return d;
  d.low_ = low_ - 1;
  d.coeffs_.resize(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    long e = low_ + static_cast<long>(k);
    d.coeffs_[k] = coeffs_[k] * ExactScalar(e);
  }
  d.normalize();
  return d;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  long lo = std::min(low_, o.low_);
  long hi = std::max(high(), o.high());
  std::vector<ExactScalar> c(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[static_cast<std::size_t>(low_ - lo) + k] += coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) c[static_cast<std::size_t>(o.low_ - lo) + k] += o.coeffs_[k];
  low_ = lo;
  coeffs_ = std::move(c);
  normalize();
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, ExactScalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (!b.coeffs_[j].is_zero()) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  p.normalize();
  return p;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    long e = low_ + static_cast<long>(k);
    os << "(" << coeffs_[k].str() << ")";
    if (e != 0) os << "*" << var << "^" << e;
  }
  return os.str();
}

LaurentPoly laurent_derivative(const LaurentPoly& p) { return p.derivative(); }

LaurentPoly bracket_monomial(const ExactScalar& c, long k) {
  return LaurentPoly::monomial(c, k) - LaurentPoly::monomial(c.inverse(), -k);
}

// ---- GenPoly ----

GenPoly::GenPoly(long c) : GenPoly(Integer(c)) {}

GenPoly::GenPoly(const Integer& c) {
  if (sgn(c) != 0) terms_[{0, 0, 0}] = c;
}

GenPoly GenPoly::monomial(const Integer& c, Exponent e) {
  if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw std::invalid_argument("negative exponent in GenPoly");
  if (e[0] + e[1] + e[2] > kMaxDegree) throw std::overflow_error("GenPoly degree cap exceeded");
  GenPoly p;
  if (sgn(c) != 0) p.terms_[e] = c;
  return p;
}

Integer GenPoly::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

int GenPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

int GenPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
  return d;
}

GenPoly& GenPoly::operator+=(const GenPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    Integer& slot = terms_[e];
    slot += c;
    if (sgn(slot) == 0) terms_.erase(e);
  }
  return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    Integer& slot = terms_[e];
    slot -= c;
    if (sgn(slot) == 0) terms_.erase(e);
  }
  return *this;
}

GenPoly GenPoly::operator-() const {
  GenPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

GenPoly operator*(const GenPoly& a, const GenPoly& b) {
  GenPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      GenPoly::Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      if (e[0] + e[1] + e[2] > GenPoly::kMaxDegree) throw std::overflow_error("GenPoly degree cap exceeded");
      Integer& slot = p.terms_[e];
      slot += ca * cb;
    }
  for (auto it = p.terms_.begin(); it != p.terms_.end();) {
    if (sgn(it->second) == 0) it = p.terms_.erase(it);
    else ++it;
  }
  return p;
}

GenPoly GenPoly::exact_div(const GenPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  // Lexicographic leading terms: std::map orders exponents lexicographically.
  const auto& [dlead_e, dlead_c] = *d.terms_.rbegin();
  GenPoly rem = *this;
  GenPoly quot;
  while (!rem.is_zero()) {
    const auto [re, rc] = *rem.terms_.rbegin();
    Exponent qe{re[0] - dlead_e[0], re[1] - dlead_e[1], re[2] - dlead_e[2]};
    if (qe[0] < 0 || qe[1] < 0 || qe[2] < 0 || !mpz_divisible_p(rc.get_mpz_t(), dlead_c.get_mpz_t()))
      throw std::logic_error("inexact division in elimination");
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), dlead_c.get_mpz_t());
    GenPoly term = monomial(qc, qe);
    quot += term;
    rem -= term * d;
  }
  return quot;
}

Rational GenPoly::evaluate(const Rational& t, const Rational& y, const Rational& z) const {
  Rational acc;
  for (const auto& [e, c] : terms_) acc += Rational(c) * pow(t, e[0]) * pow(y, e[1]) * pow(z, e[2]);
  return acc;
}

GenPoly GenPoly::substitute_t_squared_root() const {
  GenPoly p;
  for (const auto& [e, c] : terms_) {
    if (e[0] % 2 != 0) throw std::domain_error("polynomial has odd powers; not a function of the square");
    p.terms_[{e[0] / 2, e[1], e[2]}] = c;
  }
  return p;
}

Integer GenPoly::at_one() const {
  Integer s;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string GenPoly::str() const {
  if (is_zero()) return "0";
  static const char* names[3] = {"t", "y", "z"};
  std::ostringstream os;
  bool first = true;
  // Ascending total degree, then lexicographic, for a readable order.
  std::vector<std::pair<Exponent, Integer>> items(terms_.begin(), terms_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    int da = a.first[0] + a.first[1] + a.first[2];
    int db = b.first[0] + b.first[1] + b.first[2];
    return da < db;
  });
  for (const auto& [e, c] : items) {
    const bool constant = e[0] == 0 && e[1] == 0 && e[2] == 0;
    Integer mag = abs(c);
    if (first) os << (sgn(c) < 0 ? "-" : "");
    else os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (constant || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (int v = 0; v < 3; ++v) {
      if (e[static_cast<std::size_t>(v)] == 0) continue;
      if (wrote) os << "*";
      os << names[v];
      if (e[static_cast<std::size_t>(v)] > 1) os << "^" << e[static_cast<std::size_t>(v)];
      wrote = true;
    }
  }
  return os.str();
}

GenPoly det_genpoly(const Matrix<GenPoly>& m) {
  return det_bareiss(m, [](const GenPoly& a, const GenPoly& b) { return a.exact_div(b); });
}

// ---- RatPoly ----

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void RatPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

RatPoly RatPoly::interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("interpolation needs matching nodes");
  const std::size_t n = xs.size();
  // Newton divided differences, then expand.
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t k = n - 1; k >= level; --k) {
      Rational den = xs[k] - xs[k - level];
      if (sgn(den) == 0) throw std::invalid_argument("repeated interpolation node");
      dd[k] = (dd[k] - dd[k - 1]) / den;
      if (k == level) break;
    }
  std::vector<Rational> poly(1, dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    // poly = poly * (x - xs[k]) + dd[k]
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * xs[k];
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  return RatPoly(std::move(poly));
}

RatPoly RatPoly::from_genpoly_t(const GenPoly& p) {
  std::vector<Rational> c(static_cast<std::size_t>(p.degree_in(0)) + 1);
  for (const auto& [e, v] : p.terms()) {
    if (e[1] != 0 || e[2] != 0) throw std::domain_error("polynomial depends on y or z");
    c[static_cast<std::size_t>(e[0])] += Rational(v);
  }
  return RatPoly(std::move(c));
}

Rational RatPoly::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool RatPoly::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return RatPoly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(c));
}

std::string RatPoly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) os << (sgn(c) < 0 ? "-" : "");
    else os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str() << (k ? "*" : "");
    if (k > 0) os << var << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return os.str();
}

}  // namespace vertexlab::exact
