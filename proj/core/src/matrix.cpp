#include "vertexlab/matrix.hpp"

namespace vertexlab::exact {

namespace {

// 0: real, 1: i, 2: r, 3: i r; -1 for zero; -2 for mixed.
int unit_slot(const ExactScalar& s) {
  int slot = -1;
  const Rational* parts[4] = {&s.re(), &s.im(), &s.r_part(), &s.ir_part()};
  for (int k = 0; k < 4; ++k) {
    if (sgn(*parts[k]) == 0) continue;
    if (slot != -1) return -2;
    slot = k;
  }
  return slot;
}

const Rational& slot_value(const ExactScalar& s, int slot) {
  switch (slot) {
    case 0: return s.re();
    case 1: return s.im();
    case 2: return s.r_part();
    default: return s.ir_part();
  }
}

}  // namespace

bool split_common_unit(const ScalarMatrix& m, RationalMatrix& out, ExactScalar& unit) {
  int slot = -1;
  Extension ext = nullptr;
  for (const ExactScalar& v : m.data()) {
    int s = unit_slot(v);
    if (s == -1) continue;
    if (s == -2) return false;
    if (slot == -1) slot = s;
    else if (slot != s) return false;
    if (v.extension()) ext = v.extension();
  }
  if (slot == -1) slot = 0;
  out = RationalMatrix(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = slot_value(m(i, j), slot);
  switch (slot) {
    case 0: unit = ExactScalar(1); break;
    case 1: unit = ExactScalar::i(); break;
    case 2: unit = ExactScalar::r(ext); break;
    default: unit = ExactScalar::ir(ext); break;
  }
  return true;
}

Rational det(const RationalMatrix& m) { return det_field(m); }

ExactScalar det(const ScalarMatrix& m) {
  RationalMatrix rm;
  ExactScalar unit;
  if (split_common_unit(m, rm, unit)) return pow(unit, static_cast<long>(m.rows())) * ExactScalar(det_field(rm));
  return det_field(m);
}

std::vector<ScalarVector> kernel_scalar(const ScalarMatrix& m) {
  RationalMatrix rm;
  ExactScalar unit;
  if (split_common_unit(m, rm, unit)) {
    std::vector<ScalarVector> out;
    for (const auto& v : kernel(rm)) {
      ScalarVector sv(v.begin(), v.end());
      out.push_back(std::move(sv));
    }
    return out;
  }
  return kernel(m);
}

ScalarMatrix inverse_scalar(const ScalarMatrix& m) {
  RationalMatrix rm;
  ExactScalar unit;
  if (split_common_unit(m, rm, unit)) return to_scalar(inverse(rm)) * unit.inverse();
  return inverse(m);
}

RationalMatrix to_rational(const ScalarMatrix& m) {
  return m.map([](const ExactScalar& s) { return s.to_rational(); });
}

ScalarMatrix to_scalar(const RationalMatrix& m) {
  return m.map([](const Rational& r) { return ExactScalar(r); });
}

bool vectors_equal(const ScalarVector& a, const ScalarVector& b) { return a == b; }

bool is_zero_vector(const ScalarVector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

ScalarVector scale(const ScalarVector& v, const ExactScalar& s) {
  ScalarVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out[k] = v[k] * s;
  return out;
}

ScalarVector add(const ScalarVector& a, const ScalarVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  ScalarVector out = a;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!b[k].is_zero()) out[k] += b[k];
  return out;
}

ScalarVector sub(const ScalarVector& a, const ScalarVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  ScalarVector out = a;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!b[k].is_zero()) out[k] -= b[k];
  return out;
}

ExactScalar dot(const ScalarVector& a, const ScalarVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  ExactScalar s;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
  return s;
}

bool proportional(const ScalarVector& a, const ScalarVector& b, ExactScalar* ratio) {
  if (a.size() != b.size()) return false;
  std::size_t k = 0;
  while (k < b.size() && b[k].is_zero()) ++k;
  if (k == b.size()) {
    if (ratio) *ratio = ExactScalar(0);
    return is_zero_vector(a);
  }
  ExactScalar c = a[k] / b[k];
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != c * b[j]) return false;
  if (ratio) *ratio = c;
  return true;
}

}  // namespace vertexlab::exact
