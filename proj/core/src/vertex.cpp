#include "vertexlab/vertex.hpp"

#include <stdexcept>

namespace vertexlab::vertex {

using exact::TensorShape;

ModelParams ModelParams::from_q(const Rational& q) {
  if (q == 0 || q == 1 || q == -1) throw std::domain_error("q must avoid 0 and the fourth roots of unity");
  ModelParams p;
  p.q_value_ = q;
  p.q_ = ExactScalar(q);
  const ExactScalar r2 = exact::bracket(p.q_) * exact::bracket(p.q_ * p.q_);
  p.ext_ = exact::intern_extension(r2.to_rational());
  p.r_ = ExactScalar::r(p.ext_);
  p.x_ = p.q_ + p.q_.inverse();
  return p;
}

ModelParams ModelParams::from_half(const Rational& s) {
  if (s == 0) throw std::domain_error("half-parameter must be non-zero");
  ModelParams p = from_q(s * s);
  p.s_ = ExactScalar(s);
  return p;
}

const ExactScalar& ModelParams::s() const {
  if (!s_) throw std::domain_error("half-parameter required");
  return *s_;
}

ModelParams ModelParams::inverted() const {
  ModelParams p = from_q(Rational(1) / q_value_);
  if (p.ext_ != ext_) throw std::logic_error("extension constant changed under q -> 1/q");
  if (s_) p.s_ = s_->inverse();
  return p;
}

ExactScalar ModelParams::brq(long k, const ExactScalar& z) const { return exact::bracket(exact::pow(q_, k) * z); }

int left_dim(Kind k) { return (k == Kind::R11 || k == Kind::R12) ? 2 : 3; }
int right_dim(Kind k) { return (k == Kind::R11 || k == Kind::R21) ? 2 : 3; }

Kind kind_for(int m, int n) {
  if (m == 1 && n == 1) return Kind::R11;
  if (m == 1 && n == 2) return Kind::R12;
  if (m == 2 && n == 1) return Kind::R21;
  if (m == 2 && n == 2) return Kind::R22;
  throw std::invalid_argument("spin labels must be 1 or 2");
}

ScalarMatrix r11(const ExactScalar& z, const ModelParams& p) {
  const ExactScalar a = p.brq(1, z), b = p.br(z), c = p.brq(1);
  return ScalarMatrix{{a, 0, 0, 0}, {0, b, c, 0}, {0, c, b, 0}, {0, 0, 0, a}};
}

ScalarMatrix r12(const ExactScalar& z, const ModelParams& p) {
  ScalarMatrix m(6);
  const ExactScalar d2 = p.brq(2, z), d1 = p.brq(1, z), d0 = p.br(z);
  m(0, 0) = d2;
  m(1, 1) = d1;
  m(2, 2) = d0;
  m(3, 3) = d0;
  m(4, 4) = d1;
  m(5, 5) = d2;
  m(1, 3) = m(3, 1) = m(2, 4) = m(4, 2) = p.r();
  return m;
}

ScalarMatrix permutation(int d1, int d2) {
  ScalarMatrix m(static_cast<std::size_t>(d1 * d2));
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < d2; ++b) m(static_cast<std::size_t>(b * d1 + a), static_cast<std::size_t>(a * d2 + b)) = 1;
  return m;
}

ScalarMatrix r21(const ExactScalar& z, const ModelParams& p) {
  // Spin-one factor first; equals the fused construction divided by [z].
  const ScalarMatrix perm = permutation(2, 3);  // C2 x C3 -> C3 x C2
  return perm * r12(z / p.q(), p) * perm.transpose();
}

ScalarMatrix r22(const ExactScalar& z, const ModelParams& p) {
  const ExactScalar p1 = p.brq(1, z) * p.brq(2, z);
  const ExactScalar p2 = p.br(z) * p.brq(1, z);
  const ExactScalar p3 = p.brq(2) * p.brq(1, z);
  const ExactScalar p4 = p.brq(-1, z) * p.br(z);
  const ExactScalar p5 = p.brq(2) * p.br(z);
  const ExactScalar p6 = p.brq(1) * p.brq(2);
  const ExactScalar p7 = p2 + p6;
  ScalarMatrix m(9);
  m(0, 0) = m(8, 8) = p1;
  m(1, 1) = m(3, 3) = m(5, 5) = m(7, 7) = p2;
  m(1, 3) = m(3, 1) = m(5, 7) = m(7, 5) = p3;
  m(2, 2) = m(6, 6) = p4;
  m(2, 4) = m(4, 2) = m(4, 6) = m(6, 4) = p5;
  m(2, 6) = m(6, 2) = p6;
  m(4, 4) = p7;
  return m;
}

ScalarMatrix r_table(Kind k, const ExactScalar& z, const ModelParams& p) {
  switch (k) {
    case Kind::R11: return r11(z, p);
    case Kind::R12: return r12(z, p);
    case Kind::R21: return r21(z, p);
    case Kind::R22: return r22(z, p);
  }
  throw std::logic_error("unknown R-matrix kind");
}

ScalarMatrix projector_plus() {
  const ExactScalar h = Rational(1, 2);
  return ScalarMatrix{{1, 0, 0, 0}, {0, h, h, 0}, {0, h, h, 0}, {0, 0, 0, 1}};
}

ScalarMatrix projector_minus() {
  const ExactScalar h = Rational(1, 2);
  return ScalarMatrix{{0, 0, 0, 0}, {0, h, -h, 0}, {0, -h, h, 0}, {0, 0, 0, 0}};
}

namespace {

ScalarMatrix u_shape(const ExactScalar& a) {
  return ScalarMatrix{{1, 0, 0, 0}, {0, a, a, 0}, {0, 0, 0, 1}, {0, a, -a, 0}};
}

ScalarMatrix kron_id_left(int d, const ScalarMatrix& m) {
  return exact::kron(ScalarMatrix::identity(static_cast<std::size_t>(d)), m);
}

ScalarMatrix kron_id_right(const ScalarMatrix& m, int d) {
  return exact::kron(m, ScalarMatrix::identity(static_cast<std::size_t>(d)));
}

}  // namespace

ScalarMatrix basis_change_u(const ModelParams& p) {
  // alpha = sqrt([q^2]/[q]) / 2 = r / (2 [q])
  const ExactScalar alpha = p.r() / (ExactScalar(2) * p.brq(1));
  ScalarMatrix u = u_shape(alpha);
  if (u * basis_change_u_inverse(p) != ScalarMatrix::identity(4)) throw std::logic_error("U U^-1 != 1");
  return u;
}

ScalarMatrix basis_change_u_inverse(const ModelParams& p) {
  const ExactScalar alpha = p.r() / (ExactScalar(2) * p.brq(1));
  const ExactScalar h = ExactScalar(Rational(1, 2)) / alpha;
  return ScalarMatrix{{1, 0, 0, 0}, {0, h, 0, h}, {0, h, 0, -h}, {0, 0, 1, 0}};
}

ScalarMatrix basis_change_v(const ModelParams& p) {
  // alpha' = sqrt([q]/[q^2]) = [q] / r
  const ExactScalar alpha = p.brq(1) / p.r();
  ScalarMatrix v = u_shape(alpha);
  if (v != basis_change_u_inverse(p).transpose()) throw std::logic_error("V != (U^-1)^t");
  return v;
}

ScalarMatrix symmetric_projection_q() {
  ScalarMatrix q(3, 4);
  q(0, 0) = q(1, 1) = q(2, 2) = 1;
  return q;
}

ScalarMatrix sigma2() { return ScalarMatrix{{0, -ExactScalar::i()}, {ExactScalar::i(), 0}}; }
ScalarMatrix sigma3() { return ScalarMatrix{{1, 0}, {0, -1}}; }

ScalarMatrix r12_fused(const ExactScalar& z, const ModelParams& p) {
  const TensorShape shape({2, 2, 2});
  const ScalarMatrix u23 = embed(basis_change_u(p), shape, {1, 2});
  const ScalarMatrix ui23 = embed(basis_change_u_inverse(p), shape, {1, 2});
  ScalarMatrix f = u23 * embed(r11(z, p), shape, {0, 1}) * embed(r11(p.q() * z, p), shape, {0, 2}) *
                   embed(projector_plus(), shape, {1, 2}) * ui23;
  f *= p.brq(1, z).inverse();
  const ScalarMatrix q23 = kron_id_left(2, symmetric_projection_q());
  return q23 * f * q23.transpose();
}

ScalarMatrix r21_fused(const ExactScalar& z, const ModelParams& p) {
  const TensorShape shape({2, 2, 2});
  const ScalarMatrix u12 = embed(basis_change_u(p), shape, {0, 1});
  const ScalarMatrix ui12 = embed(basis_change_u_inverse(p), shape, {0, 1});
  ScalarMatrix f = u12 * embed(r11(z / p.q(), p), shape, {1, 2}) * embed(r11(z, p), shape, {0, 2}) *
                   embed(projector_plus(), shape, {0, 1}) * ui12;
  f *= p.br(z).inverse();
  const ScalarMatrix q12 = kron_id_right(symmetric_projection_q(), 2);
  return q12 * f * q12.transpose();
}

ScalarMatrix r22_fused(const ExactScalar& z, const ModelParams& p) {
  // Sites 0, 1 are spin-1/2; site 2 is the already fused spin-one pair.
  const TensorShape shape({2, 2, 3});
  const ScalarMatrix u12 = embed(basis_change_u(p), shape, {0, 1});
  const ScalarMatrix ui12 = embed(basis_change_u_inverse(p), shape, {0, 1});
  ScalarMatrix f = u12 * embed(r12_fused(z / p.q(), p), shape, {1, 2}) * embed(r12_fused(z, p), shape, {0, 2}) *
                   embed(projector_plus(), shape, {0, 1}) * ui12;
  // The spin-one factors already carry the normalisation, so no division here.
  const ScalarMatrix q12 = kron_id_right(symmetric_projection_q(), 3);
  return q12 * f * q12.transpose();
}

ScalarMatrix build_r(Kind k, const ExactScalar& z, const ModelParams& p) {
  ScalarMatrix table = r_table(k, z, p);
  ScalarMatrix fused;
  switch (k) {
    case Kind::R11: return table;
    case Kind::R12: fused = r12_fused(z, p); break;
    case Kind::R21: fused = r21_fused(z, p); break;
    case Kind::R22: fused = r22_fused(z, p); break;
  }
  if (fused != table) throw std::logic_error("fused and tabulated R-matrices disagree");
  return table;
}

ScalarMatrix rcheck(Kind k, const ExactScalar& z, const ModelParams& p) {
  if (left_dim(k) != right_dim(k)) throw std::invalid_argument("check-R needs equal local dimensions");
  const int d = left_dim(k);
  return permutation(d, d) * r_table(k, z, p);
}

bool check_yang_baxter(int m, int n, int pk, const ExactScalar& z, const ExactScalar& w, const ModelParams& p) {
  const int dm = m + 1, dn = n + 1, dp = pk + 1;
  const TensorShape shape({dm, dn, dp});
  const ScalarMatrix r12m = embed(r_table(kind_for(m, n), z / w, p), shape, {0, 1});
  const ScalarMatrix r13m = embed(r_table(kind_for(m, pk), z, p), shape, {0, 2});
  const ScalarMatrix r23m = embed(r_table(kind_for(n, pk), w, p), shape, {1, 2});
  return r12m * r13m * r23m == r23m * r13m * r12m;
}

bool check_inversion_crossing(const ModelParams& p, const ExactScalar& z) {
  const ScalarMatrix lhs = r11(z, p) * r11(z.inverse(), p);
  if (lhs != ScalarMatrix::identity(4) * (p.brq(1, z) * p.brq(1, z.inverse()))) return false;
  const TensorShape shape({2, 3});
  const ScalarMatrix s2 = exact::kron(sigma2(), ScalarMatrix::identity(3));
  const ScalarMatrix crossed = partial_transpose(r12(z, p), shape, 1);
  const ExactScalar arg = (p.q() * p.q() * z).inverse();
  return crossed == -(s2 * r12(arg, p) * s2);
}

bool check_q_inversion(const ModelParams& p, const ExactScalar& z) {
  const ModelParams pi = p.inverted();
  const ScalarMatrix s3 = exact::kron(sigma3(), ScalarMatrix::identity(3));
  return r12(z, pi) == -(s3 * r12(z.inverse(), p) * s3);
}

bool check_rcheck_unitarity(const ModelParams& p, const ExactScalar& z) {
  const ScalarMatrix prod = rcheck(Kind::R22, z.inverse(), p) * rcheck(Kind::R22, z, p);
  const ExactScalar c = p.brq(1, z.inverse()) * p.brq(2, z.inverse()) * p.brq(1, z) * p.brq(2, z);
  return prod == ScalarMatrix::identity(9) * c;
}

bool check_highest_weight_covector(const ModelParams& p, const ExactScalar& z) {
  const ScalarVector top = exact::basis_vector(9, 0);
  const ScalarVector row = rcheck(Kind::R22, z, p).apply_left(top);
  return row == exact::scale(top, p.brq(1, z) * p.brq(2, z));
}

bool check_special_points(const ModelParams& p) {
  const ExactScalar bq = p.brq(1);
  if (r11(ExactScalar(1), p) != permutation(2, 2) * bq) return false;
  ScalarMatrix b(4);
  b(0, 0) = b(3, 3) = p.brq(2);
  b(1, 1) = b(2, 2) = ExactScalar(2) * bq;
  if (r11(p.q(), p) != b * projector_plus()) return false;
  if (r11(p.q().inverse(), p) != projector_minus() * (ExactScalar(-2) * bq)) return false;
  // Generic spectral parameter: centre weight of the spin-one matrix.
  const ExactScalar z = Rational(7, 3);
  return r22(z, p)(4, 4) == p.br(z) * p.brq(1, z) + p.brq(1) * p.brq(2);
}

bool check_projector_absorption(const ModelParams& p, const ExactScalar& z) {
  const TensorShape shape({2, 2, 2});
  const ScalarMatrix pp = embed(projector_plus(), shape, {1, 2});
  const ScalarMatrix pm = embed(projector_minus(), shape, {1, 2});
  const ScalarMatrix r12z = embed(r11(z, p), shape, {0, 1});
  const ScalarMatrix r13qz = embed(r11(p.q() * z, p), shape, {0, 2});
  const ScalarMatrix r12qz = embed(r11(p.q() * z, p), shape, {0, 1});
  const ScalarMatrix r13z = embed(r11(z, p), shape, {0, 2});
  if (!(pm * r12z * r13qz * pp).is_zero()) return false;
  if (!(pp * r13qz * r12z * pm).is_zero()) return false;
  if (!(pm * r13z * r12qz * pp).is_zero()) return false;
  if (!(pp * r12qz * r13z * pm).is_zero()) return false;
  // Second fusion step: two spin-1/2 lines against a spin-one line.
  const TensorShape shape2({2, 2, 3});
  const ScalarMatrix x = embed(r12(z / p.q(), p), shape2, {1, 2}) * embed(r12(z, p), shape2, {0, 2});
  return (embed(projector_minus(), shape2, {0, 1}) * x * embed(projector_plus(), shape2, {0, 1})).is_zero();
}

ScalarVector boundary_vector(int model, const ExactScalar& z, const ExactScalar& b, const ModelParams& p) {
  if (model == 1) {
    const ExactScalar sz = p.s() * z;
    ScalarVector v(4);
    v[1] = p.br(sz * b);
    v[2] = p.br(sz / b);
    return v;
  }
  if (model == 2) {
    ScalarVector v(9);
    const ExactScalar bi = b.inverse();
    v[2] = p.br(b * z) * p.brq(1, b * z);
    v[4] = p.brq(1, bi * z) * p.brq(1, b * z);
    v[6] = p.br(bi * z) * p.brq(1, bi * z);
    return v;
  }
  throw std::invalid_argument("boundary model must be 1 or 2");
}

ScalarVector boundary_vector_fused(const ExactScalar& z, const ExactScalar& b, const ModelParams& p) {
  const TensorShape shape({2, 2, 2, 2});
  ScalarVector v = exact::tensor(boundary_vector(1, p.s() * z, b, p), boundary_vector(1, z / p.s(), b, p));
  v = apply_local(rcheck(Kind::R11, z * z, p), shape, {1, 2}, v);
  v = apply_local(projector_plus(), shape, {0, 1}, v);
  v = apply_local(projector_plus(), shape, {2, 3}, v);
  v = apply_local(basis_change_v(p), shape, {0, 1}, v);
  v = apply_local(basis_change_u(p), shape, {2, 3}, v);
  const ScalarMatrix qq = exact::kron(symmetric_projection_q(), symmetric_projection_q());
  return exact::scale(qq.apply(v), p.br(z * z).inverse());
}

bool check_boundary_ybe(int model, const ExactScalar& z, const ExactScalar& w, const ExactScalar& b,
                        const ModelParams& p) {
  const int d = model + 1;
  const Kind k = model == 1 ? Kind::R11 : Kind::R22;
  const TensorShape shape = TensorShape::uniform(d, 4);
  const ScalarMatrix ra = rcheck(k, z / w, p);
  const ScalarMatrix rb = rcheck(k, z * w, p);
  ScalarVector lhs = exact::tensor(boundary_vector(model, w, b, p), boundary_vector(model, z, b, p));
  lhs = apply_local(ra, shape, {0, 1}, apply_local(rb, shape, {1, 2}, lhs));
  ScalarVector rhs = exact::tensor(boundary_vector(model, z, b, p), boundary_vector(model, w, b, p));
  rhs = apply_local(ra, shape, {2, 3}, apply_local(rb, shape, {1, 2}, rhs));
  return lhs == rhs;
}

bool check_fish(int model, const ExactScalar& z, const ExactScalar& b, const ModelParams& p) {
  const Kind k = model == 1 ? Kind::R11 : Kind::R22;
  const ExactScalar z2 = z * z;
  const ScalarVector lhs = rcheck(k, z2.inverse(), p).apply(boundary_vector(model, z, b, p));
  ExactScalar c = p.brq(1, z2);
  if (model == 2) c *= p.brq(2, z2);
  return lhs == exact::scale(boundary_vector(model, z.inverse(), b, p), c);
}

bool check_boundary_ybe_and_fish(int model, const ExactScalar& z, const ExactScalar& w, const ExactScalar& b,
                                 const ModelParams& p) {
  if (!check_boundary_ybe(model, z, w, b, p)) return false;
  if (!check_fish(model, z, b, p)) return false;
  if (model == 2 && p.has_half()) {
    if (boundary_vector_fused(z, b, p) != boundary_vector(2, z, b, p)) return false;
    if (!check_projector_absorption(p, z)) return false;
  }
  return true;
}

}  // namespace vertexlab::vertex
