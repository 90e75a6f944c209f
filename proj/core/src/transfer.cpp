#include "vertexlab/transfer.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "vertexlab/polynomial.hpp"

namespace vertexlab::transfer {

using exact::LaurentPoly;
using exact::TensorShape;

Twist parse_twist(const std::string& s) {
  if (s == "d" || s == "D" || s == "diagonal") return Twist::Diagonal;
  if (s == "ad" || s == "AD" || s == "antidiagonal" || s == "anti-diagonal") return Twist::AntiDiagonal;
  throw std::invalid_argument("unknown twist '" + s + "'");
}

std::string to_string(Twist t) { return t == Twist::Diagonal ? "diagonal" : "antidiagonal"; }

bool Inhom::pairwise_distinct() const {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] == w[j]) return false;
  return true;
}

ScalarMatrix omega1(Twist t) {
  const ExactScalar i = ExactScalar::i();
  if (t == Twist::Diagonal) return ScalarMatrix{{i, 0}, {0, -i}};
  return ScalarMatrix{{0, i}, {i, 0}};
}

ScalarMatrix omega2(Twist t) {
  if (t == Twist::Diagonal) return ScalarMatrix{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}};
  return ScalarMatrix{{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}};
}

ScalarMatrix omega2_fused(Twist t, const ModelParams& p) {
  const ScalarMatrix q = vertex::symmetric_projection_q();
  return q * vertex::basis_change_u(p) * exact::kron(omega1(t), omega1(t)) * vertex::basis_change_u_inverse(p) *
         q.transpose();
}

ExactScalar a_fn(const ExactScalar& z, const ModelParams& p, const Inhom& in) {
  ExactScalar out(1);
  for (const ExactScalar& w : in.w) out *= p.brq(1, z / w);
  return out;
}

ExactScalar d_fn(const ExactScalar& z, const ModelParams& p, const Inhom& in) {
  ExactScalar out(1);
  for (const ExactScalar& w : in.w) out *= p.brq(-1, z / w);
  return out;
}

ExactScalar theta2_special(const ExactScalar& z, const ModelParams& p, const Inhom& in) {
  return -(a_fn(p.q() * z, p, in) * d_fn(z, p, in));
}

namespace {

TensorShape chain_shape(int aux, int n) {
  std::vector<int> dims(static_cast<std::size_t>(n + 1), 3);
  dims[0] = aux;
  return TensorShape(std::move(dims));
}

std::size_t pow3(int n) {
  std::size_t d = 1;
  for (int k = 0; k < n; ++k) d *= 3;
  return d;
}

ScalarVector lift(int aux_dim, int a, const ScalarVector& v) {
  ScalarVector out(static_cast<std::size_t>(aux_dim) * v.size());
  std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(a) * v.size()));
  return out;
}

ScalarVector block_of(const ScalarVector& u, int b, std::size_t len) {
  const auto first = u.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(b) * len);
  return ScalarVector(first, first + static_cast<std::ptrdiff_t>(len));
}

ScalarMatrix from_columns(const std::vector<ScalarVector>& cols) {
  const std::size_t n = cols.empty() ? 0 : cols[0].size();
  ScalarMatrix m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  return m;
}

template <class F>
ScalarMatrix dense(std::size_t dim, F&& apply) {
  std::vector<ScalarVector> cols;
  cols.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) cols.push_back(apply(exact::basis_vector(dim, k)));
  return from_columns(cols);
}

}  // namespace

Monodromy::Monodromy(const ExactScalar& z, const ModelParams& p, const Inhom& in)
    : n_(in.N()), shape_(chain_shape(2, in.N())) {
  for (const ExactScalar& w : in.w) r_.push_back(vertex::r12(z / (p.q() * w), p));
}

ScalarVector Monodromy::apply(int row, int col, const ScalarVector& v) const {
  ScalarVector u = lift(2, col, v);
  for (int j = 0; j < n_; ++j) u = exact::apply_local(r_[static_cast<std::size_t>(j)], shape_, {0, j + 1}, u);
  return block_of(u, row, v.size());
}

ScalarVector Monodromy::apply_left(const ScalarVector& v, int row, int col) const {
  ScalarVector u = lift(2, row, v);
  for (int j = n_; j-- > 0;) u = exact::apply_local_left(u, r_[static_cast<std::size_t>(j)], shape_, {0, j + 1});
  return block_of(u, col, v.size());
}

ScalarMatrix Monodromy::block(int row, int col) const {
  return dense(pow3(n_), [&](const ScalarVector& e) { return apply(row, col, e); });
}

ScalarVector apply_transfer1(const ExactScalar& z, Twist t, const ModelParams& p, const Inhom& in,
                             const ScalarVector& v) {
  const ScalarMatrix om = omega1(t);
  ScalarVector out(v.size());
  for (int a = 0; a < 2; ++a) {
    ScalarVector u = lift(2, a, v);
    for (int j = 0; j < in.N(); ++j)
      u = exact::apply_local(vertex::r12(z / (p.q() * in.w[static_cast<std::size_t>(j)]), p), chain_shape(2, in.N()),
                             {0, j + 1}, u);
    for (int b = 0; b < 2; ++b) {
      const ExactScalar& c = om(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      if (!c.is_zero()) out = exact::add(out, exact::scale(block_of(u, b, v.size()), c));
    }
  }
  return out;
}

ScalarVector apply_transfer2_trace(const ExactScalar& z, Twist t, const ModelParams& p, const Inhom& in,
                                   const ScalarVector& v) {
  const ScalarMatrix om = omega2(t);
  const TensorShape shape = chain_shape(3, in.N());
  std::vector<ScalarMatrix> rs;
  for (const ExactScalar& w : in.w) rs.push_back(vertex::r22(z / w, p));
  ScalarVector out(v.size());
  for (int a = 0; a < 3; ++a) {
    ScalarVector u = lift(3, a, v);
    for (int j = 0; j < in.N(); ++j) u = exact::apply_local(rs[static_cast<std::size_t>(j)], shape, {0, j + 1}, u);
    for (int b = 0; b < 3; ++b) {
      // tr(Omega T) = sum_{a,b} Omega_{ab} T_{ba}
      const ExactScalar& c = om(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      if (!c.is_zero()) out = exact::add(out, exact::scale(block_of(u, b, v.size()), c));
    }
  }
  return out;
}

ScalarVector apply_transfer2_fusion(const ExactScalar& z, Twist t, const ModelParams& p, const Inhom& in,
                                    const ScalarVector& v) {
  const ScalarVector tv = apply_transfer1(z, t, p, in, apply_transfer1(p.q() * z, t, p, in, v));
  return exact::sub(tv, exact::scale(v, a_fn(p.q() * z, p, in) * d_fn(z, p, in)));
}

ScalarMatrix transfer(int level, const ExactScalar& z, Twist t, const ModelParams& p, const Inhom& in) {
  const std::size_t dim = pow3(in.N());
  if (level == 1) return dense(dim, [&](const ScalarVector& e) { return apply_transfer1(z, t, p, in, e); });
  if (level != 2) throw std::invalid_argument("transfer level must be 1 or 2");
  if (omega2_fused(t, p) != omega2(t)) throw std::logic_error("twist matrices disagree with their fused form");
  const ScalarMatrix t2 = dense(dim, [&](const ScalarVector& e) { return apply_transfer2_trace(z, t, p, in, e); });
  const ScalarMatrix t1z = transfer(1, z, t, p, in);
  const ScalarMatrix t1qz = transfer(1, p.q() * z, t, p, in);
  const ScalarMatrix fused =
      t1z * t1qz - ScalarMatrix::identity(dim) * (a_fn(p.q() * z, p, in) * d_fn(z, p, in));
  if (fused != t2) throw std::logic_error("fusion identity violated");
  return t2;
}

bool check_fusion(const ExactScalar& z, Twist t, const ModelParams& p, const Inhom& in) {
  try {
    transfer(2, z, t, p, in);
    return true;
  } catch (const std::logic_error&) {
    return false;
  }
}

namespace {

// sqrt(2) s^a for a = 1, 2 and s^3 itself; `scaled` records which carry the sqrt(2).
ScalarMatrix spin_hat(int a) {
  const ExactScalar i = ExactScalar::i();
  switch (a) {
    case 1: return ScalarMatrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
    case 2: return ScalarMatrix{{0, -i, 0}, {i, 0, -i}, {0, i, 0}};
    case 3: return ScalarMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, -1}};
  }
  throw std::invalid_argument("spin component");
}

bool scaled(int a) { return a != 3; }

Rational half_pow(int k) {
  Rational r(1);
  for (int j = 0; j < k; ++j) r /= 2;
  return r;
}

// Two-site bond sum_a J_a (s^a s'^a + 2 (s^a)^2) - sum_ab A_ab s^a s^b s'^a s'^b,
// with the second factor multiplied by eps_a (the twist signs).
ScalarMatrix bond(const Rational& x, const std::array<int, 3>& eps) {
  const Rational j3 = (x * x - 2) / 2;
  const Rational jj[3] = {1, 1, j3};
  const Rational a13 = x - 1;
  const Rational amat[3][3] = {{1, 1, a13}, {1, 1, a13}, {a13, a13, j3}};
  const ScalarMatrix id = ScalarMatrix::identity(3);
  ScalarMatrix h(9);
  for (int a = 1; a <= 3; ++a) {
    const ScalarMatrix sa = spin_hat(a);
    const Rational c = jj[a - 1] * eps[static_cast<std::size_t>(a - 1)] * half_pow(scaled(a) ? 1 : 0);
    h += exact::kron(sa, sa) * ExactScalar(c);
    h += exact::kron(sa * sa, id) * ExactScalar(Rational(2 * jj[a - 1] * half_pow(scaled(a) ? 1 : 0)));
  }
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      const ScalarMatrix ab = spin_hat(a) * spin_hat(b);
      const int k = (scaled(a) ? 1 : 0) + (scaled(b) ? 1 : 0);
      const Rational c = amat[a - 1][b - 1] * eps[static_cast<std::size_t>(a - 1)] *
                         eps[static_cast<std::size_t>(b - 1)] * half_pow(k);
      h -= exact::kron(ab, ab) * ExactScalar(c);
    }
  return h;
}

std::array<int, 3> twist_signs(Twist t) {
  return t == Twist::Diagonal ? std::array<int, 3>{-1, -1, 1} : std::array<int, 3>{1, -1, -1};
}

}  // namespace

ScalarMatrix hamiltonian(int n, const Rational& x, Twist t) {
  if (n < 2) throw std::invalid_argument("hamiltonian needs N >= 2");
  if (n > 6) throw std::invalid_argument("exact hamiltonian limited to N <= 6");
  const TensorShape shape = TensorShape::uniform(3, n);
  const ScalarMatrix h = bond(x, {1, 1, 1});
  ScalarMatrix out(shape.size());
  for (int j = 0; j + 1 < n; ++j) out += exact::embed(h, shape, {j, j + 1});
  out += exact::embed(bond(x, twist_signs(t)), shape, {n - 1, 0});
  return out;
}

ScalarMatrix hamiltonian_from_transfer(int n, const ModelParams& p, Twist t) {
  if (n < 1 || n > 4) throw std::invalid_argument("hamiltonian_from_transfer limited to 1 <= N <= 4");
  using LMatrix = exact::Matrix<LaurentPoly>;
  auto br = [&](long k) { return exact::bracket_monomial(exact::pow(p.q(), k), 1); };  // [q^k z]
  const LaurentPoly c6 = LaurentPoly(p.brq(1) * p.brq(2));
  const LaurentPoly cq2 = LaurentPoly(p.brq(2));
  const LaurentPoly p1 = br(1) * br(2), p2 = br(0) * br(1), p3 = cq2 * br(1), p4 = br(-1) * br(0);
  const LaurentPoly p5 = cq2 * br(0), p7 = p2 + c6;
  LMatrix r(9);
  r(0, 0) = r(8, 8) = p1;
  r(1, 1) = r(3, 3) = r(5, 5) = r(7, 7) = p2;
  r(1, 3) = r(3, 1) = r(5, 7) = r(7, 5) = p3;
  r(2, 2) = r(6, 6) = p4;
  r(2, 4) = r(4, 2) = r(4, 6) = r(6, 4) = p5;
  r(2, 6) = r(6, 2) = c6;
  r(4, 4) = p7;
  {
    const ExactScalar z0 = Rational(7, 5);
    if (r.map([&](const LaurentPoly& e) { return e.evaluate(z0); }) != vertex::r22(z0, p))
      throw std::logic_error("Laurent form of the spin-one R-matrix disagrees with the table");
  }

  const TensorShape shape = chain_shape(3, n);
  const std::size_t dim = pow3(n);
  const ScalarMatrix om = omega2(t);
  LMatrix t2(dim);
  for (std::size_t col = 0; col < dim; ++col)
    for (int a = 0; a < 3; ++a) {
      std::vector<LaurentPoly> u(shape.size(), LaurentPoly(0));
      u[static_cast<std::size_t>(a) * dim + col] = LaurentPoly(1);
      for (int j = 0; j < n; ++j) u = exact::apply_local_any(r, shape, {0, j + 1}, u);
      for (int b = 0; b < 3; ++b) {
        const ExactScalar& c = om(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        if (c.is_zero()) continue;
        for (std::size_t row = 0; row < dim; ++row) {
          const LaurentPoly& e = u[static_cast<std::size_t>(b) * dim + row];
          if (!e.is_zero()) t2(row, col) += LaurentPoly(c) * e;
        }
      }
    }
  const ExactScalar one(1);
  const ScalarMatrix t2_at1 = t2.map([&](const LaurentPoly& e) { return e.evaluate(one); });
  const ScalarMatrix dt2_at1 = t2.map([&](const LaurentPoly& e) { return exact::laurent_derivative(e).evaluate(one); });
  ScalarMatrix inv;
  try {
    inv = exact::inverse_scalar(t2_at1);
  } catch (const std::exception&) {
    throw std::domain_error("T2(1) is singular at this q");
  }
  return ScalarMatrix::identity(dim) * ExactScalar(n) + inv * dt2_at1 * (p.brq(2) / ExactScalar(2));
}

int magnetisation(std::size_t index, int n) {
  int m = 0;
  for (int k = 0; k < n; ++k) {
    m += 1 - static_cast<int>(index % 3);
    index /= 3;
  }
  return m;
}

ScalarMatrix translation(int n) {
  const TensorShape shape = TensorShape::uniform(3, n);
  ScalarMatrix s(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) {
    std::vector<int> d = shape.digits(i);
    std::rotate(d.rbegin(), d.rbegin() + 1, d.rend());
    s(shape.index(d), i) = 1;
  }
  return s;
}

SymmetryOps symmetry_ops(int n, Twist t) {
  const TensorShape shape = TensorShape::uniform(3, n);
  SymmetryOps ops;
  ops.M = ScalarMatrix(shape.size());
  ops.parity = ScalarMatrix(shape.size());
  ops.F = ScalarMatrix(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const int m = magnetisation(i, n);
    ops.M(i, i) = m;
    ops.parity(i, i) = (m % 2 == 0) ? 1 : -1;
    std::vector<int> d = shape.digits(i);
    for (int& x : d) x = 2 - x;
    ops.F(shape.index(d), i) = 1;
  }
  ops.Sprime = translation(n) * exact::embed(omega2(t), shape, {n - 1});
  return ops;
}

ScalarMatrix commutator(const ScalarMatrix& a, const ScalarMatrix& b) { return a * b - b * a; }
ScalarMatrix anticommutator(const ScalarMatrix& a, const ScalarMatrix& b) { return a * b + b * a; }

namespace {

using Dense = Eigen::MatrixXd;

// Bond coefficients h(x) = h0 + x h1 + x^2 h2 as doubles; the bond is real.
std::array<Dense, 3> bond_coefficients(const std::array<int, 3>& eps) {
  const ScalarMatrix b0 = bond(0, eps), bp = bond(1, eps), bm = bond(-1, eps);
  std::array<Dense, 3> out;
  for (Dense& d : out) d = Dense::Zero(9, 9);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      if (!b0(i, j).is_rational() || !bp(i, j).is_rational() || !bm(i, j).is_rational())
        throw std::logic_error("bond operator is not real");
      const Rational h0 = b0(i, j).to_rational(), hp = bp(i, j).to_rational(), hm = bm(i, j).to_rational();
      out[0](i, j) = h0.get_d();
      out[1](i, j) = Rational((hp - hm) / 2).get_d();
      out[2](i, j) = Rational((hp + hm) / 2 - h0).get_d();
    }
  return out;
}

Dense float_hamiltonian(int n, double x, Twist t) {
  const TensorShape shape = TensorShape::uniform(3, n);
  const std::size_t dim = shape.size();
  Dense h = Dense::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  auto add_bond = [&](const std::array<Dense, 3>& c, int s1, int s2) {
    const Dense b = c[0] + x * c[1] + x * x * c[2];
    for (std::size_t col = 0; col < dim; ++col) {
      const int d1 = shape.digit(col, s1), d2 = shape.digit(col, s2);
      const std::size_t base = col - static_cast<std::size_t>(d1) * shape.stride(s1) -
                               static_cast<std::size_t>(d2) * shape.stride(s2);
      for (int e1 = 0; e1 < 3; ++e1)
        for (int e2 = 0; e2 < 3; ++e2) {
          const double v = b(e1 * 3 + e2, d1 * 3 + d2);
          if (v == 0) continue;
          const std::size_t row =
              base + static_cast<std::size_t>(e1) * shape.stride(s1) + static_cast<std::size_t>(e2) * shape.stride(s2);
          h(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += v;
        }
    }
  };
  const auto plain = bond_coefficients({1, 1, 1});
  for (int j = 0; j + 1 < n; ++j) add_bond(plain, j, j + 1);
  add_bond(bond_coefficients(twist_signs(t)), n - 1, 0);
  return h;
}

std::size_t flip_index(std::size_t i, int n) {
  std::size_t out = 0, scale = 1;
  for (int k = 0; k < n; ++k) {
    out += (2 - i % 3) * scale;
    i /= 3;
    scale *= 3;
  }
  return out;
}

// Orthonormal basis of {configurations passing `keep`} intersected with F = f, as sparse columns.
template <class Keep>
std::vector<std::vector<std::pair<std::size_t, double>>> flip_sector(int n, int f, Keep&& keep) {
  std::vector<std::vector<std::pair<std::size_t, double>>> basis;
  const std::size_t dim = pow3(n);
  const double h = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!keep(i)) continue;
    const std::size_t j = flip_index(i, n);
    if (j < i) continue;
    if (j == i) {
      if (f == 1) basis.push_back({{i, 1.0}});
    } else {
      basis.push_back({{i, h}, {j, f * h}});
    }
  }
  return basis;
}

std::vector<double> sector_eigenvalues(const Dense& h, const std::vector<std::vector<std::pair<std::size_t, double>>>& basis) {
  const auto m = static_cast<Eigen::Index>(basis.size());
  if (m == 0) return {};
  Dense s(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) {
      double v = 0;
      for (const auto& [i, ci] : basis[static_cast<std::size_t>(a)])
        for (const auto& [j, cj] : basis[static_cast<std::size_t>(b)])
          v += ci * cj * h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      s(a, b) = v;
    }
  Eigen::SelfAdjointEigenSolver<Dense> es(s, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + m);
  std::sort(ev.begin(), ev.end());
  return ev;
}

int count_zero(const std::vector<double>& ev, double tol) {
  return static_cast<int>(std::count_if(ev.begin(), ev.end(), [&](double e) { return std::abs(e) <= tol; }));
}

std::vector<double> nonzero(const std::vector<double>& ev, double tol) {
  std::vector<double> out;
  for (double e : ev)
    if (std::abs(e) > tol) out.push_back(e);
  return out;
}

}  // namespace

SpectrumReport spectrum_probe(int n, double x, Twist t, double rel_tol) {
  if (n < 2 || n > 8) throw std::invalid_argument("spectrum probe needs 2 <= N <= 8");
  const Dense h = float_hamiltonian(n, x, t);
  SpectrumReport rep;
  rep.N = n;
  rep.x = x;
  rep.twist = t;

  Eigen::SelfAdjointEigenSolver<Dense> full(h, Eigen::EigenvaluesOnly);
  const double lo = full.eigenvalues().minCoeff(), hi = full.eigenvalues().maxCoeff();
  const double diameter = std::max({hi - lo, std::abs(lo), std::abs(hi), 1.0});
  rep.tolerance = rel_tol * diameter;
  rep.min_eigenvalue = lo;
  {
    std::vector<double> ev(full.eigenvalues().data(), full.eigenvalues().data() + full.eigenvalues().size());
    rep.zero_degeneracy = count_zero(ev, rep.tolerance);
  }

  auto all = [](std::size_t) { return true; };
  if (t == Twist::Diagonal) {
    for (int f : {1, -1}) {
      Sector s;
      s.label = f == 1 ? "F=+1" : "F=-1";
      s.eigenvalues = sector_eigenvalues(h, flip_sector(n, f, all));
      s.zero_degeneracy = count_zero(s.eigenvalues, rep.tolerance);
      rep.sectors.push_back(std::move(s));
    }
    auto m0 = [n](std::size_t i) { return magnetisation(i, n) == 0; };
    rep.zero_in_special_sector = count_zero(sector_eigenvalues(h, flip_sector(n, 1, m0)), rep.tolerance);
  } else {
    for (int par : {1, -1}) {
      Sector s;
      s.label = par == 1 ? "(-1)^M=+1" : "(-1)^M=-1";
      auto keep = [n, par](std::size_t i) { return ((magnetisation(i, n) % 2 == 0) ? 1 : -1) == par; };
      std::vector<std::vector<std::pair<std::size_t, double>>> basis;
      for (int f : {1, -1}) {
        auto part = flip_sector(n, f, keep);
        basis.insert(basis.end(), part.begin(), part.end());
      }
      s.eigenvalues = sector_eigenvalues(h, basis);
      s.zero_degeneracy = count_zero(s.eigenvalues, rep.tolerance);
      rep.sectors.push_back(std::move(s));
    }
    const int sign = (n % 2 == 0) ? 1 : -1;
    auto keep = [n, sign](std::size_t i) { return ((magnetisation(i, n) % 2 == 0) ? 1 : -1) == sign; };
    rep.zero_in_special_sector = count_zero(sector_eigenvalues(h, flip_sector(n, sign, keep)), rep.tolerance);
  }

  const std::vector<double> a = nonzero(rep.sectors[0].eigenvalues, rep.tolerance);
  const std::vector<double> b = nonzero(rep.sectors[1].eigenvalues, rep.tolerance);
  rep.nonzero_parts_coincide = a.size() == b.size();
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k)
    rep.max_pair_deviation = std::max(rep.max_pair_deviation, std::abs(a[k] - b[k]) / diameter);
  if (rep.max_pair_deviation > 1e-9) rep.nonzero_parts_coincide = false;
  return rep;
}

}  // namespace vertexlab::transfer
