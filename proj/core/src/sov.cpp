#include "vertexlab/sov.hpp"

#include <stdexcept>

namespace vertexlab::sov {

using exact::TensorShape;
using transfer::Monodromy;

namespace {

std::size_t pow3(int n) {
  std::size_t d = 1;
  for (int k = 0; k < n; ++k) d *= 3;
  return d;
}

ExactScalar qpow(const ModelParams& p, long k) { return exact::pow(p.q(), k); }

// prod_{k != j} [q^{-1+h_k} z / w_k] / [q^{h_k - h_j} w_j / w_k]
ExactScalar hop_factor(const Heights& h, std::size_t j, const ExactScalar& z, const ModelParams& p, const Inhom& in) {
  ExactScalar f(1);
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (k == j) continue;
    f *= p.br(qpow(p, h[k] - 1) * z / in.w[k]);
    f /= p.br(qpow(p, h[k] - h[j]) * in.w[j] / in.w[k]);
  }
  return f;
}

ExactScalar d_eigenvalue(const Heights& h, const ExactScalar& z, const ModelParams& p, const Inhom& in) {
  ExactScalar f(1);
  for (std::size_t k = 0; k < h.size(); ++k) f *= p.br(qpow(p, h[k] - 1) * z / in.w[k]);
  return f;
}

std::size_t height_index(const Heights& h) {
  std::size_t k = 0;
  for (int x : h) k = 3 * k + static_cast<std::size_t>(x);
  return k;
}

}  // namespace

std::vector<Heights> all_heights(int n) {
  std::vector<Heights> out;
  const std::size_t total = pow3(n);
  for (std::size_t k = 0; k < total; ++k) {
    Heights h(static_cast<std::size_t>(n));
    std::size_t rem = k;
    for (int j = n; j-- > 0;) {
      h[static_cast<std::size_t>(j)] = static_cast<int>(rem % 3);
      rem /= 3;
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<Heights> even_heights(int n) {
  std::vector<Heights> out;
  for (const Heights& h : all_heights(n)) {
    bool ok = true;
    for (int x : h) ok = ok && x != 1;
    if (ok) out.push_back(h);
  }
  return out;
}

ScalarVector highest_weight(int n) { return exact::basis_vector(pow3(n), 0); }

ScalarVector height_state(const Heights& h, const ModelParams& p, const Inhom& in) {
  if (static_cast<int>(h.size()) != in.N()) throw std::invalid_argument("height profile length");
  ScalarVector v = highest_weight(in.N());
  for (std::size_t j = 0; j < h.size(); ++j)
    for (int k = 0; k < h[j]; ++k) {
      const ExactScalar z = qpow(p, 1 - k) * in.w[j];
      const ExactScalar a = transfer::a_fn(z, p, in);
      if (a.is_zero()) throw std::domain_error("degenerate inhomogeneities");
      v = exact::scale(Monodromy(z, p, in).B(v), a.inverse());
    }
  return v;
}

ScalarVector dual_height_state(const Heights& h, const ModelParams& p, const Inhom& in) {
  if (static_cast<int>(h.size()) != in.N()) throw std::invalid_argument("height profile length");
  ScalarVector v = highest_weight(in.N());
  for (std::size_t j = 0; j < h.size(); ++j)
    for (int k = 0; k < h[j]; ++k) {
      const ExactScalar z = qpow(p, 1 - k) * in.w[j];
      const ExactScalar d = transfer::d_fn(qpow(p, -k) * in.w[j], p, in);
      if (d.is_zero()) throw std::domain_error("degenerate inhomogeneities");
      v = exact::scale(Monodromy(z, p, in).apply_left(v, 1, 0), d.inverse());
    }
  return v;
}

ExactScalar height_norm(const Heights& h, const ModelParams& p, const Inhom& in) {
  ExactScalar f(1);
  int total = 0;
  for (std::size_t j = 0; j < h.size(); ++j) {
    total += h[j];
    for (std::size_t k = j + 1; k < h.size(); ++k)
      f *= p.br(in.w[j] / in.w[k]) / p.br(qpow(p, h[k] - h[j]) * in.w[j] / in.w[k]);
  }
  return total % 2 == 0 ? f : -f;
}

SovReport check_sov_structure(const ModelParams& p, const Inhom& in, const ExactScalar& z) {
  const int n = in.N();
  const std::vector<Heights> hs = all_heights(n);
  std::vector<ScalarVector> right, left;
  for (const Heights& h : hs) {
    right.push_back(height_state(h, p, in));
    left.push_back(dual_height_state(h, p, in));
  }
  const Monodromy mono(z, p, in);
  SovReport rep;
  rep.d_eigen = rep.b_hopping = rep.c_hopping = rep.dual_actions = rep.scalar_products = true;
  const std::size_t dim = pow3(n);
  for (std::size_t idx = 0; idx < hs.size(); ++idx) {
    const Heights& h = hs[idx];
    const ExactScalar ev = d_eigenvalue(h, z, p, in);
    if (mono.D(right[idx]) != exact::scale(right[idx], ev)) rep.d_eigen = false;
    if (mono.apply_left(left[idx], 1, 1) != exact::scale(left[idx], ev)) rep.dual_actions = false;

    ScalarVector b_exp(dim), c_exp(dim), bl_exp(dim), cl_exp(dim);
    for (std::size_t j = 0; j < h.size(); ++j) {
      const ExactScalar hop = hop_factor(h, j, z, p, in);
      const ExactScalar wj = in.w[j];
      Heights up = h, down = h;
      ++up[j];
      --down[j];
      if (h[j] < 2) {
        b_exp = exact::add(b_exp, exact::scale(right[height_index(up)], transfer::a_fn(qpow(p, 1 - h[j]) * wj, p, in) * hop));
        // <<h|| tau^- lowers... on the dual side tau^+ maps to h_j - 1 and tau^- to h_j + 1.
        cl_exp = exact::add(cl_exp, exact::scale(left[height_index(up)], transfer::d_fn(qpow(p, -h[j]) * wj, p, in) * hop));
      }
      if (h[j] > 0) {
        c_exp = exact::sub(c_exp, exact::scale(right[height_index(down)], transfer::d_fn(qpow(p, 1 - h[j]) * wj, p, in) * hop));
        bl_exp = exact::sub(bl_exp, exact::scale(left[height_index(down)], transfer::a_fn(qpow(p, 2 - h[j]) * wj, p, in) * hop));
      }
    }
    if (mono.B(right[idx]) != b_exp) rep.b_hopping = false;
    if (mono.C(right[idx]) != c_exp) rep.c_hopping = false;
    if (mono.apply_left(left[idx], 0, 1) != bl_exp) rep.dual_actions = false;
    if (mono.apply_left(left[idx], 1, 0) != cl_exp) rep.dual_actions = false;
  }

  ScalarMatrix sum(dim);
  for (std::size_t a = 0; a < hs.size(); ++a) {
    for (std::size_t b = 0; b < hs.size(); ++b) {
      const ExactScalar sp = exact::dot(left[a], right[b]);
      const ExactScalar expect = a == b ? height_norm(hs[a], p, in) : ExactScalar(0);
      if (sp != expect) rep.scalar_products = false;
    }
    const ExactScalar inv = height_norm(hs[a], p, in).inverse();
    for (std::size_t i = 0; i < dim; ++i) {
      if (right[a][i].is_zero()) continue;
      const ExactScalar ri = right[a][i] * inv;
      for (std::size_t k = 0; k < dim; ++k)
        if (!left[a][k].is_zero()) sum(i, k) += ri * left[a][k];
    }
  }
  rep.completeness = sum == ScalarMatrix::identity(dim);
  return rep;
}

ScalarVector psi_d(const ModelParams& p, const Inhom& in) {
  ScalarVector v = highest_weight(in.N());
  for (const ExactScalar& w : in.w) v = Monodromy(w, p, in).B(v);
  return v;
}

ScalarVector psi_d_dual(const ModelParams& p, const Inhom& in) {
  ScalarVector v = highest_weight(in.N());
  for (const ExactScalar& w : in.w) v = Monodromy(w, p, in).apply_left(v, 1, 0);
  return v;
}

ExactScalar psi_ad_projection(const Heights& h, const ModelParams& p, const Inhom& in) {
  ExactScalar f(1);
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j) {
      const ExactScalar ratio = in.w[i] / in.w[j];
      f *= p.br(qpow(p, 2 * (h[i] - 1)) * ratio) / p.br(qpow(p, -2) * ratio);
    }
  return f;
}

ExactScalar psi_ad_dual_projection(const Heights& h, const ModelParams& p, const Inhom& in) {
  ExactScalar f(1);
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j) {
      const ExactScalar ratio = in.w[i] / in.w[j];
      f *= p.br(qpow(p, 1 - h[i]) * ratio) / p.br(p.q() * ratio);
    }
  return f;
}

namespace {

ScalarVector psi_ad_sov(const ModelParams& p, const Inhom& in) {
  if (!in.pairwise_distinct()) throw std::domain_error("separation of variables needs distinct inhomogeneities");
  ScalarVector out(pow3(in.N()));
  // Projections vanish whenever some h_i = 1.
  for (const Heights& h : even_heights(in.N())) {
    const ExactScalar c = psi_ad_projection(h, p, in) / height_norm(h, p, in);
    out = exact::add(out, exact::scale(height_state(h, p, in), c));
  }
  return out;
}

ScalarVector psi_ad_kernel(const ModelParams& p, const Inhom& in, const ExactScalar& z0) {
  const int n = in.N();
  const std::size_t dim = pow3(n);
  const int sector = n % 2 == 0 ? 1 : -1;
  std::vector<std::size_t> cols, rows;
  for (std::size_t i = 0; i < dim; ++i) {
    const int par = transfer::magnetisation(i, n) % 2 == 0 ? 1 : -1;
    (par == sector ? cols : rows).push_back(i);
  }
  // T1 maps the (-1)^M = (-1)^N sector into the other one.
  ScalarMatrix block(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const ScalarVector col =
        transfer::apply_transfer1(z0, Twist::AntiDiagonal, p, in, exact::basis_vector(dim, cols[c]));
    for (std::size_t r = 0; r < rows.size(); ++r) block(r, c) = col[rows[r]];
  }
  const std::vector<ScalarVector> ker = exact::kernel_scalar(block);
  if (ker.size() != 1) throw std::domain_error("degenerate parameters");
  ScalarVector out(dim);
  for (std::size_t c = 0; c < cols.size(); ++c) out[cols[c]] = ker[0][c];
  if (out[0].is_zero()) throw std::domain_error("degenerate parameters");
  return exact::scale(out, out[0].inverse());
}

// z0 must stay off the points +-q^k w_i (|k| <= 2) where the local weights degenerate.
bool special_point(const ExactScalar& z0, const ModelParams& p, const Inhom& in) {
  for (const ExactScalar& w : in.w)
    for (int k = -2; k <= 2; ++k) {
      const ExactScalar v = qpow(p, k) * w;
      if (z0 == v || z0 == -v) return true;
    }
  return false;
}

}  // namespace

ScalarVector psi_ad(const ModelParams& p, const Inhom& in, Method m) {
  if (m == Method::Sov) return psi_ad_sov(p, in);
  for (const Rational& z0 : {Rational(7, 3), Rational(11, 5), Rational(13, 7), Rational(17, 11), Rational(19, 13)}) {
    if (special_point(ExactScalar(z0), p, in)) continue;
    try {
      return psi_ad_kernel(p, in, ExactScalar(z0));
    } catch (const std::domain_error&) {
    }
  }
  throw std::domain_error("degenerate parameters");
}

ScalarVector psi_ad_dual_sov(const ModelParams& p, const Inhom& in) {
  if (!in.pairwise_distinct()) throw std::domain_error("separation of variables needs distinct inhomogeneities");
  ScalarVector out(pow3(in.N()));
  for (const Heights& h : all_heights(in.N())) {
    const ExactScalar proj = psi_ad_dual_projection(h, p, in);
    if (proj.is_zero()) continue;
    out = exact::add(out, exact::scale(dual_height_state(h, p, in), proj / height_norm(h, p, in)));
  }
  return out;
}

ScalarVector psi(Twist t, const ModelParams& p, const Inhom& in) {
  if (t == Twist::Diagonal) return psi_d(p, in);
  if (in.pairwise_distinct()) {
    try {
      return psi_ad(p, in, Method::Sov);
    } catch (const std::domain_error&) {
      // SoV basis degenerates when w_j = q^k w_i; the kernel route still works.
    }
  }
  return psi_ad(p, in, Method::Kernel);
}

int diagonal_null_dimension(const ModelParams& p, const Inhom& in, const ExactScalar& z) {
  const ScalarMatrix t1 = transfer::transfer(1, z, Twist::Diagonal, p, in);
  std::vector<std::size_t> sector;
  for (std::size_t k = 0; k < t1.rows(); ++k)
    if (transfer::magnetisation(k, in.N()) == 0) sector.push_back(k);
  ScalarMatrix sub(sector.size());
  for (std::size_t i = 0; i < sector.size(); ++i)
    for (std::size_t j = 0; j < sector.size(); ++j) sub(i, j) = t1(sector[i], sector[j]);
  return static_cast<int>(exact::kernel_scalar(sub).size());
}

bool check_null_vector(Twist t, const ScalarVector& v, const ExactScalar& z, const ModelParams& p, const Inhom& in) {
  if (exact::is_zero_vector(v)) return false;
  if (!exact::is_zero_vector(transfer::apply_transfer1(z, t, p, in, v))) return false;
  const ScalarVector t2v = transfer::apply_transfer2_trace(z, t, p, in, v);
  return t2v == exact::scale(v, transfer::theta2_special(z, p, in));
}

namespace {

Inhom inverted(const Inhom& in) {
  Inhom out;
  for (const ExactScalar& w : in.w) out.w.push_back(w.inverse());
  return out;
}

ScalarVector dual(Twist t, const ModelParams& p, const Inhom& in) {
  if (t == Twist::Diagonal) return psi_d_dual(p, in);
  return psi_ad_dual_sov(p, in);
}

}  // namespace

EigenvectorReport check_eigenvector_properties(Twist t, const ModelParams& p, const Inhom& in) {
  const int n = in.N();
  const TensorShape shape = TensorShape::uniform(3, n);
  EigenvectorReport rep;
  const ScalarVector v = psi(t, p, in);
  const Inhom inv = inverted(in);

  rep.transposition = dual(t, p, in) == psi(t, p, inv);
  rep.q_inversion = psi(t, p.inverted(), in) == psi(t, p, inv);

  rep.exchange = true;
  for (int j = 0; j + 1 < n; ++j) {
    const ExactScalar u = in.w[static_cast<std::size_t>(j)] / in.w[static_cast<std::size_t>(j + 1)];
    Inhom swapped = in;
    std::swap(swapped.w[static_cast<std::size_t>(j)], swapped.w[static_cast<std::size_t>(j + 1)]);
    const ScalarVector lhs = exact::apply_local(vertex::rcheck(vertex::Kind::R22, u, p), shape, {j, j + 1}, v);
    const ScalarVector rhs = exact::scale(psi(t, p, swapped), p.brq(1, u) * p.brq(2, u));
    if (lhs != rhs) rep.exchange = false;
  }

  const transfer::SymmetryOps ops = transfer::symmetry_ops(n, t);
  {
    Inhom rotated;
    rotated.w.push_back(in.w.back());
    for (int j = 0; j + 1 < n; ++j) rotated.w.push_back(in.w[static_cast<std::size_t>(j)]);
    ExactScalar f(1);
    const ExactScalar wn = in.w.back();
    for (int j = 0; j + 1 < n; ++j) {
      const ExactScalar r = wn / in.w[static_cast<std::size_t>(j)];
      f *= p.brq(-1, r) / p.brq(1, r);
    }
    rep.translation = ops.Sprime.apply(v) == exact::scale(psi(t, p, rotated), f);
  }

  if (t == Twist::Diagonal) {
    rep.symmetries = exact::is_zero_vector(ops.M.apply(v)) && ops.F.apply(v) == v;
  } else {
    const ExactScalar sign(n % 2 == 0 ? 1 : -1);
    rep.symmetries = ops.parity.apply(v) == exact::scale(v, sign) && ops.F.apply(v) == exact::scale(v, sign);
  }
  return rep;
}

ScalarVector phi(Twist t, int n, const ModelParams& p) {
  const Inhom hom = Inhom::homogeneous(n);
  if (t == Twist::Diagonal) {
    // ([q][q^2])^{-N/2} = r^{-N}
    const ExactScalar norm = exact::pow(p.r(), -n) * exact::pow(p.brq(1), -static_cast<long>(n) * (n - 1));
    ScalarVector v = exact::scale(psi_d(p, hom), norm);
    for (const ExactScalar& c : v)
      if (!c.is_rational()) throw std::logic_error("extension part of phi_D failed to cancel");
    return v;
  }
  return psi_ad_kernel(p, hom, ExactScalar(Rational(7, 3)));
}

PolynomialFit phi_polynomial_in_x(Twist t, int n, const std::vector<Rational>& qs) {
  std::vector<ScalarVector> vs;
  std::vector<Rational> xs;
  for (const Rational& q : qs) {
    vs.push_back(phi(t, n, ModelParams::from_q(q)));
    xs.push_back(q + 1 / q);
  }
  PolynomialFit fit;
  fit.consistent = true;
  const std::size_t dim = vs.front().size();
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<Rational> ys;
    for (const ScalarVector& v : vs) ys.push_back(v[k].to_rational());
    exact::RatPoly poly = exact::RatPoly::interpolate(xs, ys);
    fit.max_degree = std::max(fit.max_degree, poly.degree());
    if (poly.degree() >= static_cast<long>(qs.size()) - 1) fit.consistent = false;
    fit.components.push_back(std::move(poly));
  }
  return fit;
}

std::size_t parse_pattern(const std::string& pattern) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < pattern.size();) {
    int digit = -1;
    const unsigned char c = static_cast<unsigned char>(pattern[k]);
    if (c == 'U' || c == 'u' || c == '+') digit = 0, ++k;
    else if (c == '0' || c == 'o') digit = 1, ++k;
    else if (c == 'D' || c == 'd' || c == '-') digit = 2, ++k;
    else if (c == ' ' || c == ',') {
      ++k;
      continue;
    } else if (pattern.compare(k, 3, "⇑") == 0) digit = 0, k += 3;
    else if (pattern.compare(k, 3, "⇓") == 0) digit = 2, k += 3;
    else throw std::invalid_argument("bad spin pattern '" + pattern + "'");
    index = 3 * index + static_cast<std::size_t>(digit);
  }
  return index;
}

std::string pattern_string(std::size_t index, int n) {
  std::string s(static_cast<std::size_t>(n), 'U');
  for (int k = n; k-- > 0;) {
    s[static_cast<std::size_t>(k)] = "U0D"[index % 3];
    index /= 3;
  }
  return s;
}

}  // namespace vertexlab::sov
