#include "vertexlab/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "vertexlab/polynomial.hpp"

namespace vertexlab::partition {

namespace {

ExactScalar br(const ExactScalar& z) { return exact::bracket(z); }

ExactScalar nonzero(const ExactScalar& v) {
  if (v.is_zero()) throw std::domain_error("coinciding spectral parameters: use the recursion or limit entry point");
  return v;
}

ExactScalar qp(const ModelParams& p, long k) { return exact::pow(p.q(), k); }

ExactScalar det0(const ScalarMatrix& m) { return m.rows() == 0 ? ExactScalar(1) : exact::det(m); }

}  // namespace

SixVertexWeights six_vertex_weights(WeightSet set, const ExactScalar& z, const ModelParams& p) {
  if (set == WeightSet::Kuperberg) return {set, br(p.q() / z), br(p.q() * z), p.brq(2)};
  return {set, br(p.q() * z), br(z), p.brq(1)};
}

ScalarMatrix vertex_matrix(const SixVertexWeights& w) {
  ScalarMatrix m(4);
  m(0, 0) = m(3, 3) = w.a;
  m(1, 1) = m(2, 2) = w.b;
  m(1, 2) = m(2, 1) = w.c;
  return m;
}

// ---- closed forms ----

ExactScalar z_ik(const Params& z, const Params& w, const ModelParams& p) {
  const std::size_t n = z.size();
  if (w.size() != n) throw std::invalid_argument("z_ik needs as many rows as columns");
  ExactScalar pre(1);
  ScalarMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SixVertexWeights v = six_vertex_weights(WeightSet::Kuperberg, z[i] / w[j], p);
      const ExactScalar ab = nonzero(v.a * v.b);
      pre *= ab;
      m(i, j) = v.c / ab;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pre /= nonzero(br(z[i] / z[j]) * br(w[j] / w[i]));
  return pre * det0(m);
}

ExactScalar z_ht(int sign, const Params& z, const Params& w, const ModelParams& p) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("half-turn sign must be +1 or -1");
  const std::size_t n = z.size();
  ExactScalar pre(1);
  ScalarMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ExactScalar u = nonzero(br(p.q() * w[j] / z[i])), v = nonzero(br(p.q() * z[i] / w[j]));
      pre *= u * v;
      m(i, j) = u.inverse() + ExactScalar(sign) * v.inverse();
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pre /= nonzero(br(z[j] / z[i]) * br(w[i] / w[j]));
  return z_ik(z, w, p) * pre * det0(m);
}

ExactScalar z_qt(int k, const Params& w, const ModelParams& p) {
  if (k != 1 && k != 2) throw std::invalid_argument("quarter-turn factor index must be 1 or 2");
  const std::size_t n = w.size();
  if (n % 2 != 0) throw std::invalid_argument("quarter-turn domain needs an even size");
  ExactScalar pre(1);
  ScalarMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const ExactScalar d = nonzero(br(p.q() * w[i] / w[j]) * br(p.q() * w[j] / w[i]));
      m(i, j) = br(exact::pow(w[j] / w[i], k)) / d;
      if (i < j) pre *= d / nonzero(br(w[j] / w[i]));
    }
  return pre * exact::pfaffian(m);
}

ExactScalar z_qt_full(const Params& w, const ModelParams& p) {
  const long n = static_cast<long>(w.size()) / 2;
  return exact::pow(p.brq(2), n) * exact::pow(p.brq(1), 3 * n) * z_qt(1, w, p) * z_qt(2, w, p);
}

namespace {

// prod_{i<j} [x_j/x_i][y_i/y_j] prod_{i<=j} [1/(x_i x_j)][y_i y_j]
ExactScalar u_turn_denominator(const Params& x, const Params& y) {
  ExactScalar d(1);
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (j > i) d *= br(x[j] / x[i]) * br(y[i] / y[j]);
      d *= br((x[i] * x[j]).inverse()) * br(y[i] * y[j]);
    }
  return nonzero(d);
}

// prod_{i,j} [q x_i/y_j][q y_j/x_i][q x_i y_j][q/(x_i y_j)]
ExactScalar u_turn_numerator(const Params& x, const Params& y, const ModelParams& p) {
  ExactScalar f(1);
  for (const ExactScalar& xi : x)
    for (const ExactScalar& yj : y)
      f *= br(p.q() * xi / yj) * br(p.q() * yj / xi) * br(p.q() * xi * yj) * br(p.q() / (xi * yj));
  return f;
}

}  // namespace

ExactScalar z_u(const Params& x, const Params& y, const ExactScalar& b, const ModelParams& p) {
  const std::size_t n = x.size();
  if (y.size() != n) throw std::invalid_argument("z_u needs as many x as y parameters");
  ExactScalar pre = exact::pow(p.brq(2), static_cast<long>(n)) * u_turn_numerator(x, y, p);
  for (std::size_t i = 0; i < n; ++i) pre *= br(b / y[i]) * p.brq(2, x[i] * x[i]);
  ScalarMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = nonzero(br(p.q() * x[i] / y[j]) * br(p.q() * y[j] / x[i])).inverse() -
                nonzero(br(p.q() * x[i] * y[j]) * br(p.q() / (y[j] * x[i]))).inverse();
  return pre / u_turn_denominator(x, y) * det0(m);
}

ExactScalar z_uu2(const Params& x, const Params& y, const ExactScalar& b, const ExactScalar& c, const ModelParams& p) {
  const std::size_t n = x.size();
  if (y.size() != n) throw std::invalid_argument("z_uu2 needs as many x as y parameters");
  ScalarMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ExactScalar &xi = x[i], &yj = y[j];
      m(i, j) = br(b / yj) * br(c * xi) / nonzero(br(p.q() * xi / yj)) -
                br(b / yj) * br(c / xi) / nonzero(br(p.q() / (xi * yj))) +
                br(b * yj) * br(c / xi) / nonzero(br(p.q() * yj / xi)) -
                br(b * yj) * br(c * xi) / nonzero(br(p.q() * xi * yj));
    }
  return u_turn_numerator(x, y, p) / u_turn_denominator(x, y) * det0(m);
}

ExactScalar z_uu(const Params& x, const Params& y, const ExactScalar& b, const ExactScalar& c, const ModelParams& p) {
  ExactScalar pre(1);
  for (const ExactScalar& yi : y) pre *= br(p.q() * p.q() / (yi * yi)) / nonzero(br(b / yi));
  return pre * z_u(x, y, b, p) * z_uu2(x, y, b, c, p);
}

ExactScalar z_cap(const Params& x, const Params& y, const ExactScalar& b, const ModelParams& p) {
  const std::size_t n = x.size();
  if (y.size() != n) throw std::invalid_argument("z_cap needs as many x as y parameters");
  const ExactScalar& s = p.s();
  const ExactScalar& q = p.q();
  ExactScalar pre = exact::pow(p.brq(1), static_cast<long>(n));
  for (std::size_t i = 0; i < n; ++i) pre *= br(b / (s * y[i])) * br(q * x[i] * x[i]);
  ScalarMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ExactScalar u = br(x[i] / y[j]) * br(x[i] / (q * y[j]));
      const ExactScalar v = br(x[i] * y[j]) * br(q * x[i] * y[j]);
      pre *= u * v;
      m(i, j) = nonzero(u).inverse() - nonzero(v).inverse();
    }
  ExactScalar den(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (j > i) den *= br(x[i] / x[j]) * br(y[i] / y[j]);
      den *= br((x[i] * x[j]).inverse()) * br(q * y[i] * y[j]);
    }
  return pre / nonzero(den) * det0(m);
}

ExactScalar z_a(const Params& x, const Params& y, const ExactScalar& b, const ModelParams& p) {
  const std::size_t n = x.size();
  if (y.size() != 2 * n) throw std::invalid_argument("z_a needs 2n row parameters");
  const ExactScalar& q = p.q();
  Params xi;
  for (const ExactScalar& v : x) {
    xi.push_back(v);
    xi.push_back(v / q);
  }
  ExactScalar pre = exact::pow(p.brq(1), static_cast<long>(2 * n));
  if (n % 2 == 1) pre = -pre;
  for (const ExactScalar& yi : y) pre *= br(b / yi);
  for (const ExactScalar& v : x) {
    pre *= br(q * v * v) * br(q * q * v * v);
    for (const ExactScalar& yj : y)
      for (long k = -1; k <= 1; ++k) pre *= br(qp(p, k) * v * yj) * br(qp(p, k) * v / yj);
  }
  ExactScalar den(1);
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = i; j < 2 * n; ++j) {
      if (j > i) den *= br(xi[i] / xi[j]) * br(y[i] / y[j]);
      den *= br(q * xi[i] * xi[j]) * br(y[i] * y[j]);
    }
  ScalarMatrix m(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j)
      m(i, j) = nonzero(br(q * xi[i] / y[j]) * br(xi[i] / y[j])).inverse() -
                nonzero(br(q * xi[i] * y[j]) * br(xi[i] * y[j])).inverse();
  return pre / nonzero(den) * det0(m);
}

ExactScalar z_a_via_cap(const Params& x, const Params& y, const ExactScalar& b, const ModelParams& p) {
  const ExactScalar& s = p.s();
  Params zeta, ys;
  ExactScalar pre(1);
  for (const ExactScalar& v : x) {
    zeta.push_back(v * s);
    zeta.push_back(v / s);
    pre *= p.brq(1, v * v) / nonzero(br(v * v));
    for (const ExactScalar& yj : y) pre /= nonzero(br(yj / v) * br(yj * v));
  }
  for (const ExactScalar& yj : y) ys.push_back(yj / s);
  return pre * z_cap(zeta, ys, b, p);
}

// ---- brute force ----

int Lattice::add_edge(int dim, int fixed) {
  dims_.push_back(dim);
  fixed_.push_back(fixed);
  return static_cast<int>(dims_.size()) - 1;
}

void Lattice::fix(int edge, int state) { fixed_.at(static_cast<std::size_t>(edge)) = state; }

void Lattice::add_node(std::vector<int> edges, std::vector<ExactScalar> table) {
  std::size_t size = 1;
  for (int e : edges) size *= static_cast<std::size_t>(dims_.at(static_cast<std::size_t>(e)));
  if (table.size() != size) throw std::invalid_argument("node weight table has the wrong size");
  nodes_.push_back({std::move(edges), std::move(table)});
}

void Lattice::add_matrix_vertex(const ScalarMatrix& m, int in1, int in2, int out1, int out2) {
  const int d1 = dims_.at(static_cast<std::size_t>(in1)), d2 = dims_.at(static_cast<std::size_t>(in2));
  std::vector<ExactScalar> table(static_cast<std::size_t>(d1 * d2 * d1 * d2));
  // Edge order (in1, in2, out1, out2).
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < d2; ++b)
      for (int c = 0; c < d1; ++c)
        for (int d = 0; d < d2; ++d)
          table[static_cast<std::size_t>(((a * d2 + b) * d1 + c) * d2 + d)] =
              m(static_cast<std::size_t>(c * d2 + d), static_cast<std::size_t>(a * d2 + b));
  add_node({in1, in2, out1, out2}, std::move(table));
}

std::size_t Lattice::free_edge_count() const {
  return static_cast<std::size_t>(std::count(fixed_.begin(), fixed_.end(), -1));
}

namespace {

struct Search {
  const std::vector<int>& dims;
  std::vector<int> state;
  std::vector<int> order;                      // free edges in assignment order
  std::vector<std::vector<std::size_t>> due;   // nodes completed after step k
  std::vector<std::size_t> constant_nodes;
  const std::vector<std::vector<int>>& node_edges;
  const std::vector<const std::vector<ExactScalar>*>& tables;
  ExactScalar total{0};
  std::size_t support = 0;

  const ExactScalar& weight(std::size_t node) const {
    std::size_t idx = 0;
    for (int e : node_edges[node]) idx = idx * static_cast<std::size_t>(dims[static_cast<std::size_t>(e)]) +
                                         static_cast<std::size_t>(state[static_cast<std::size_t>(e)]);
    return (*tables[node])[idx];
  }

  void run(std::size_t k, const ExactScalar& acc) {
    if (k == order.size()) {
      total += acc;
      ++support;
      return;
    }
    const int e = order[k];
    for (int s = 0; s < dims[static_cast<std::size_t>(e)]; ++s) {
      state[static_cast<std::size_t>(e)] = s;
      ExactScalar next = acc;
      bool dead = false;
      for (std::size_t node : due[k]) {
        const ExactScalar& w = weight(node);
        if (w.is_zero()) {
          dead = true;
          break;
        }
        next *= w;
      }
      if (!dead) run(k + 1, next);
    }
  }
};

}  // namespace

namespace {

template <class F>
void search_lattice(const std::vector<int>& dims, const std::vector<int>& fixed,
                    const std::vector<std::vector<int>>& node_edges,
                    const std::vector<const std::vector<ExactScalar>*>& tables, F&& done) {
  if (fixed.size() > kMaxBruteForceEdges) throw std::length_error("domain too large for the brute-force sum");
  std::vector<int> pos(dims.size(), -1);
  std::vector<int> order;
  for (std::size_t e = 0; e < dims.size(); ++e)
    if (fixed[e] < 0) {
      pos[e] = static_cast<int>(order.size());
      order.push_back(static_cast<int>(e));
    }
  Search s{dims, fixed, order, std::vector<std::vector<std::size_t>>(order.size()), {}, node_edges, tables};
  for (std::size_t e = 0; e < dims.size(); ++e)
    if (fixed[e] >= 0 && fixed[e] >= dims[e]) throw std::invalid_argument("fixed edge state out of range");
  ExactScalar constant(1);
  for (std::size_t n = 0; n < node_edges.size(); ++n) {
    int last = -1;
    for (int e : node_edges[n]) last = std::max(last, pos[static_cast<std::size_t>(e)]);
    if (last < 0) s.constant_nodes.push_back(n);
    else s.due[static_cast<std::size_t>(last)].push_back(n);
  }
  for (std::size_t n : s.constant_nodes) constant *= s.weight(n);
  if (!constant.is_zero()) s.run(0, constant);
  done(s);
}

}  // namespace

ExactScalar Lattice::sum() const {
  std::vector<std::vector<int>> edges;
  std::vector<const std::vector<ExactScalar>*> tables;
  for (const Node& n : nodes_) {
    edges.push_back(n.edges);
    tables.push_back(&n.table);
  }
  ExactScalar out;
  search_lattice(dims_, fixed_, edges, tables, [&](const Search& s) { out = s.total; });
  return out;
}

std::size_t Lattice::support_size() const {
  std::vector<std::vector<int>> edges;
  std::vector<const std::vector<ExactScalar>*> tables;
  for (const Node& n : nodes_) {
    edges.push_back(n.edges);
    tables.push_back(&n.table);
  }
  std::size_t out = 0;
  search_lattice(dims_, fixed_, edges, tables, [&](const Search& s) { out = s.support; });
  return out;
}

std::string to_string(Domain d) {
  switch (d) {
    case Domain::DWBC: return "dwbc";
    case Domain::HTplus: return "ht+";
    case Domain::HTminus: return "ht-";
    case Domain::QT: return "qt";
    case Domain::Uturn: return "u";
    case Domain::UUturn: return "uu";
    case Domain::TenVertexDWBC: return "dwbc10";
    case Domain::ZAdomain: return "za";
    case Domain::ZcapDomain: return "cap";
  }
  return "?";
}

Domain parse_domain(const std::string& s) {
  for (Domain d : {Domain::DWBC, Domain::HTplus, Domain::HTminus, Domain::QT, Domain::Uturn, Domain::UUturn,
                   Domain::TenVertexDWBC, Domain::ZAdomain, Domain::ZcapDomain})
    if (to_string(d) == s) return d;
  throw std::invalid_argument("unknown domain '" + s + "'");
}

namespace {

// Arrow states: horizontal edges 0 = right, 1 = left; vertical edges 0 = up, 1 = down.
struct Grid {
  Lattice lat;
  std::vector<std::vector<int>> h;  // h[row][k], k = 0..cols
  std::vector<std::vector<int>> v;  // v[col][k], k = 0..rows

  Grid(std::size_t rows, std::size_t cols, int hdim, int vdim) {
    h.assign(rows, {});
    v.assign(cols, {});
    // Row-major creation keeps the search front narrow.
    for (std::size_t c = 0; c < cols; ++c) v[c].push_back(lat.add_edge(vdim));
    for (std::size_t r = 0; r < rows; ++r) {
      h[r].push_back(lat.add_edge(hdim));
      for (std::size_t c = 0; c < cols; ++c) {
        h[r].push_back(lat.add_edge(hdim));
        v[c].push_back(lat.add_edge(vdim));
      }
    }
  }
  int left(std::size_t r) const { return h[r].front(); }
  int right(std::size_t r) const { return h[r].back(); }
  int bottom(std::size_t c) const { return v[c].front(); }
  int top(std::size_t c) const { return v[c].back(); }
  void vertex(std::size_t r, std::size_t c, const ScalarMatrix& m) {
    lat.add_matrix_vertex(m, h[r][c], v[c][r], h[r][c + 1], v[c][r + 1]);
  }
};

std::vector<ExactScalar> pair_table(const ExactScalar& w00, const ExactScalar& w01, const ExactScalar& w10,
                                    const ExactScalar& w11) {
  return {w00, w01, w10, w11};
}

ScalarMatrix kuperberg(const ExactScalar& z, const ModelParams& p) {
  return vertex_matrix(six_vertex_weights(WeightSet::Kuperberg, z, p));
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Lattice build_lattice(const DomainSpec& d, const ModelParams& p) {
  const Params& rows = d.rows;
  const Params& cols = d.cols;
  switch (d.kind) {
    case Domain::DWBC: {
      require(rows.size() == cols.size(), "DWBC needs a square domain");
      const std::size_t n = rows.size();
      Grid g(n, n, 2, 2);
      for (std::size_t r = 0; r < n; ++r) {
        g.lat.fix(g.left(r), 0);
        g.lat.fix(g.right(r), 1);
        for (std::size_t c = 0; c < n; ++c) g.vertex(r, c, kuperberg(rows[r] / cols[c], p));
      }
      for (std::size_t c = 0; c < n; ++c) {
        g.lat.fix(g.bottom(c), 1);
        g.lat.fix(g.top(c), 0);
      }
      return g.lat;
    }
    case Domain::HTplus:
    case Domain::HTminus: {
      require(rows.size() == cols.size(), "half-turn domain needs N row and N column parameters");
      const std::size_t n = rows.size();
      const ExactScalar sign(d.kind == Domain::HTplus ? 1 : -1);
      Grid g(2 * n, n, 2, 2);
      for (std::size_t r = 0; r < 2 * n; ++r) {
        const ExactScalar z = r < n ? rows[r] : sign * rows[2 * n - 1 - r];
        g.lat.fix(g.left(r), 0);
        for (std::size_t c = 0; c < n; ++c) g.vertex(r, c, kuperberg(z / cols[c], p));
      }
      for (std::size_t c = 0; c < n; ++c) {
        g.lat.fix(g.bottom(c), 1);
        g.lat.fix(g.top(c), 0);
      }
      // Each arc carries one line through: the two ends point opposite ways.
      for (std::size_t r = 0; r < n; ++r) g.lat.add_node({g.right(r), g.right(2 * n - 1 - r)}, pair_table(0, 1, 1, 0));
      return g.lat;
    }
    case Domain::QT: {
      const std::size_t n = rows.size();
      require(n % 2 == 0, "quarter-turn domain needs an even size");
      Grid g(n, n, 2, 2);
      for (std::size_t r = 0; r < n; ++r) {
        g.lat.fix(g.left(r), 0);
        g.lat.fix(g.bottom(r), 1);
        for (std::size_t c = 0; c < n; ++c) g.vertex(r, c, kuperberg(rows[r] / rows[c], p));
      }
      // Right end of row r joins the top of column r; with the state conventions above a
      // continuous line has equal states at the two ends.
      for (std::size_t r = 0; r < n; ++r) g.lat.add_node({g.right(r), g.top(r)}, pair_table(1, 0, 0, 1));
      return g.lat;
    }
    case Domain::Uturn:
    case Domain::UUturn: {
      const std::size_t n = rows.size();
      require(cols.size() == n, "U-turn domains need n x and n y parameters");
      const bool uu = d.kind == Domain::UUturn;
      const std::size_t ncols = uu ? 2 * n : n;
      Grid g(2 * n, ncols, 2, 2);
      Params colp;
      for (const ExactScalar& y : cols) {
        colp.push_back(y);
        if (uu) colp.push_back(y.inverse());
      }
      for (std::size_t r = 0; r < 2 * n; ++r) {
        const ExactScalar z = r % 2 == 0 ? rows[r / 2] : rows[r / 2].inverse();
        g.lat.fix(g.left(r), 0);
        for (std::size_t c = 0; c < ncols; ++c) g.vertex(r, c, kuperberg(z / colp[c], p));
      }
      for (std::size_t c = 0; c < ncols; ++c) {
        g.lat.fix(g.bottom(c), 1);
        if (!uu) g.lat.fix(g.top(c), 0);
      }
      // Arc at q x_i: [b/z] when the line enters the lower row, [b z] when it enters the upper one.
      for (std::size_t i = 0; i < n; ++i) {
        const ExactScalar z = p.q() * rows[i];
        g.lat.add_node({g.right(2 * i), g.right(2 * i + 1)}, pair_table(0, br(d.b * z), br(d.b / z), 0));
      }
      if (uu) {
        // Top arc over columns (y_j, 1/y_j) with z = q/y_j: [c/z] when the line enters the
        // right column, [c z] when it enters the left one.
        for (std::size_t j = 0; j < n; ++j) {
          const ExactScalar z = p.q() / cols[j];
          g.lat.add_node({g.top(2 * j), g.top(2 * j + 1)}, pair_table(0, br(d.c / z), br(d.c * z), 0));
        }
      }
      return g.lat;
    }
    case Domain::TenVertexDWBC: {
      const std::size_t n = cols.size();
      require(rows.size() == n, "ten-vertex DWBC needs N row and N column parameters");
      // Rows from the bottom: B(z_N) ... B(z_1), then C(w_N) ... C(w_1).
      Grid g(2 * n, n, 2, 3);
      for (std::size_t r = 0; r < 2 * n; ++r) {
        const bool b_row = r < n;
        const ExactScalar z = b_row ? rows[n - 1 - r] : cols[2 * n - 1 - r];
        g.lat.fix(g.left(r), b_row ? 1 : 0);
        g.lat.fix(g.right(r), b_row ? 0 : 1);
        for (std::size_t c = 0; c < n; ++c) g.vertex(r, c, vertex::r12(z / (p.q() * cols[c]), p));
      }
      for (std::size_t c = 0; c < n; ++c) {
        g.lat.fix(g.bottom(c), 0);
        g.lat.fix(g.top(c), 0);
      }
      return g.lat;
    }
    case Domain::ZAdomain: {
      const std::size_t n = rows.size();
      require(cols.size() == 2 * n, "Z_A domain needs n x and 2n y parameters");
      Params w;
      for (const ExactScalar& x : rows) {
        w.push_back(x);
        w.push_back(x.inverse());
      }
      Grid g(2 * n, 2 * n, 2, 3);
      for (std::size_t r = 0; r < 2 * n; ++r) {
        g.lat.fix(g.left(r), 1);
        g.lat.fix(g.right(r), 0);
        for (std::size_t c = 0; c < 2 * n; ++c) g.vertex(r, c, vertex::r12(cols[r] / (p.q() * w[c]), p));
      }
      for (std::size_t c = 0; c < 2 * n; ++c) g.lat.fix(g.bottom(c), 0);
      for (std::size_t i = 0; i < n; ++i) {
        const ScalarVector chi = vertex::boundary_vector(2, rows[i], d.b, p);
        g.lat.add_node({g.top(2 * i), g.top(2 * i + 1)}, std::vector<ExactScalar>(chi.begin(), chi.end()));
      }
      return g.lat;
    }
    case Domain::ZcapDomain: {
      const std::size_t n = rows.size();
      require(cols.size() == n, "Z_cap domain needs n x and n y parameters");
      Params w;
      for (const ExactScalar& x : rows) {
        w.push_back(x);
        w.push_back(x.inverse());
      }
      Grid g(n, 2 * n, 2, 2);
      for (std::size_t r = 0; r < n; ++r) {
        g.lat.fix(g.left(r), 1);
        g.lat.fix(g.right(r), 0);
        for (std::size_t c = 0; c < 2 * n; ++c) {
          g.vertex(r, c, vertex_matrix(six_vertex_weights(WeightSet::RMatrix, cols[r] / w[c], p)));
        }
      }
      for (std::size_t c = 0; c < 2 * n; ++c) g.lat.fix(g.bottom(c), 0);
      for (std::size_t i = 0; i < n; ++i) {
        const ScalarVector chi = vertex::boundary_vector(1, rows[i], d.b, p);
        g.lat.add_node({g.top(2 * i), g.top(2 * i + 1)}, std::vector<ExactScalar>(chi.begin(), chi.end()));
      }
      return g.lat;
    }
  }
  throw std::invalid_argument("unknown domain");
}

ExactScalar z_bruteforce(const DomainSpec& d, const ModelParams& p) { return build_lattice(d, p).sum(); }

ExactScalar z_closed(const DomainSpec& d, const ModelParams& p) {
  switch (d.kind) {
    case Domain::DWBC: return z_ik(d.rows, d.cols, p);
    case Domain::HTplus: return z_ht(1, d.rows, d.cols, p);
    case Domain::HTminus: return z_ht(-1, d.rows, d.cols, p);
    case Domain::QT: return z_qt_full(d.rows, p);
    case Domain::Uturn: return z_u(d.rows, d.cols, d.b, p);
    case Domain::UUturn: return z_uu(d.rows, d.cols, d.b, d.c, p);
    case Domain::TenVertexDWBC: {
      const Inhom in{d.cols};
      ExactScalar f(1);
      for (const ExactScalar& w : d.cols) f *= transfer::a_fn(w, p, in);
      return f * z_ik(d.rows, d.cols, p);
    }
    case Domain::ZAdomain: return z_a(d.rows, d.cols, d.b, p);
    case Domain::ZcapDomain: return z_cap(d.rows, d.cols, d.b, p);
  }
  throw std::invalid_argument("unknown domain");
}

// ---- scalar products of the special vectors ----

namespace {

Inhom inverted(const Inhom& in) {
  Inhom out;
  for (const ExactScalar& w : in.w) out.w.push_back(w.inverse());
  return out;
}

int permutation_sign(const std::vector<std::size_t>& seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) sign = -sign;
  return sign;
}

ScalarVector chi_product(const Params& x, const ExactScalar& b, const ModelParams& p) {
  ScalarVector out{ExactScalar(1)};
  for (const ExactScalar& xi : x) out = exact::tensor(out, vertex::boundary_vector(2, xi, b, p));
  return out;
}

}  // namespace

ExactScalar z_ad(const ExactScalar& y, const Inhom& in, const ModelParams& p) {
  const std::size_t n = in.w.size();
  const Params& w = in.w;
  ExactScalar pre(1);
  ScalarMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ExactScalar u = nonzero(p.brq(1, w[i] / w[j])), v = nonzero(p.brq(1, w[j] / w[i]));
      pre *= u;
      m(i, j) = y.inverse() / u + y / v;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pre /= nonzero(br(w[i] / w[j]) * br(w[j] / w[i]));
  return pre * det0(m);
}

ExactScalar z_ad_direct(const ExactScalar& y, const Inhom& in, const ModelParams& p) {
  const ScalarVector left = sov::psi(Twist::AntiDiagonal, p, inverted(in));
  const ScalarVector right = sov::psi(Twist::AntiDiagonal, p, in);
  ExactScalar total(0);
  for (std::size_t k = 0; k < right.size(); ++k) {
    if (left[k].is_zero() || right[k].is_zero()) continue;
    total += exact::pow(y, transfer::magnetisation(k, in.N())) * left[k] * right[k];
  }
  return total;
}

ExactScalar z_mixed_subset_sum(const Inhom& in, const ModelParams& p) {
  const std::size_t size = in.w.size();
  if (size % 2 != 0) return ExactScalar(0);
  const std::size_t n = size / 2;
  const Params& w = in.w;
  ExactScalar pre(1);
  for (const ExactScalar& wj : w) pre *= transfer::a_fn(wj, p, in);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) pre /= nonzero(br(w[i] / w[j]));
  ExactScalar total(0);
  for (unsigned mask = 0; mask < (1u << size); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n) continue;
    std::vector<std::size_t> in_i, in_j, seq;
    for (std::size_t k = 0; k < size; ++k) ((mask >> k) & 1u ? in_i : in_j).push_back(k);
    for (std::size_t k = 0; k < n; ++k) {
      seq.push_back(in_i[k]);
      seq.push_back(in_j[k]);
    }
    ExactScalar term(permutation_sign(seq));
    ScalarMatrix m(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < n; ++c) {
        const ExactScalar &wi = w[in_i[a]], &wj = w[in_j[c]];
        term *= p.brq(2, wi / wj) * p.brq(-1, wi / wj);
        m(a, c) = p.brq(2) / nonzero(p.brq(1, wi / wj) * p.brq(1, wj / wi));
      }
    total += term * det0(m);
  }
  return pre * total;
}

ExactScalar z_mixed_direct(const Inhom& in, const ModelParams& p) {
  return exact::dot(sov::psi_d_dual(p, in), sov::psi(Twist::AntiDiagonal, p, in));
}

MixedReport z_mixed(const Inhom& in, const ModelParams& p) {
  MixedReport r;
  r.direct = z_mixed_direct(in, p);
  r.subset_sum = z_mixed_subset_sum(in, p);
  r.quarter_turn = in.N() % 2 == 0 ? z_qt_full(in.w, p) : ExactScalar(0);
  r.agree = r.direct == r.subset_sum && r.direct == r.quarter_turn;
  return r;
}

Inhom alternating(const Params& x, const Params& tail) {
  Inhom in;
  for (const ExactScalar& v : x) {
    in.w.push_back(v);
    in.w.push_back(v.inverse());
  }
  in.w.insert(in.w.end(), tail.begin(), tail.end());
  return in;
}

XiReport xi_scalar(Twist t, const Params& x, const ExactScalar& b, const ModelParams& p) {
  const Inhom in = alternating(x);
  const Params& w = in.w;
  const std::size_t n = x.size();
  XiReport r;
  r.direct = exact::dot(chi_product(x, b, p), sov::psi(t, p, in));
  if (t == Twist::Diagonal) {
    ExactScalar pre = exact::pow(p.brq(1), static_cast<long>(n));
    for (const ExactScalar& xi : x) pre *= br(b * xi);
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j) pre *= p.brq(1, w[i] / w[j]);
    r.closed = pre * z_u(x, x, b, p);
  } else {
    ExactScalar num(n % 2 == 0 ? 1 : -1), den(1);
    for (std::size_t i = 0; i < n; ++i) {
      num *= p.brq(2, x[i] * x[i]);
      for (std::size_t j = 0; j < n; ++j) den *= p.brq(1, x[i] / x[j]);
      for (std::size_t j = i; j < n; ++j) {
        if (j > i) den *= p.brq(1, x[i] * x[j]);
        den *= p.brq(1, (x[i] * x[j]).inverse());
      }
    }
    r.closed = num / nonzero(den) * z_uu2(x, x, b, b.inverse(), p);
  }
  r.agree = r.direct == r.closed;
  return r;
}

namespace {

using exact::LaurentPoly;

// c X^k
struct Mono {
  ExactScalar c;
  long k = 0;
};
Mono operator*(const Mono& a, const Mono& b) { return {a.c * b.c, a.k + b.k}; }
Mono operator/(const Mono& a, const Mono& b) { return {a.c / b.c, a.k - b.k}; }
LaurentPoly bracket(const Mono& m) { return exact::bracket_monomial(m.c, m.k); }

// Rational function of X as a ratio of Laurent polynomials.
struct Ratio {
  LaurentPoly num{1}, den{1};
};
Ratio operator*(const Ratio& a, const Ratio& b) { return {a.num * b.num, a.den * b.den}; }
Ratio operator+(const Ratio& a, const Ratio& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}
Ratio operator-(const Ratio& a) { return {-a.num, a.den}; }
Ratio over(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("vanishing bracket in the odd-size determinant");
  return {num, den};
}

Ratio det_ratio(const std::vector<std::vector<Ratio>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return {};
  if (n == 1) return m[0][0];
  Ratio total{LaurentPoly(0), LaurentPoly(1)};
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Ratio>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Ratio> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const Ratio term = m[0][c] * det_ratio(minor);
    total = total + (c % 2 == 0 ? term : -term);
  }
  return total;
}

// P / (X - 1), assuming P(1) = 0.
LaurentPoly divide_by_x_minus_one(const LaurentPoly& p) {
  const long lo = p.low(), hi = p.high();
  LaurentPoly out;
  ExactScalar carry(0);
  for (long k = hi; k > lo; --k) {
    carry += p.coeff(k);
    out += LaurentPoly::monomial(carry, k - 1);
  }
  return out;
}

ExactScalar limit_at_one(Ratio r) {
  const ExactScalar one(1);
  while (true) {
    const ExactScalar num = r.num.evaluate(one), den = r.den.evaluate(one);
    if (!den.is_zero()) return num / den;
    if (!num.is_zero()) throw std::domain_error("the odd-size limit diverges");
    r.num = divide_by_x_minus_one(r.num);
    r.den = divide_by_x_minus_one(r.den);
  }
}

}  // namespace

XiReport z_odd_ad(const Params& x, const ModelParams& p) {
  const std::size_t n = x.size();
  const Inhom in = alternating(x, {ExactScalar(1)});
  XiReport r;
  r.direct = exact::dot(exact::tensor(chi_product(x, p.q().inverse(), p), exact::basis_vector(3, 2)),
                        sov::psi(Twist::AntiDiagonal, p, in));

  const Mono q{p.q(), 0}, one{ExactScalar(1), 0};
  std::vector<Mono> xs, ws;
  for (const ExactScalar& v : x) {
    xs.push_back({v, 0});
    ws.push_back({v, 0});
    ws.push_back({v.inverse(), 0});
  }
  xs.push_back({ExactScalar(1), 1});
  ws.push_back({ExactScalar(1), 1});
  ws.push_back({ExactScalar(1), -1});

  Ratio total{LaurentPoly(exact::pow(p.brq(1), static_cast<long>(n)) / p.brq(2)), LaurentPoly(1)};
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j)
      total = total * over(bracket(q * ws[i] / ws[j]), bracket(ws[i] / ws[j]));
  for (const Mono& v : xs) total = total * over(bracket(q * q * v * v), bracket(v * v));

  std::vector<std::vector<Ratio>> m(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      const Mono &xi = xs[i], &yj = xs[j];
      const Mono inv_x = one / xi, inv_y = one / yj;
      m[i].push_back(over(bracket(inv_y) * bracket(xi), bracket(q * xi / yj)) +
                     -over(bracket(inv_y) * bracket(inv_x), bracket(q * inv_x * inv_y)) +
                     over(bracket(yj) * bracket(inv_x), bracket(q * yj / xi)) +
                     -over(bracket(yj) * bracket(xi), bracket(q * xi * yj)));
    }
  r.closed = limit_at_one(total * det_ratio(m));
  r.agree = r.direct == r.closed;
  return r;
}

std::pair<ExactScalar, ExactScalar> spin_reversal_pairing(const Params& z, const Inhom& in, const ModelParams& p) {
  ScalarVector v = sov::highest_weight(in.N());
  for (const ExactScalar& zj : z) v = transfer::Monodromy(zj, p, in).B(v);
  const ScalarVector bra = sov::psi_d_dual(p, in);
  const ScalarVector flipped = transfer::symmetry_ops(in.N(), Twist::Diagonal).F.apply(v);
  return {exact::dot(bra, flipped), exact::dot(bra, v)};
}

}  // namespace vertexlab::partition
