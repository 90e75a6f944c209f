#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vertexlab/sov.hpp"

namespace vertexlab::partition {

using exact::ExactScalar;
using exact::Rational;
using exact::ScalarMatrix;
using exact::ScalarVector;
using transfer::Inhom;
using transfer::Twist;
using vertex::ModelParams;
using Params = std::vector<ExactScalar>;

// Kuperberg: a = [q/z], b = [qz], c = [q^2].  RMatrix: a = [qz], b = [z], c = [q].
enum class WeightSet { Kuperberg, RMatrix };

struct SixVertexWeights {
  WeightSet set;
  ExactScalar a, b, c;
};
SixVertexWeights six_vertex_weights(WeightSet set, const ExactScalar& z, const ModelParams& p);
// 4 x 4 vertex matrix on (horizontal, vertical) with a on 00/11, b on 01/10 and c on the exchanges.
ScalarMatrix vertex_matrix(const SixVertexWeights& w);

// ---- closed forms ----

ExactScalar z_ik(const Params& z, const Params& w, const ModelParams& p);
ExactScalar z_ht(int sign, const Params& z, const Params& w, const ModelParams& p);
ExactScalar z_qt(int k, const Params& w, const ModelParams& p);
// [q^2]^n [q]^{3n} Z_QT^(1) Z_QT^(2)
ExactScalar z_qt_full(const Params& w, const ModelParams& p);
ExactScalar z_u(const Params& x, const Params& y, const ExactScalar& b, const ModelParams& p);
ExactScalar z_uu2(const Params& x, const Params& y, const ExactScalar& b, const ExactScalar& c, const ModelParams& p);
// prod [q^2/y_i^2]/[b/y_i] Z_U Z_UU^(2)
ExactScalar z_uu(const Params& x, const Params& y, const ExactScalar& b, const ExactScalar& c, const ModelParams& p);
// Needs the half parameter s = q^{1/2}.
ExactScalar z_cap(const Params& x, const Params& y, const ExactScalar& b, const ModelParams& p);
// n column pairs (x_i, 1/x_i), 2n rows y.
ExactScalar z_a(const Params& x, const Params& y, const ExactScalar& b, const ModelParams& p);
// The same value through Z_cap at the shifted parameters; needs s.
ExactScalar z_a_via_cap(const Params& x, const Params& y, const ExactScalar& b, const ModelParams& p);

// ---- brute force ----

// Exhaustive sum over edge states.  Nodes carry weight tables indexed by the
// mixed-radix value of their edge states (first edge most significant).
class Lattice {
 public:
  int add_edge(int dim, int fixed = -1);
  void fix(int edge, int state);
  void add_node(std::vector<int> edges, std::vector<ExactScalar> table);
  // Vertex from a matrix acting on (line 1, line 2): entry (out1*d2 + out2, in1*d2 + in2).
  void add_matrix_vertex(const ScalarMatrix& m, int in1, int in2, int out1, int out2);

  std::size_t edge_count() const { return dims_.size(); }
  std::size_t free_edge_count() const;
  ExactScalar sum() const;
  // Number of configurations with non-zero weight.
  std::size_t support_size() const;

 private:
  struct Node {
    std::vector<int> edges;
    std::vector<ExactScalar> table;
  };
  std::vector<int> dims_, fixed_;
  std::vector<Node> nodes_;
};

enum class Domain { DWBC, HTplus, HTminus, QT, Uturn, UUturn, TenVertexDWBC, ZAdomain, ZcapDomain };

std::string to_string(Domain d);
Domain parse_domain(const std::string& s);

struct DomainSpec {
  Domain kind = Domain::DWBC;
  Params rows;  // z (DWBC, HT, ten-vertex DWBC), x (U, UU, Z_A, Z_cap), w (QT)
  Params cols;  // w (DWBC, HT, ten-vertex DWBC), y (U, UU, Z_A, Z_cap)
  ExactScalar b{1}, c{1};
};

constexpr std::size_t kMaxBruteForceEdges = 60;

Lattice build_lattice(const DomainSpec& d, const ModelParams& p);
ExactScalar z_bruteforce(const DomainSpec& d, const ModelParams& p);
// Closed form for the same domain (ten-vertex DWBC: prod a(w_i) Z_IK).
ExactScalar z_closed(const DomainSpec& d, const ModelParams& p);

// ---- scalar products of the special vectors ----

ExactScalar z_ad(const ExactScalar& y, const Inhom& in, const ModelParams& p);
ExactScalar z_ad_direct(const ExactScalar& y, const Inhom& in, const ModelParams& p);

struct MixedReport {
  ExactScalar direct, subset_sum, quarter_turn;
  bool agree = false;
};
// <psi_D|psi_AD> directly, by the subset sum, and through Z_QT (even N); odd N gives zeros.
MixedReport z_mixed(const Inhom& in, const ModelParams& p);
ExactScalar z_mixed_subset_sum(const Inhom& in, const ModelParams& p);
// Direct pairing only; stays finite where the determinant entries have poles (e.g. w_j = q w_i).
ExactScalar z_mixed_direct(const Inhom& in, const ModelParams& p);

// Alternating inhomogeneities w = (x1, 1/x1, x2, 1/x2, ...), optionally followed by extra entries.
Inhom alternating(const Params& x, const Params& tail = {});

struct XiReport {
  ExactScalar direct, closed;
  bool agree = false;
};
XiReport xi_scalar(Twist t, const Params& x, const ExactScalar& b, const ModelParams& p);

// <psi_D| F prod B(z_j) |Up...Up> and <psi_D| prod B(z_j) |Up...Up>.
std::pair<ExactScalar, ExactScalar> spin_reversal_pairing(const Params& z, const Inhom& in, const ModelParams& p);

// (<chi(x)| (x) <Down|) psi_AD at b = 1/q and w_{2n+1} = 1: direct pairing and the determinant limit.
XiReport z_odd_ad(const Params& x, const ModelParams& p);

}  // namespace vertexlab::partition
