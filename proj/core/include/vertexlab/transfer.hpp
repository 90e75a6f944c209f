#pragma once

#include <string>
#include <vector>

#include "vertexlab/matrix.hpp"
#include "vertexlab/tensor.hpp"
#include "vertexlab/vertex.hpp"

namespace vertexlab::transfer {

using exact::ExactScalar;
using exact::Rational;
using exact::ScalarMatrix;
using exact::ScalarVector;
using vertex::ModelParams;

enum class Twist { Diagonal, AntiDiagonal };

Twist parse_twist(const std::string& s);  // "d"/"diagonal", "ad"/"antidiagonal"
std::string to_string(Twist t);

struct Inhom {
  std::vector<ExactScalar> w;

  static Inhom homogeneous(int n) { return Inhom{std::vector<ExactScalar>(static_cast<std::size_t>(n), ExactScalar(1))}; }
  int N() const { return static_cast<int>(w.size()); }
  bool pairwise_distinct() const;
};

ScalarMatrix omega1(Twist t);
ScalarMatrix omega2(Twist t);
// Q U (Omega1 x Omega1) U^-1 Q^t, built from the fusion matrices.
ScalarMatrix omega2_fused(Twist t, const ModelParams& p);

// a(z) = prod [q z / w_i], d(z) = prod [z / (q w_i)].
ExactScalar a_fn(const ExactScalar& z, const ModelParams& p, const Inhom& in);
ExactScalar d_fn(const ExactScalar& z, const ModelParams& p, const Inhom& in);
// Eigenvalue of T2 on vectors killed by T1: -a(qz) d(z).
ExactScalar theta2_special(const ExactScalar& z, const ModelParams& p, const Inhom& in);

// Monodromy of the ten-vertex model, R_{a,N}(z/(q w_N)) ... R_{a,1}(z/(q w_1)), acting on vectors.
// Blocks are indexed by auxiliary states: A = (0,0), B = (0,1), C = (1,0), D = (1,1).
class Monodromy {
 public:
  Monodromy(const ExactScalar& z, const ModelParams& p, const Inhom& in);

  int N() const { return n_; }
  ScalarVector apply(int row, int col, const ScalarVector& v) const;
  // Row vector times the block.
  ScalarVector apply_left(const ScalarVector& v, int row, int col) const;
  ScalarMatrix block(int row, int col) const;

  ScalarVector A(const ScalarVector& v) const { return apply(0, 0, v); }
  ScalarVector B(const ScalarVector& v) const { return apply(0, 1, v); }
  ScalarVector C(const ScalarVector& v) const { return apply(1, 0, v); }
  ScalarVector D(const ScalarVector& v) const { return apply(1, 1, v); }

 private:
  int n_;
  exact::TensorShape shape_;
  std::vector<ScalarMatrix> r_;  // r_[j] acts on (aux, site j)
};

ScalarVector apply_transfer1(const ExactScalar& z, Twist t, const ModelParams& p, const Inhom& in,
                             const ScalarVector& v);
// Twisted trace over the spin-one auxiliary space.
ScalarVector apply_transfer2_trace(const ExactScalar& z, Twist t, const ModelParams& p, const Inhom& in,
                                   const ScalarVector& v);
// T1(z) T1(qz) - a(qz) d(z).
ScalarVector apply_transfer2_fusion(const ExactScalar& z, Twist t, const ModelParams& p, const Inhom& in,
                                    const ScalarVector& v);

// Dense transfer matrix; level 2 is computed both ways and compared.
ScalarMatrix transfer(int level, const ExactScalar& z, Twist t, const ModelParams& p, const Inhom& in);
bool check_fusion(const ExactScalar& z, Twist t, const ModelParams& p, const Inhom& in);

// Spin-one chain built from the coupling constants; exact over Q(i).
ScalarMatrix hamiltonian(int n, const Rational& x, Twist t);
// N + ([q^2]/2) T2(1)^-1 T2'(1) from the homogeneous T2 with Laurent-polynomial entries.
ScalarMatrix hamiltonian_from_transfer(int n, const ModelParams& p, Twist t);

struct SymmetryOps {
  ScalarMatrix M, F, Sprime, parity;  // parity = (-1)^M
};
SymmetryOps symmetry_ops(int n, Twist t);
ScalarMatrix translation(int n);  // S |s1 ... sN> = |sN s1 ... s_{N-1}>
int magnetisation(std::size_t index, int n);

ScalarMatrix commutator(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix anticommutator(const ScalarMatrix& a, const ScalarMatrix& b);

struct Sector {
  std::string label;
  std::vector<double> eigenvalues;  // ascending
  int zero_degeneracy = 0;
};

struct SpectrumReport {
  int N = 0;
  double x = 0;
  Twist twist = Twist::Diagonal;
  std::vector<Sector> sectors;     // the two Z2 sectors (F or (-1)^M)
  bool nonzero_parts_coincide = false;
  double max_pair_deviation = 0;   // relative to the spectral diameter
  double min_eigenvalue = 0;
  int zero_degeneracy = 0;         // whole space
  int zero_in_special_sector = 0;  // M = 0, F = 1 (diagonal); (-1)^M = F = (-1)^N (anti-diagonal)
  double tolerance = 0;
};

// Floating-point spectra; H(x) = H0 + x H1 + x^2 H2 from exact coefficient matrices.
SpectrumReport spectrum_probe(int n, double x, Twist t, double rel_tol = 1e-7);

}  // namespace vertexlab::transfer
