#pragma once

#include <string>
#include <vector>

#include "vertexlab/polynomial.hpp"
#include "vertexlab/transfer.hpp"

namespace vertexlab::sov {

using exact::ExactScalar;
using exact::Rational;
using exact::ScalarMatrix;
using exact::ScalarVector;
using transfer::Inhom;
using transfer::Twist;
using vertex::ModelParams;

using Heights = std::vector<int>;  // each entry in {0, 1, 2}

std::vector<Heights> all_heights(int n);
// Heights with entries restricted to {0, 2}.
std::vector<Heights> even_heights(int n);

// ||h>> = prod_j prod_{k<h_j} B(q^{1-k} w_j) / a(q^{1-k} w_j) |Up...Up>.
ScalarVector height_state(const Heights& h, const ModelParams& p, const Inhom& in);
// <<h|| = <Up...Up| prod_j prod_{k<h_j} C(q^{1-k} w_j) / d(q^{-k} w_j), returned as a row vector.
ScalarVector dual_height_state(const Heights& h, const ModelParams& p, const Inhom& in);
// Closed form of <<h||h>>.
ExactScalar height_norm(const Heights& h, const ModelParams& p, const Inhom& in);

struct SovReport {
  bool d_eigen = false;
  bool b_hopping = false;
  bool c_hopping = false;
  bool dual_actions = false;
  bool scalar_products = false;
  bool completeness = false;
  bool all() const { return d_eigen && b_hopping && c_hopping && dual_actions && scalar_products && completeness; }
};
SovReport check_sov_structure(const ModelParams& p, const Inhom& in, const ExactScalar& z);

ScalarVector highest_weight(int n);  // |Up ... Up>

// prod_j B(w_j) |Up...Up> and <Up...Up| prod_j C(w_j).
ScalarVector psi_d(const ModelParams& p, const Inhom& in);
ScalarVector psi_d_dual(const ModelParams& p, const Inhom& in);

enum class Method { Sov, Kernel };
// Null vector of the anti-diagonal T1, normalised by <Up...Up|psi> = 1.
ScalarVector psi_ad(const ModelParams& p, const Inhom& in, Method m);
ScalarVector psi_ad_dual_sov(const ModelParams& p, const Inhom& in);
// SoV projections of the right null vector and of the left one.
ExactScalar psi_ad_projection(const Heights& h, const ModelParams& p, const Inhom& in);
ExactScalar psi_ad_dual_projection(const Heights& h, const ModelParams& p, const Inhom& in);

ScalarVector psi(Twist t, const ModelParams& p, const Inhom& in);
// Dimension of the kernel of the diagonal T1(z) on the M = 0 subspace; 1 means psi_D is the unique null vector there.
int diagonal_null_dimension(const ModelParams& p, const Inhom& in, const ExactScalar& z);

// T1 psi = 0 and T2 psi = theta2 psi at spectral parameter z.
bool check_null_vector(Twist t, const ScalarVector& v, const ExactScalar& z, const ModelParams& p, const Inhom& in);

struct EigenvectorReport {
  bool transposition = false;
  bool q_inversion = false;
  bool exchange = false;
  bool translation = false;
  bool symmetries = false;
  bool all() const { return transposition && q_inversion && exchange && translation && symmetries; }
};
EigenvectorReport check_eigenvector_properties(Twist t, const ModelParams& p, const Inhom& in);

// Homogeneous zero-energy states. phi_D carries the normalisation ([q][q^2])^{-N/2} [q]^{-N(N-1)};
// phi_AD has Up...Up component 1.
ScalarVector phi(Twist t, int n, const ModelParams& p);

// Components of phi at several q, interpolated as polynomials in x = q + 1/q.
struct PolynomialFit {
  std::vector<exact::RatPoly> components;
  long max_degree = 0;
  bool consistent = false;  // every interpolant has degree below the number of points minus one
};
PolynomialFit phi_polynomial_in_x(Twist t, int n, const std::vector<Rational>& qs);

// Index of a configuration written with U/0/D (or the arrows), site 0 first.
std::size_t parse_pattern(const std::string& pattern);
std::string pattern_string(std::size_t index, int n);

}  // namespace vertexlab::sov
