#pragma once

#include <optional>

#include "vertexlab/matrix.hpp"
#include "vertexlab/scalar.hpp"
#include "vertexlab/tensor.hpp"

namespace vertexlab::vertex {

using exact::ExactScalar;
using exact::Rational;
using exact::ScalarMatrix;
using exact::ScalarVector;

// Deformation parameter q (rational), optional s with q = s^2, and the
// extension constant r^2 = [q][q^2].
class ModelParams {
 public:
  static ModelParams from_q(const Rational& q);
  static ModelParams from_half(const Rational& s);

  const ExactScalar& q() const { return q_; }
  const ExactScalar& r() const { return r_; }  // sqrt([q][q^2])
  const ExactScalar& x() const { return x_; }  // q + 1/q
  exact::Extension extension() const { return ext_; }
  bool has_half() const { return s_.has_value(); }
  const ExactScalar& s() const;
  const Rational& q_value() const { return q_value_; }

  // The same model at q -> 1/q (r is unchanged since r^2 is invariant).
  ModelParams inverted() const;

  ExactScalar br(const ExactScalar& z) const { return exact::bracket(z); }
  ExactScalar brq(long k, const ExactScalar& z = ExactScalar(1)) const;  // [q^k z]

 private:
  Rational q_value_;
  std::optional<ExactScalar> s_;
  exact::Extension ext_ = nullptr;
  ExactScalar q_, r_, x_;
};

enum class Kind { R11, R12, R21, R22 };

int left_dim(Kind k);
int right_dim(Kind k);
Kind kind_for(int m, int n);  // m, n in {1, 2}

// Closed-form tables. Bases: {up, down}, {Up, 0, Down}; products in order.
ScalarMatrix r11(const ExactScalar& z, const ModelParams& p);
ScalarMatrix r12(const ExactScalar& z, const ModelParams& p);
ScalarMatrix r21(const ExactScalar& z, const ModelParams& p);
ScalarMatrix r22(const ExactScalar& z, const ModelParams& p);
ScalarMatrix r_table(Kind k, const ExactScalar& z, const ModelParams& p);

// Fusion constructions from the six-vertex R-matrix.
ScalarMatrix r12_fused(const ExactScalar& z, const ModelParams& p);
ScalarMatrix r21_fused(const ExactScalar& z, const ModelParams& p);
ScalarMatrix r22_fused(const ExactScalar& z, const ModelParams& p);

// Closed form, asserted equal to the fused construction.
ScalarMatrix build_r(Kind k, const ExactScalar& z, const ModelParams& p);

// Check-R = P R for the square kinds.
ScalarMatrix rcheck(Kind k, const ExactScalar& z, const ModelParams& p);

ScalarMatrix permutation(int d1, int d2);
ScalarMatrix projector_plus();
ScalarMatrix projector_minus();
ScalarMatrix basis_change_u(const ModelParams& p);
ScalarMatrix basis_change_u_inverse(const ModelParams& p);
ScalarMatrix basis_change_v(const ModelParams& p);
ScalarMatrix symmetric_projection_q();  // 3 x 4
ScalarMatrix sigma2();
ScalarMatrix sigma3();

bool check_yang_baxter(int m, int n, int pk, const ExactScalar& z, const ExactScalar& w, const ModelParams& p);
bool check_inversion_crossing(const ModelParams& p, const ExactScalar& z);
bool check_q_inversion(const ModelParams& p, const ExactScalar& z);
bool check_rcheck_unitarity(const ModelParams& p, const ExactScalar& z);
bool check_highest_weight_covector(const ModelParams& p, const ExactScalar& z);
bool check_special_points(const ModelParams& p);
bool check_projector_absorption(const ModelParams& p, const ExactScalar& z);

// model 1: [s z b]|ud> + [s z / b]|du> (needs s); model 2: the three-term state.
ScalarVector boundary_vector(int model, const ExactScalar& z, const ExactScalar& b, const ModelParams& p);
// The model-2 state assembled from two model-1 states.
ScalarVector boundary_vector_fused(const ExactScalar& z, const ExactScalar& b, const ModelParams& p);
bool check_boundary_ybe(int model, const ExactScalar& z, const ExactScalar& w, const ExactScalar& b,
                        const ModelParams& p);
bool check_fish(int model, const ExactScalar& z, const ExactScalar& b, const ModelParams& p);
bool check_boundary_ybe_and_fish(int model, const ExactScalar& z, const ExactScalar& w, const ExactScalar& b,
                                 const ModelParams& p);

}  // namespace vertexlab::vertex
