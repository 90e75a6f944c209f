#include "doctest.h"

#include "vertexlab/rational.hpp"
#include "vertexlab/vertex.hpp"

using namespace vertexlab;
using exact::ExactScalar;
using exact::Rational;
using vertex::ModelParams;

TEST_CASE("Yang-Baxter for every pair of spins") {
  exact::RationalSampler s(11);
  const ModelParams p = ModelParams::from_q(s.draw_q());
  const ExactScalar z(s.draw()), w(s.draw());
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      for (int k = 1; k <= 2; ++k) {
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(vertex::check_yang_baxter(m, n, k, z, w, p));
      }
}

TEST_CASE("R-matrix relations at a fixed point") {
  const ModelParams p = ModelParams::from_q(Rational(3));
  const ExactScalar z(Rational(5, 7));
  CHECK(vertex::check_inversion_crossing(p, z));
  CHECK(vertex::check_q_inversion(p, z));
  CHECK(vertex::check_rcheck_unitarity(p, z));
  CHECK(vertex::check_highest_weight_covector(p, z));
  CHECK(vertex::check_special_points(p));
  CHECK(vertex::check_projector_absorption(p, z));
}

TEST_CASE("tabulated spin-one matrices equal the fusion construction") {
  const ModelParams p = ModelParams::from_q(Rational(2));
  const ExactScalar z(Rational(7, 5));
  CHECK(vertex::r12(z, p) == vertex::r12_fused(z, p));
  CHECK(vertex::r21(z, p) == vertex::r21_fused(z, p));
  CHECK(vertex::r22(z, p) == vertex::r22_fused(z, p));
}

TEST_CASE("boundary states") {
  const ModelParams ph = ModelParams::from_half(Rational(3, 2));
  const ExactScalar z(Rational(5, 3)), w(Rational(-2, 7)), b(Rational(11, 4));
  for (int model = 1; model <= 2; ++model) CHECK(vertex::check_boundary_ybe_and_fish(model, z, w, b, ph));
}
