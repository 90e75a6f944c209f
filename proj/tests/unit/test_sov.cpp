#include "doctest.h"

#include "vertexlab/rational.hpp"
#include "vertexlab/sov.hpp"

using namespace vertexlab;
using exact::ExactScalar;
using exact::Rational;
using transfer::Inhom;
using transfer::Twist;
using vertex::ModelParams;

namespace {
Inhom inhom(std::initializer_list<Rational> ws) {
  Inhom in;
  for (const Rational& w : ws) in.w.emplace_back(w);
  return in;
}
}  // namespace

TEST_CASE("separated-variables structure") {
  const ModelParams p = ModelParams::from_q(Rational(2));
  CHECK(sov::check_sov_structure(p, inhom({3, Rational(5, 2)}), ExactScalar(Rational(7, 3))).all());
  CHECK(sov::check_sov_structure(p, inhom({3, Rational(5, 2), Rational(-4, 7)}), ExactScalar(Rational(7, 3))).all());
}

TEST_CASE("anti-diagonal vector: separated variables against the kernel") {
  exact::RationalSampler s(31);
  const ModelParams p = ModelParams::from_q(s.draw_q());
  for (int n = 1; n <= 3; ++n) {
    Inhom in;
    for (int k = 0; k < n; ++k) in.w.emplace_back(s.draw());
    CHECK(sov::psi_ad(p, in, sov::Method::Sov) == sov::psi_ad(p, in, sov::Method::Kernel));
  }
}

TEST_CASE("null vectors") {
  const ModelParams p = ModelParams::from_q(Rational(3, 2));
  const Inhom in = inhom({2, Rational(-7, 3), Rational(5, 4)});
  for (Twist t : {Twist::Diagonal, Twist::AntiDiagonal})
    CHECK(sov::check_null_vector(t, sov::psi(t, p, in), ExactScalar(Rational(9, 5)), p, in));
}

TEST_CASE("homogeneous anti-diagonal vector when q hits the kernel probe point") {
  // The kernel route once probed T1 at z0 = 7/3 only, which is a special point for q = 7/3.
  const ModelParams p = ModelParams::from_q(Rational(7, 3));
  const Inhom in = Inhom::homogeneous(3);
  const auto v = sov::psi(Twist::AntiDiagonal, p, in);
  CHECK(sov::check_null_vector(Twist::AntiDiagonal, v, ExactScalar(Rational(-3, 11)), p, in));
}

TEST_CASE("zero-energy state of the diagonal chain at N = 2") {
  const auto phi = sov::phi(Twist::Diagonal, 2, ModelParams::from_q(Rational(2)));
  CHECK(phi[sov::parse_pattern("UD")] == ExactScalar(1));
  CHECK(phi[sov::parse_pattern("DU")] == ExactScalar(1));
  CHECK(exact::dot(phi, phi) == ExactScalar(2));
}

TEST_CASE("eigenvector properties and uniqueness") {
  const ModelParams p = ModelParams::from_q(Rational(2));
  const Inhom in = inhom({3, 5, Rational(7, 2)});
  CHECK(sov::check_eigenvector_properties(Twist::Diagonal, p, in).all());
  CHECK(sov::check_eigenvector_properties(Twist::AntiDiagonal, p, in).all());
  CHECK(sov::diagonal_null_dimension(p, inhom({3, 5, Rational(7, 2), Rational(11, 3)}), ExactScalar(Rational(13, 7))) == 1);
}

TEST_CASE("zero-energy components are polynomial in x") {
  const std::vector<Rational> qs{2, 3, 4, 5, 6, 7, 8, 9};
  CHECK(sov::phi_polynomial_in_x(Twist::Diagonal, 3, qs).consistent);
  CHECK(sov::phi_polynomial_in_x(Twist::AntiDiagonal, 2, qs).consistent);
}

TEST_CASE("pattern parsing") {
  CHECK(sov::parse_pattern("UUU") == 0);
  CHECK(sov::pattern_string(sov::parse_pattern("U0D"), 3) == "U0D");
  CHECK_THROWS(sov::parse_pattern("UX"));
}
