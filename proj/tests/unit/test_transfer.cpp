#include "doctest.h"

#include "vertexlab/rational.hpp"
#include "vertexlab/transfer.hpp"

using namespace vertexlab;
using exact::ExactScalar;
using exact::Rational;
using transfer::Inhom;
using transfer::Twist;
using vertex::ModelParams;

TEST_CASE("twist names") {
  CHECK(transfer::parse_twist("d") == Twist::Diagonal);
  CHECK(transfer::parse_twist("ad") == Twist::AntiDiagonal);
  CHECK_THROWS(transfer::parse_twist("x"));
}

TEST_CASE("fusion relation") {
  exact::RationalSampler s(21);
  const ModelParams p = ModelParams::from_q(s.draw_q());
  for (Twist t : {Twist::Diagonal, Twist::AntiDiagonal})
    for (int n = 1; n <= 3; ++n) {
      Inhom in;
      for (int k = 0; k < n; ++k) in.w.emplace_back(s.draw());
      CHECK(transfer::check_fusion(ExactScalar(s.draw()), t, p, in));
    }
}

TEST_CASE("transfer matrices commute") {
  const ModelParams p = ModelParams::from_q(Rational(3, 2));
  const Inhom in{{ExactScalar(Rational(2)), ExactScalar(Rational(-5, 3))}};
  for (Twist t : {Twist::Diagonal, Twist::AntiDiagonal}) {
    const auto a = transfer::transfer(2, ExactScalar(Rational(7, 4)), t, p, in);
    const auto b = transfer::transfer(2, ExactScalar(Rational(-1, 9)), t, p, in);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("Hamiltonian equals the logarithmic derivative of the transfer matrix") {
  for (Twist t : {Twist::Diagonal, Twist::AntiDiagonal})
    for (int n = 2; n <= 3; ++n)
      CHECK(transfer::hamiltonian(n, Rational(5, 2), t) == transfer::hamiltonian_from_transfer(n, ModelParams::from_q(2), t));
  CHECK_THROWS(transfer::hamiltonian(1, Rational(5, 2), Twist::Diagonal));
}

TEST_CASE("magnetisation counts up minus down") {
  // site 0 is the leading digit of the base-3 index; 0 = Up, 2 = Down
  CHECK(transfer::magnetisation(0, 2) == 2);
  CHECK(transfer::magnetisation(8, 2) == -2);
  CHECK(transfer::magnetisation(4, 2) == 0);
}

TEST_CASE("spectrum probe at x = 0") {
  // Values recorded in the decisions ledger: whole-space E = 0 multiplicities.
  CHECK(transfer::spectrum_probe(2, 0.0, Twist::Diagonal).zero_degeneracy == 3);
  CHECK(transfer::spectrum_probe(3, 0.0, Twist::Diagonal).zero_degeneracy == 7);
  CHECK(transfer::spectrum_probe(2, 0.0, Twist::AntiDiagonal).zero_degeneracy == 3);
}

TEST_CASE("spectrum probe at generic x") {
  for (Twist t : {Twist::Diagonal, Twist::AntiDiagonal}) {
    const auto r = transfer::spectrum_probe(3, 3.0, t);
    CHECK(r.nonzero_parts_coincide);
    CHECK(r.max_pair_deviation < 1e-9);
    CHECK(r.zero_in_special_sector == 1);
    CHECK(r.sectors.size() == 2);
  }
}
