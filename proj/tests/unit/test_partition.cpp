#include "doctest.h"

#include "vertexlab/partition.hpp"
#include "vertexlab/rational.hpp"

using namespace vertexlab;
using namespace vertexlab::partition;
using exact::ExactScalar;
using exact::Rational;

namespace {
ExactScalar R(long a, long b = 1) { return ExactScalar(Rational(a, b)); }
}  // namespace

TEST_CASE("closed forms against exhaustive summation") {
  const ModelParams p = ModelParams::from_q(Rational(2));
  const ModelParams ph = ModelParams::from_half(Rational(3, 2));
  const std::vector<std::pair<DomainSpec, const ModelParams*>> cases{
      {{Domain::DWBC, {R(3), R(7, 2), R(13, 5)}, {R(5), R(11, 3), R(17, 7)}}, &p},
      {{Domain::HTplus, {R(3), R(7, 2)}, {R(5), R(11, 3)}}, &p},
      {{Domain::HTminus, {R(3), R(7, 2)}, {R(5), R(11, 3)}}, &p},
      {{Domain::QT, {R(3), R(7, 2), R(5), R(11, 3)}, {}}, &p},
      {{Domain::Uturn, {R(3), R(7, 2)}, {R(5), R(11, 3)}, R(7)}, &p},
      {{Domain::UUturn, {R(3), R(7, 2)}, {R(5), R(11, 3)}, R(7), R(13)}, &p},
      {{Domain::TenVertexDWBC, {R(3), R(7, 2)}, {R(5), R(11, 3)}}, &p},
      {{Domain::ZAdomain, {R(3)}, {R(5), R(7)}, R(11)}, &p},
      {{Domain::ZcapDomain, {R(3), R(7, 2)}, {R(5), R(11, 3)}, R(11)}, &ph},
  };
  for (const auto& [d, params] : cases) {
    CAPTURE(to_string(d.kind));
    CHECK(z_bruteforce(d, *params) == z_closed(d, *params));
  }
}

TEST_CASE("Z_A at generic n = 2 and the wheel condition") {
  const ModelParams p = ModelParams::from_q(Rational(2));
  const Params x{R(3), R(7, 2)};
  CHECK(z_bruteforce({Domain::ZAdomain, x, {R(5, 3), R(13, 3), R(17, 5), R(11)}, R(11)}, p) ==
        z_a(x, {R(5, 3), R(13, 3), R(17, 5), R(11)}, R(11), p));
  // (x1 / q, x1, q x1) among the y
  CHECK(z_bruteforce({Domain::ZAdomain, x, {R(3, 2), R(3), R(6), R(11)}, R(11)}, p).is_zero());
}

TEST_CASE("Z_A via the cap domain") {
  const ModelParams ph = ModelParams::from_half(Rational(3, 2));
  CHECK(z_a({R(3)}, {R(5), R(7)}, R(11), ph) == z_a_via_cap({R(3)}, {R(5), R(7)}, R(11), ph));
}

TEST_CASE("overlap determinant against the direct sum") {
  const ModelParams p = ModelParams::from_q(Rational(2));
  const Inhom in{{R(3), R(5), R(7, 2), R(11, 3)}};
  CHECK(z_ad(R(7), in, p) == z_ad_direct(R(7), in, p));
}

TEST_CASE("mixed scalar product") {
  const ModelParams p = ModelParams::from_q(Rational(2));
  const Inhom in{{R(3), R(5), R(7, 2), R(11, 3)}};
  const auto m = z_mixed(in, p);
  CHECK(m.agree);
  // odd under w1 -> -w1
  const Inhom neg{{R(-3), R(5), R(7, 2), R(11, 3)}};
  CHECK(z_mixed_subset_sum(neg, p) == -m.subset_sum);
  // odd N vanishes
  CHECK(z_mixed({{R(3), R(5), R(7, 2)}}, p).direct.is_zero());
}

TEST_CASE("recurrence at w4 = q w3") {
  const ModelParams p = ModelParams::from_q(Rational(2));
  const Inhom full{{R(3), R(5), R(7, 2), R(7)}}, head{{R(3), R(5)}};
  ExactScalar f = p.brq(1) * p.brq(2);
  for (int i = 0; i < 2; ++i) f *= p.brq(-1, R(7, 2) / full.w[i]) * p.brq(2, R(7, 2) / full.w[i]);
  CHECK(z_mixed_direct(full, p) / z_mixed_direct(head, p) == f * f);
}

TEST_CASE("boundary overlaps") {
  const ModelParams p = ModelParams::from_q(Rational(2));
  for (Twist t : {Twist::Diagonal, Twist::AntiDiagonal}) {
    CHECK(xi_scalar(t, {R(3)}, R(5), p).agree);
    CHECK(xi_scalar(t, {R(3), R(7, 2)}, R(5, 3), p).agree);
  }
  CHECK(z_odd_ad({}, p).agree);
  CHECK(z_odd_ad({R(3)}, p).agree);
  CHECK(z_odd_ad({R(3), R(7, 2)}, p).agree);
}

TEST_CASE("spin reversal and y inversion") {
  const ModelParams p = ModelParams::from_q(Rational(2));
  const auto sr = spin_reversal_pairing({R(13), R(-2, 9), R(17, 4)}, {{R(3), R(5), R(7, 2)}}, p);
  CHECK(sr.first == sr.second);
  const Params x{R(3)}, y{R(5), R(7)}, yi{R(1, 5), R(7)};
  CHECK(z_a(x, yi, R(11), p) == exact::bracket(R(55)) / exact::bracket(R(11, 5)) * z_a(x, y, R(11), p));
}

TEST_CASE("domain names round-trip") {
  for (Domain d : {Domain::DWBC, Domain::HTplus, Domain::HTminus, Domain::QT, Domain::Uturn, Domain::UUturn,
                   Domain::TenVertexDWBC, Domain::ZAdomain, Domain::ZcapDomain})
    CHECK(parse_domain(to_string(d)) == d);
  CHECK_THROWS(parse_domain("nope"));
}
