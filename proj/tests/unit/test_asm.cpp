#include "doctest.h"

#include <set>

#include "vertexlab/asm.hpp"

using namespace vertexlab;
using namespace vertexlab::asms;

namespace {
GenPoly T(long c, int e) { return GenPoly::monomial(exact::Integer(c), {e, 0, 0}); }
}  // namespace

// Frozen from the row-by-row enumerator; the plain counts are OEIS A005130.
TEST_CASE("class counts") {
  const std::vector<std::tuple<AsmClass, int, std::size_t>> counts{
      {AsmClass::Plain, 1, 1}, {AsmClass::Plain, 2, 2},   {AsmClass::Plain, 3, 7},   {AsmClass::Plain, 4, 42},
      {AsmClass::Plain, 5, 429}, {AsmClass::Plain, 6, 7436}, {AsmClass::HT, 2, 2},   {AsmClass::HT, 4, 10},
      {AsmClass::HT, 6, 140},  {AsmClass::HT, 8, 5544},   {AsmClass::QT, 4, 2},      {AsmClass::QT, 8, 40},
      {AsmClass::VS, 3, 1},    {AsmClass::VS, 5, 3},      {AsmClass::VS, 7, 26},     {AsmClass::UU, 2, 5},
      {AsmClass::UU, 4, 198},  {AsmClass::VHP, 5, 1},
  };
  for (const auto& [c, size, n] : counts) {
    CAPTURE(to_string(c));
    CAPTURE(size);
    CHECK(enumerate(c, size).size() == n);
  }
}

TEST_CASE("enumeration yields distinct valid matrices") {
  for (AsmClass c : {AsmClass::Plain, AsmClass::HT, AsmClass::QT, AsmClass::VS, AsmClass::UU, AsmClass::VHP})
    for (int s = 1; s <= std::min(max_size(c), 6); ++s) {
      if (!size_allowed(c, s)) continue;
      std::set<std::vector<int>> seen;
      for (const AsmMatrix& m : enumerate(c, s)) {
        CHECK(is_valid(m));
        CHECK(seen.insert(m.entries).second);
      }
    }
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(enumerate(AsmClass::Plain, 7), std::length_error);
  CHECK_THROWS_AS(enumerate(AsmClass::HT, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate(AsmClass::VHP, 9), std::length_error);
  CHECK_THROWS(parse_class("diagonal"));
}

TEST_CASE("t-enumerations") {
  CHECK(genfun(AsmClass::Plain, 3) == GenPoly(6) + GenPoly::t());
  CHECK(genfun(AsmClass::Plain, 4) == GenPoly(24) + T(16, 1) + T(2, 2));
  CHECK(genfun(AsmClass::Plain, 5) == GenPoly(120) + T(200, 1) + T(94, 2) + T(14, 3) + T(1, 4));
  CHECK(genfun(AsmClass::VS, 5) == GenPoly(2) + GenPoly::t());
  CHECK(genfun(AsmClass::VS, 7) == GenPoly(6) + T(13, 1) + T(6, 2) + T(1, 3));
  CHECK(genfun(AsmClass::HT, 4) == GenPoly(8) + T(2, 1));
  CHECK(genfun(AsmClass::HT, 6) == GenPoly(48) + T(68, 1) + T(22, 2) + T(2, 3));
  CHECK(genfun(AsmClass::QT, 8) == GenPoly(12) + T(22, 1) + T(6, 2));
  CHECK(genfun_ht_minus(4) == T(-2, 1));
  CHECK(genfun_ht_minus(8) == T(216, 2) + T(288, 3) + T(138, 4) + T(28, 5) + T(2, 6));
}

TEST_CASE("closed forms") {
  CHECK(closed_form(ClosedForm::AQT1, 2) == GenPoly(3) + GenPoly::t());
  CHECK(closed_form(ClosedForm::AQT1, 3) == GenPoly(15) + T(25, 1) + T(8, 2) + T(1, 3));
  CHECK(closed_form(ClosedForm::AQT2, 2) == GenPoly(4) + T(6, 1));
  CHECK(closed_form(ClosedForm::AUU2Tilde, 3) == GenPoly(1) + T(5, 1) + T(4, 2) + T(1, 3));
  CHECK(closed_form(ClosedForm::AVHP2, 3) == GenPoly(1) + T(8, 1) + T(12, 2) + T(5, 3));
  CHECK(closed_form(ClosedForm::ZADhom, 2).str() == (GenPoly(1) + GenPoly::monomial(2, {0, 2, 0}) +
                                                     GenPoly::monomial(1, {1, 2, 0}) + GenPoly::monomial(1, {0, 4, 0}))
                                                        .str());
  for (int n = 0; n <= 3; ++n) CHECK(closed_form(ClosedForm::AV, n) == genfun(AsmClass::VS, 2 * n + 1));
  for (int n = 1; n <= 2; ++n) {
    CHECK(genfun(AsmClass::QT, 4 * n) == closed_form(ClosedForm::AQT1, n) * closed_form(ClosedForm::AQT2, n));
    CHECK(genfun(AsmClass::UU, 2 * n) == closed_form(ClosedForm::AV, n) * closed_form(ClosedForm::AUU2, n));
    CHECK(vhp_limit(closed_form(ClosedForm::AUU2, n), n) == closed_form(ClosedForm::AVHP2, n));
  }
  CHECK(parse_closed_form(to_string(ClosedForm::AUU2Tilde)) == ClosedForm::AUU2Tilde);
}

TEST_CASE("UU weights of the 4 x 4 example") {
  AsmMatrix m{AsmClass::UU, 4, 4, {1, -1, 0, 1, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1}};
  REQUIRE(is_valid(m));
  const Counters c = counters(m);
  CHECK(c.k == 2);
  CHECK(c.m == 1);
  CHECK(c.m_prime == 1);
}

TEST_CASE("pfaffian evaluations") {
  CHECK(a_qt1_at(1, 5) == 1);
  CHECK(a_qt1_at(2, 3) == 12);  // 3 + t at t = 9
  CHECK(a_qt2_at(1, 2) == 2);
  const auto m = a_qt2_matrix(2, exact::Rational(3));
  CHECK(m.transpose() == -m);
}

TEST_CASE("entrywise Z_AD against the polynomial") {
  const ExactScalar x(exact::Rational(5, 2)), y(exact::Rational(3, 7));
  for (int n = 1; n <= 4; ++n)
    CHECK(z_ad_hom(n, x, y) * exact::pow(y, n) == evaluate(closed_form(ClosedForm::ZADhom, n), x * x, y));
}

TEST_CASE("sum rules and components at q = 2") {
  for (int n = 1; n <= 4; ++n) {
    const LinkReport r = check_kuperberg_links(n, 2);
    for (const Check& c : r.checks) {
      CAPTURE(n);
      CAPTURE(c.id);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("L-matrix identities") {
  CHECK(l_matrix_checks(3, exact::Rational(-2, 5), exact::Rational(7, 4), 2, 4).all());
  const exact::Rational q = 3, ap = 1 / (q * q - 1), am = 1 / (1 / (q * q) - 1);
  CHECK(l_matrix_checks(ap, q, am, 1 / q, 4).all());
  // lower triangular with diagonal (alpha beta)^i
  CHECK(exact::det(l_matrix(3, 5, 4)) == exact::pow(exact::Rational(15), 6));
}
