#include "doctest.h"

#include "vertexlab/matrix.hpp"
#include "vertexlab/polynomial.hpp"
#include "vertexlab/rational.hpp"
#include "vertexlab/scalar.hpp"

using namespace vertexlab::exact;

namespace {

RationalMatrix random_matrix(RationalSampler& s, std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = s.draw();
  return m;
}

Rational leibniz(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  Rational total = 0;
  do {
    Rational term = 1;
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      term *= m(i, perm[i]);
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    }
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("sampler is reproducible") {
  RationalSampler a(42), b(42);
  for (int k = 0; k < 20; ++k) CHECK(a.draw() == b.draw());
  RationalSampler c(7);
  for (int k = 0; k < 50; ++k) {
    const Rational q = c.draw_q();
    CHECK(q != 0);
    CHECK(q * q * q * q != 1);
  }
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  RationalSampler s(3, 50);
  for (std::size_t n = 1; n <= 5; ++n) {
    const RationalMatrix m = random_matrix(s, n);
    CHECK(det(m) == leibniz(m));
  }
}

TEST_CASE("determinant is multiplicative") {
  RationalSampler s(4, 30);
  const RationalMatrix a = random_matrix(s, 4), b = random_matrix(s, 4);
  CHECK(det(a * b) == det(a) * det(b));
}

TEST_CASE("pfaffian squares to the determinant") {
  RationalSampler s(5, 20);
  for (std::size_t n : {2u, 4u, 6u}) {
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) = s.draw();
        m(j, i) = -m(i, j);
      }
    const Rational pf = pfaffian(m);
    CHECK(pf * pf == det(m));
    CHECK(pfaffian_expansion(m) == pf);
  }
}

TEST_CASE("inverse and kernel") {
  RationalSampler s(6, 30);
  const RationalMatrix m = random_matrix(s, 4);
  CHECK(m * inverse(m) == RationalMatrix::identity(4));
  RationalMatrix sing = m;
  for (std::size_t j = 0; j < 4; ++j) sing(3, j) = sing(0, j) + sing(1, j);
  const auto ker = kernel(sing.transpose());
  REQUIRE(ker.size() == 1);
  CHECK(sing.apply_left(ker[0]) == std::vector<Rational>(4, Rational(0)));
}

TEST_CASE("quadratic extension field operations") {
  RationalSampler s(8, 100);
  const Extension ext = intern_extension(Rational(15));
  for (int k = 0; k < 10; ++k) {
    const ExactScalar a(s.draw(), s.draw(), s.draw(), s.draw(), ext);
    const ExactScalar b(s.draw(), s.draw(), s.draw(), s.draw(), ext);
    CHECK(a * a.inverse() == ExactScalar(1));
    CHECK((a + b) * (a - b) == a * a - b * b);
    CHECK((a / b) * b == a);
  }
  CHECK(ExactScalar::i() * ExactScalar::i() == ExactScalar(-1));
  CHECK(ExactScalar::r(ext) * ExactScalar::r(ext) == ExactScalar(15));
  CHECK(pow(ExactScalar(2), -3) == ExactScalar(Rational(1, 8)));
  CHECK(bracket(ExactScalar(2)) == ExactScalar(Rational(3, 2)));
}

TEST_CASE("generating-function polynomials") {
  const GenPoly p = GenPoly(6) + GenPoly::t();
  CHECK(p.str() == "6 + t");
  CHECK(p.at_one() == 7);
  CHECK((p * p).exact_div(p) == p);
  CHECK(p.evaluate(Rational(2)) == 8);
  const RatPoly r = RatPoly::interpolate({1, 2, 3, 4}, {7, 8, 9, 10});
  CHECK(r == RatPoly::from_genpoly_t(p));
}
