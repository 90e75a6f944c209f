#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace vertexlab::exact {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

Integer binomial(long n, long k);
Rational pow(const Rational& base, long exponent);

// Default bound for random numerators and denominators; VERTEXLAB_MAX_DENOM
// overrides it.
long default_max_denominator();

// Draws p/q' with p, q' uniform in [1, bound] and a uniform sign.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long bound = default_max_denominator());

  Rational draw();
  Rational draw_positive();
  // A draw different from every value in `avoid` and from 0, 1, -1.
  Rational draw_avoiding(const std::vector<Rational>& avoid);
  // A value q suitable as the deformation parameter: q^4 != 1 and q != 0.
  Rational draw_q();
  std::uint64_t next_seed() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  long bound_;
};

}  // namespace vertexlab::exact
