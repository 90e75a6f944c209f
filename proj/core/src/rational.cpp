#include "vertexlab/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace vertexlab::exact {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (r.get_den() == 0) throw std::domain_error("zero denominator");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("negative power of zero");
    return pow(Rational(1) / base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

long default_max_denominator() {
  if (const char* env = std::getenv("VERTEXLAB_MAX_DENOM")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 2) return v;
  }
  return 10000;
}

RationalSampler::RationalSampler(std::uint64_t seed, long bound) : engine_(seed), bound_(bound) {
  if (bound_ < 2) throw std::invalid_argument("sampler bound must be at least 2");
}

Rational RationalSampler::draw_positive() {
  std::uniform_int_distribution<long> dist(1, bound_);
  long p = dist(engine_);
  long d = dist(engine_);
  return make_rational(p, d);
}

Rational RationalSampler::draw() {
  Rational r = draw_positive();
  if (std::uniform_int_distribution<int>(0, 1)(engine_) == 1) r = -r;
  return r;
}

Rational RationalSampler::draw_avoiding(const std::vector<Rational>& avoid) {
  for (;;) {
    Rational r = draw();
    if (r == 0 || r == 1 || r == -1) continue;
    if (std::find(avoid.begin(), avoid.end(), r) != avoid.end()) continue;
    return r;
  }
}

Rational RationalSampler::draw_q() {
  for (;;) {
    Rational r = draw();
    if (r != 0 && r != 1 && r != -1) return r;
  }
}

}  // namespace vertexlab::exact
