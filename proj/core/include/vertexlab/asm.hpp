#pragma once

#include <string>
#include <vector>

#include "vertexlab/matrix.hpp"
#include "vertexlab/polynomial.hpp"
#include "vertexlab/scalar.hpp"

// `asm` is a keyword, hence the plural.
namespace vertexlab::asms {

using exact::ExactScalar;
using exact::GenPoly;
using exact::Rational;

enum class AsmClass { Plain, HT, QT, VS, UU, VHP };

std::string to_string(AsmClass c);
// plain, ht, qt, vs, uu, vhp
AsmClass parse_class(const std::string& s);

// Size is the number of rows: N (Plain), 2N (HT, QT), 2n+1 (VS), 2n (UU), 4n+1 (VHP).
int max_size(AsmClass c);
bool size_allowed(AsmClass c, int size);

struct AsmMatrix {
  AsmClass cls = AsmClass::Plain;
  int rows = 0, cols = 0;
  std::vector<int> entries;  // row-major; the VHP centre is stored as -1 (its horizontal reading)

  int at(int i, int j) const { return entries[static_cast<std::size_t>(i * cols + j)]; }
  std::string str() const;
};

// Full validity test for the class rules (alternation, sums, symmetry or U-turn reading).
bool is_valid(const AsmMatrix& m);

struct Counters {
  int k = 0;        // negative entries in the fundamental domain
  int m = 0;        // UU: odd rows with an odd number of non-zeros; HT: non-zeros in the upper-left quadrant
  int m_prime = 0;  // UU: column pairs whose second column has an odd number of non-zeros
};
Counters counters(const AsmMatrix& m);

// Throws std::length_error above max_size and std::invalid_argument for sizes the class cannot have.
std::vector<AsmMatrix> enumerate(AsmClass c, int size);

// Sum of t^k (UU: t^k y^m z^m').
GenPoly genfun(AsmClass c, int size);
// Half-turn symmetric 2N x 2N matrices weighted by (-1)^m t^k.
GenPoly genfun_ht_minus(int size);

enum class ClosedForm { ZADhom, AV, AQT1, AQT2, AUU2, AUU2Tilde, AVHP2 };

std::string to_string(ClosedForm f);
ClosedForm parse_closed_form(const std::string& s);

// ZADhom(N) is returned as y^N Z_AD(y), a polynomial in t = x^2 and y with only even powers of y.
// A_QT1 and A_QT2 take n for the 4n x 4n class; the others take n as in their determinant size.
// A_UU2 uses all of t, y, z; the rest are polynomials in t alone.
GenPoly closed_form(ClosedForm f, int n);

// The antisymmetric 2n x 2n matrices of the two quarter-turn pfaffians and their values.
exact::Matrix<Rational> a_qt1_matrix(int n, const Rational& x);
exact::Matrix<Rational> a_qt2_matrix(int n, const Rational& q);
Rational a_qt1_at(int n, const Rational& x);
Rational a_qt2_at(int n, const Rational& q);

// det(y^-1 delta_ij + y sum_k C(i,k) C(j,k) x^{2(j-k)}) evaluated entrywise, without the polynomial route.
ExactScalar z_ad_hom(int n_sites, const ExactScalar& x, const ExactScalar& y);

// p(t, y, z) with exact (possibly complex) arguments.
ExactScalar evaluate(const GenPoly& p, const ExactScalar& t, const ExactScalar& y = 1, const ExactScalar& z = 1);

// lim_{y -> oo} y^{-n} p(t, y, 1/y).
GenPoly vhp_limit(const GenPoly& p, int n);

struct Check {
  std::string id;
  std::string lhs, rhs;
  bool pass = false;
};

struct LinkReport {
  std::vector<Check> checks;
  bool all() const;
};

// Sum rules, quarter-turn pairing, special components of the zero-energy states and the
// homogeneous partition-function links, for N sites at one rational q.
LinkReport check_kuperberg_links(int n_sites, const Rational& q);

// det L, the L L^t series identity, the product law L(a,b) L(a0,b0) = L(a',b') and the confluent
// divided difference at N = 2.
LinkReport l_matrix_checks(const Rational& alpha, const Rational& beta, const Rational& alpha2, const Rational& beta2,
                           int n);

exact::Matrix<Rational> l_matrix(const Rational& alpha, const Rational& beta, int n);

}  // namespace vertexlab::asms
