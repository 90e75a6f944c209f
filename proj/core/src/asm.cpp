#include "vertexlab/asm.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "vertexlab/matrix.hpp"
#include "vertexlab/partition.hpp"
#include "vertexlab/sov.hpp"

namespace vertexlab::asms {

using exact::binomial;
using exact::Integer;
using exact::Matrix;

namespace {

// One ASM-type row as bit masks (bit j = column j).
struct Row {
  unsigned plus = 0, minus = 0;
};

std::vector<Row> asm_rows(int width) {
  std::vector<Row> out;
  for (unsigned s = 1; s < (1u << width); ++s) {
    if (std::popcount(s) % 2 == 0) continue;
    Row r;
    bool positive = true;
    for (int j = 0; j < width; ++j)
      if (s >> j & 1u) {
        (positive ? r.plus : r.minus) |= 1u << j;
        positive = !positive;
      }
    out.push_back(r);
  }
  return out;
}

unsigned mirror(unsigned mask, int width) {
  unsigned out = 0;
  for (int j = 0; j < width; ++j)
    if (mask >> j & 1u) out |= 1u << (width - 1 - j);
  return out;
}

int entry(const Row& r, int j) { return (r.plus >> j & 1u) ? 1 : (r.minus >> j & 1u) ? -1 : 0; }

// Row-by-row search keeping every column partial sum in {0, 1}; `state` marks columns at 1.
// `candidates(i)` lists the rows allowed at position i.
void row_search(const std::function<const std::vector<Row>&(int)>& candidates, int nrows, int i, unsigned state,
                std::vector<Row>& chosen, const std::function<void(unsigned, const std::vector<Row>&)>& leaf) {
  if (i == nrows) {
    leaf(state, chosen);
    return;
  }
  for (const Row& r : candidates(i)) {
    if ((r.plus & state) != 0 || (r.minus & ~state) != 0) continue;
    chosen.push_back(r);
    row_search(candidates, nrows, i + 1, (state | r.plus) & ~r.minus, chosen, leaf);
    chosen.pop_back();
  }
}

// Entries in {-1, 0, 1}, partial sums in {0, 1}, total 1.
bool sequence_ok(const std::vector<int>& s) {
  int sum = 0;
  for (int v : s) {
    if (v < -1 || v > 1) return false;
    sum += v;
    if (sum < 0 || sum > 1) return false;
  }
  return sum == 1;
}

AsmMatrix blank(AsmClass c, int rows, int cols) {
  AsmMatrix m;
  m.cls = c;
  m.rows = rows;
  m.cols = cols;
  m.entries.assign(static_cast<std::size_t>(rows * cols), 0);
  return m;
}

int& cell(AsmMatrix& m, int i, int j) { return m.entries[static_cast<std::size_t>(i * m.cols + j)]; }

bool rows_and_columns_ok(const AsmMatrix& m) {
  for (int i = 0; i < m.rows; ++i) {
    std::vector<int> s;
    for (int j = 0; j < m.cols; ++j) s.push_back(m.at(i, j));
    if (!sequence_ok(s)) return false;
  }
  for (int j = 0; j < m.cols; ++j) {
    std::vector<int> s;
    for (int i = 0; i < m.rows; ++i) s.push_back(m.at(i, j));
    if (!sequence_ok(s)) return false;
  }
  return true;
}

void require_size(AsmClass c, int size) {
  if (size > max_size(c))
    throw std::length_error("size " + std::to_string(size) + " too large for " + to_string(c) + " enumeration (max " +
                            std::to_string(max_size(c)) + ")");
  if (!size_allowed(c, size))
    throw std::invalid_argument("size " + std::to_string(size) + " is not a " + to_string(c) + " size");
}

std::vector<AsmMatrix> enumerate_plain(int n) {
  const std::vector<Row> rows = asm_rows(n);
  const unsigned full = (1u << n) - 1;
  std::vector<AsmMatrix> out;
  std::vector<Row> chosen;
  row_search([&](int) -> const std::vector<Row>& { return rows; }, n, 0, 0, chosen,
             [&](unsigned state, const std::vector<Row>& rs) {
               if (state != full) return;
               AsmMatrix m = blank(AsmClass::Plain, n, n);
               for (int i = 0; i < n; ++i)
                 for (int j = 0; j < n; ++j) cell(m, i, j) = entry(rs[static_cast<std::size_t>(i)], j);
               out.push_back(std::move(m));
             });
  return out;
}

// Top halves whose column sums pair up under the half turn; the bottom half is the rotated top.
std::vector<AsmMatrix> enumerate_half_turn(AsmClass tag, int size) {
  const int half = size / 2;
  const std::vector<Row> rows = asm_rows(size);
  std::vector<AsmMatrix> out;
  std::vector<Row> chosen;
  row_search([&](int) -> const std::vector<Row>& { return rows; }, half, 0, 0, chosen,
             [&](unsigned state, const std::vector<Row>& rs) {
               for (int c = 0; c < size; ++c)
                 if (((state >> c & 1u) + (state >> (size - 1 - c) & 1u)) != 1) return;
               AsmMatrix m = blank(tag, size, size);
               for (int i = 0; i < half; ++i)
                 for (int j = 0; j < size; ++j) {
                   const int v = entry(rs[static_cast<std::size_t>(i)], j);
                   cell(m, i, j) = v;
                   cell(m, size - 1 - i, size - 1 - j) = v;
                 }
               if (tag == AsmClass::QT) {
                 for (int i = 0; i < size; ++i)
                   for (int j = 0; j < size; ++j)
                     if (m.at(i, j) != m.at(size - 1 - j, i)) return;
               }
               out.push_back(std::move(m));
             });
  return out;
}

std::vector<AsmMatrix> enumerate_vs(int size) {
  std::vector<Row> rows;
  for (const Row& r : asm_rows(size))
    if (mirror(r.plus, size) == r.plus && mirror(r.minus, size) == r.minus) rows.push_back(r);
  const unsigned full = (1u << size) - 1;
  std::vector<AsmMatrix> out;
  std::vector<Row> chosen;
  row_search([&](int) -> const std::vector<Row>& { return rows; }, size, 0, 0, chosen,
             [&](unsigned state, const std::vector<Row>& rs) {
               if (state != full) return;
               AsmMatrix m = blank(AsmClass::VS, size, size);
               for (int i = 0; i < size; ++i)
                 for (int j = 0; j < size; ++j) cell(m, i, j) = entry(rs[static_cast<std::size_t>(i)], j);
               out.push_back(std::move(m));
             });
  return out;
}

// Row pair (2i, 2i+1) read left to right along row 2i, then right to left along row 2i+1.
std::vector<int> uu_row_reading(const AsmMatrix& m, int pair) {
  std::vector<int> s;
  for (int j = 0; j < m.cols; ++j) s.push_back(m.at(2 * pair, j));
  for (int j = m.cols - 1; j >= 0; --j) s.push_back(m.at(2 * pair + 1, j));
  return s;
}

// Column pair (2c, 2c+1) read bottom to top along column 2c, then top to bottom along column 2c+1.
std::vector<int> uu_column_reading(const AsmMatrix& m, int pair) {
  std::vector<int> s;
  for (int i = m.rows - 1; i >= 0; --i) s.push_back(m.at(i, 2 * pair));
  for (int i = 0; i < m.rows; ++i) s.push_back(m.at(i, 2 * pair + 1));
  return s;
}

std::vector<AsmMatrix> enumerate_uu(int size) {
  const int n = size / 2;
  const std::vector<Row> pairs = asm_rows(2 * size);
  std::vector<AsmMatrix> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    AsmMatrix m = blank(AsmClass::UU, size, size);
    for (int p = 0; p < n; ++p) {
      const Row& r = pairs[pick[static_cast<std::size_t>(p)]];
      for (int j = 0; j < size; ++j) {
        cell(m, 2 * p, j) = entry(r, j);
        cell(m, 2 * p + 1, size - 1 - j) = entry(r, size + j);
      }
    }
    bool ok = true;
    for (int c = 0; c < n && ok; ++c) ok = sequence_ok(uu_column_reading(m, c));
    if (ok) out.push_back(std::move(m));
    int p = n - 1;
    while (p >= 0 && ++pick[static_cast<std::size_t>(p)] == pairs.size()) pick[static_cast<std::size_t>(p--)] = 0;
    if (p < 0) break;
  }
  return out;
}

// (4n+1) x (4n+3), symmetric about both medians; the medians are fixed to +-+...; only the top 2n rows are free.
std::vector<AsmMatrix> enumerate_vhp(int size) {
  const int n = (size - 1) / 4;
  const int rows = size, cols = size + 2, mid_row = 2 * n, mid_col = 2 * n + 1;
  std::array<std::vector<Row>, 2> by_centre;
  for (const Row& r : asm_rows(cols))
    if (mirror(r.plus, cols) == r.plus && mirror(r.minus, cols) == r.minus) {
      const int c = entry(r, mid_col);
      if (c != 0) by_centre[c > 0 ? 0 : 1].push_back(r);
    }
  unsigned target = 0;
  for (int j = 0; j < cols; ++j) {
    const int d = std::min(j, cols - 1 - j);
    if (j != mid_col && d % 2 == 1) target |= 1u << j;
  }
  std::vector<AsmMatrix> out;
  std::vector<Row> chosen;
  row_search([&](int i) -> const std::vector<Row>& { return by_centre[static_cast<std::size_t>(i % 2)]; }, 2 * n, 0,
             0, chosen, [&](unsigned state, const std::vector<Row>& rs) {
               if (state != target) return;
               AsmMatrix m = blank(AsmClass::VHP, rows, cols);
               for (int i = 0; i < 2 * n; ++i)
                 for (int j = 0; j < cols; ++j) {
                   const int v = entry(rs[static_cast<std::size_t>(i)], j);
                   cell(m, i, j) = v;
                   cell(m, rows - 1 - i, j) = v;
                 }
               for (int j = 0; j < cols; ++j) cell(m, mid_row, j) = j % 2 == 0 ? 1 : -1;
               out.push_back(std::move(m));
             });
  return out;
}

GenPoly gp_binomial(long n, long k) { return GenPoly(binomial(n, k)); }

GenPoly t_power(long k) { return GenPoly::monomial(1, {static_cast<int>(k), 0, 0}); }

GenPoly det_or_one(const Matrix<GenPoly>& m) { return m.rows() == 0 ? GenPoly(1) : exact::det_genpoly(m); }

// Interpolates a polynomial in t from node values; one extra node guards the degree bound.
GenPoly interpolate_t(const std::function<Rational(long)>& value, const std::function<Rational(long)>& t_at,
                      int degree_bound) {
  std::vector<Rational> ts, vs;
  for (long k = 0; k <= degree_bound; ++k) {
    ts.push_back(t_at(k));
    vs.push_back(value(k));
  }
  const exact::RatPoly fit = exact::RatPoly::interpolate(ts, vs);
  const long extra = degree_bound + 1;
  if (fit.evaluate(t_at(extra)) != value(extra)) throw std::logic_error("interpolation degree bound exceeded");
  GenPoly out;
  const auto& c = fit.coeffs();
  for (std::size_t d = 0; d < c.size(); ++d) {
    if (c[d].get_den() != 1) throw std::logic_error("closed form has a non-integral coefficient");
    if (sgn(c[d]) != 0) out += GenPoly::monomial(Integer(c[d].get_num()), {static_cast<int>(d), 0, 0});
  }
  return out;
}

ExactScalar pow_int(const ExactScalar& b, long e) { return exact::pow(b, e); }

}  // namespace

// ---- names and sizes ----

std::string to_string(AsmClass c) {
  switch (c) {
    case AsmClass::Plain: return "plain";
    case AsmClass::HT: return "ht";
    case AsmClass::QT: return "qt";
    case AsmClass::VS: return "vs";
    case AsmClass::UU: return "uu";
    case AsmClass::VHP: return "vhp";
  }
  return "?";
}

AsmClass parse_class(const std::string& s) {
  for (AsmClass c : {AsmClass::Plain, AsmClass::HT, AsmClass::QT, AsmClass::VS, AsmClass::UU, AsmClass::VHP})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown ASM class '" + s + "'");
}

int max_size(AsmClass c) {
  switch (c) {
    case AsmClass::Plain: return 6;
    case AsmClass::HT:
    case AsmClass::QT: return 8;
    case AsmClass::VS: return 7;
    case AsmClass::UU: return 4;
    case AsmClass::VHP: return 5;
  }
  return 0;
}

bool size_allowed(AsmClass c, int size) {
  if (size < 1 || size > max_size(c)) return false;
  switch (c) {
    case AsmClass::Plain: return true;
    case AsmClass::HT:
    case AsmClass::QT:
    case AsmClass::UU: return size % 2 == 0;
    case AsmClass::VS: return size % 2 == 1;
    case AsmClass::VHP: return size % 4 == 1;
  }
  return false;
}

std::string AsmMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int v = at(i, j);
      os << (v > 0 ? '+' : v < 0 ? '-' : '0');
    }
    if (i + 1 < rows) os << '\n';
  }
  return os.str();
}

// ---- validity and weights ----

bool is_valid(const AsmMatrix& m) {
  if (m.rows < 1 || m.cols < 1 || m.entries.size() != static_cast<std::size_t>(m.rows * m.cols)) return false;
  const int n = m.rows;
  switch (m.cls) {
    case AsmClass::Plain: return m.cols == n && rows_and_columns_ok(m);
    case AsmClass::HT:
    case AsmClass::QT: {
      if (m.cols != n || n % 2 != 0 || !rows_and_columns_ok(m)) return false;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (m.at(i, j) != m.at(n - 1 - i, n - 1 - j)) return false;
          if (m.cls == AsmClass::QT && m.at(i, j) != m.at(n - 1 - j, i)) return false;
        }
      return true;
    }
    case AsmClass::VS: {
      if (m.cols != n || n % 2 != 1 || !rows_and_columns_ok(m)) return false;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (m.at(i, j) != m.at(i, n - 1 - j)) return false;
      return true;
    }
    case AsmClass::UU: {
      if (m.cols != n || n % 2 != 0) return false;
      for (int p = 0; p < n / 2; ++p)
        if (!sequence_ok(uu_row_reading(m, p)) || !sequence_ok(uu_column_reading(m, p))) return false;
      return true;
    }
    case AsmClass::VHP: {
      if (m.cols != n + 2 || n % 4 != 1) return false;
      const int mid_row = (n - 1) / 2, mid_col = mid_row + 1;
      if (m.at(mid_row, mid_col) != -1) return false;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < m.cols; ++j)
          if (m.at(i, j) != m.at(n - 1 - i, j) || m.at(i, j) != m.at(i, m.cols - 1 - j)) return false;
      for (int i = 0; i < n; ++i) {
        std::vector<int> s;
        for (int j = 0; j < m.cols; ++j) s.push_back(m.at(i, j));
        if (!sequence_ok(s)) return false;
      }
      for (int j = 0; j < m.cols; ++j) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i) s.push_back(i == mid_row && j == mid_col ? 1 : m.at(i, j));
        if (!sequence_ok(s)) return false;
      }
      return true;
    }
  }
  return false;
}

Counters counters(const AsmMatrix& m) {
  Counters c;
  auto negatives = [&](int r0, int r1, int c0, int c1) {
    int k = 0;
    for (int i = r0; i < r1; ++i)
      for (int j = c0; j < c1; ++j) k += m.at(i, j) < 0;
    return k;
  };
  const int n = m.rows;
  switch (m.cls) {
    case AsmClass::Plain: c.k = negatives(0, n, 0, n); break;
    case AsmClass::HT:
    case AsmClass::QT: {
      const int h = n / 2;
      c.k = m.cls == AsmClass::HT ? negatives(0, n, 0, h) : negatives(0, h, 0, h);
      for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) c.m += m.at(i, j) != 0;
      break;
    }
    case AsmClass::VS: c.k = negatives(0, n, 0, (n - 1) / 2); break;
    case AsmClass::UU: {
      c.k = negatives(0, n, 0, n);
      for (int i = 0; i < n; i += 2) {
        int nz = 0;
        for (int j = 0; j < n; ++j) nz += m.at(i, j) != 0;
        c.m += nz % 2;
      }
      // Each column pair has an odd number of non-zeros in total; m' counts the pairs where the
      // column read second (top to bottom) carries the odd share.
      for (int j = 1; j < n; j += 2) {
        int nz = 0;
        for (int i = 0; i < n; ++i) nz += m.at(i, j) != 0;
        c.m_prime += nz % 2;
      }
      break;
    }
    case AsmClass::VHP: {
      const int h = (n - 1) / 2;
      c.k = negatives(0, h, 0, h + 1);
      break;
    }
  }
  return c;
}

std::vector<AsmMatrix> enumerate(AsmClass c, int size) {
  require_size(c, size);
  switch (c) {
    case AsmClass::Plain: return enumerate_plain(size);
    case AsmClass::HT:
    case AsmClass::QT: return enumerate_half_turn(c, size);
    case AsmClass::VS: return enumerate_vs(size);
    case AsmClass::UU: return enumerate_uu(size);
    case AsmClass::VHP: return enumerate_vhp(size);
  }
  return {};
}

GenPoly genfun(AsmClass c, int size) {
  std::map<GenPoly::Exponent, long> tally;
  for (const AsmMatrix& m : enumerate(c, size)) {
    const Counters w = counters(m);
    if (c == AsmClass::UU) ++tally[{w.k, w.m, w.m_prime}];
    else ++tally[{w.k, 0, 0}];
  }
  GenPoly out;
  for (const auto& [e, n] : tally) out += GenPoly::monomial(n, e);
  return out;
}

GenPoly genfun_ht_minus(int size) {
  std::map<int, long> tally;
  for (const AsmMatrix& m : enumerate(AsmClass::HT, size)) {
    const Counters w = counters(m);
    tally[w.k] += w.m % 2 == 0 ? 1 : -1;
  }
  GenPoly out;
  for (const auto& [k, n] : tally)
    if (n != 0) out += GenPoly::monomial(n, {k, 0, 0});
  return out;
}

// ---- closed forms ----

std::string to_string(ClosedForm f) {
  switch (f) {
    case ClosedForm::ZADhom: return "ZADhom";
    case ClosedForm::AV: return "A_V";
    case ClosedForm::AQT1: return "A_QT1";
    case ClosedForm::AQT2: return "A_QT2";
    case ClosedForm::AUU2: return "A_UU2";
    case ClosedForm::AUU2Tilde: return "A_UU2_tilde";
    case ClosedForm::AVHP2: return "A_VHP2";
  }
  return "?";
}

ClosedForm parse_closed_form(const std::string& s) {
  for (ClosedForm f : {ClosedForm::ZADhom, ClosedForm::AV, ClosedForm::AQT1, ClosedForm::AQT2, ClosedForm::AUU2,
                       ClosedForm::AUU2Tilde, ClosedForm::AVHP2})
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown closed form '" + s + "'");
}

Matrix<Rational> a_qt1_matrix(int n, const Rational& x) {
  if (sgn(x) == 0) throw std::domain_error("A_QT1 needs x != 0");
  Matrix<Rational> m(static_cast<std::size_t>(2 * n));
  for (long i = 0; i < 2 * n; ++i)
    for (long j = 0; j < 2 * n; ++j) {
      const Rational a = (i % 2 == 0 ? 1 : -1) * Rational(binomial(i, j)) * exact::pow(x, i - j - 1);
      const Rational b = (j % 2 == 0 ? 1 : -1) * Rational(binomial(j, i)) * exact::pow(x, j - i - 1);
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = a - b;
    }
  return m;
}

Matrix<Rational> a_qt2_matrix(int n, const Rational& q) {
  if (sgn(q) == 0) throw std::domain_error("A_QT2 needs q != 0");
  auto a = [&](long i, long j) -> Rational {
    return (i % 2 == 0 ? 1 : -1) * exact::pow(q, i - j) *
           (Rational(binomial(i + j - 1, i)) * q + Rational(binomial(i + j - 1, j)) / q);
  };
  Matrix<Rational> m(static_cast<std::size_t>(2 * n));
  for (long i = 0; i < 2 * n; ++i)
    for (long j = 0; j < 2 * n; ++j)
      if (i != j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = a(i, j) - a(j, i);
  return m;
}

Rational a_qt1_at(int n, const Rational& x) { return n == 0 ? Rational(1) : exact::pfaffian(a_qt1_matrix(n, x)); }

Rational a_qt2_at(int n, const Rational& q) { return n == 0 ? Rational(1) : exact::pfaffian(a_qt2_matrix(n, q)); }

ExactScalar z_ad_hom(int n_sites, const ExactScalar& x, const ExactScalar& y) {
  if (n_sites == 0) return ExactScalar(1);
  exact::ScalarMatrix m(static_cast<std::size_t>(n_sites));
  const ExactScalar t = x * x, yi = y.inverse();
  for (long i = 0; i < n_sites; ++i)
    for (long j = 0; j < n_sites; ++j) {
      ExactScalar s(0);
      for (long k = 0; k <= std::min(i, j); ++k) s += ExactScalar(Rational(binomial(i, k) * binomial(j, k))) * exact::pow(t, j - k);
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = (i == j ? yi : ExactScalar(0)) + y * s;
    }
  return exact::det(m);
}

GenPoly closed_form(ClosedForm f, int n) {
  if (n < 0) throw std::invalid_argument("closed form size must be non-negative");
  const std::size_t d = static_cast<std::size_t>(n);
  Matrix<GenPoly> m(d);
  const GenPoly t = GenPoly::t(), y = GenPoly::y(), z = GenPoly::z();
  switch (f) {
    case ClosedForm::ZADhom:
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
          GenPoly s;
          for (long k = 0; k <= std::min(i, j); ++k) s += gp_binomial(i, k) * gp_binomial(j, k) * t_power(j - k);
          m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = GenPoly(i == j ? 1 : 0) + y * y * s;
        }
      return det_or_one(m);
    case ClosedForm::AV:
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
          GenPoly s;
          for (long k = 0; k < n; ++k)
            s += gp_binomial(i + j + 1, i + k + 1) * gp_binomial(i + k + 1, 2 * k + 1) * t_power(k);
          m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = s;
        }
      return det_or_one(m);
    case ClosedForm::AUU2Tilde:
    case ClosedForm::AVHP2:
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
          GenPoly s;
          const long shift = f == ClosedForm::AVHP2 ? 1 : 0;
          for (long k = 0; k < n; ++k)
            s += gp_binomial(i + j, i + k) * gp_binomial(i + k + shift, 2 * k) * t_power(k);
          m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = s;
        }
      return det_or_one(m);
    case ClosedForm::AUU2: {
      const GenPoly lead = t + (GenPoly(1) + y) * (GenPoly(1) + z);
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
          GenPoly s;
          for (long k = 0; k < n; ++k) {
            s += lead * gp_binomial(i + j, i + k) * gp_binomial(i + k, 2 * k) * t_power(k);
            s += ((GenPoly(1) + z) * gp_binomial(i + j, i + k) * gp_binomial(i + k, 2 * k + 1) +
                  (GenPoly(1) + y) * gp_binomial(i + j, i + k + 1) * gp_binomial(i + k + 1, 2 * k + 1)) *
                 t_power(k + 1);
          }
          m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = s;
        }
      return det_or_one(m);
    }
    case ClosedForm::AQT1:
      return interpolate_t([n](long k) { return a_qt1_at(n, Rational(k + 1)); },
                           [](long k) { return Rational((k + 1) * (k + 1)); }, n * n + 1);
    case ClosedForm::AQT2: {
      auto t_of = [](long k) {
        const Rational q(k + 2);
        const Rational x = q + 1 / q;
        return Rational(x * x);
      };
      return interpolate_t([n](long k) { return a_qt2_at(n, Rational(k + 2)); }, t_of, n * n + 1);
    }
  }
  throw std::invalid_argument("unknown closed form");
}

ExactScalar evaluate(const GenPoly& p, const ExactScalar& t, const ExactScalar& y, const ExactScalar& z) {
  ExactScalar out(0);
  for (const auto& [e, c] : p.terms())
    out += ExactScalar(Rational(c)) * pow_int(t, e[0]) * pow_int(y, e[1]) * pow_int(z, e[2]);
  return out;
}

GenPoly vhp_limit(const GenPoly& p, int n) {
  GenPoly out;
  for (const auto& [e, c] : p.terms()) {
    const int shift = e[1] - e[2];
    if (shift > n) throw std::domain_error("limit diverges: y-degree exceeds n");
    if (shift == n) out += GenPoly::monomial(c, {e[0], 0, 0});
  }
  return out;
}

// ---- cross-checks ----

bool LinkReport::all() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

void add(LinkReport& r, const std::string& id, const ExactScalar& lhs, const ExactScalar& rhs) {
  r.checks.push_back({id, lhs.str(), rhs.str(), lhs == rhs});
}

ExactScalar at_t(const GenPoly& p, const ExactScalar& t) { return evaluate(p, t); }

std::string repeat(const std::string& s, int times) {
  std::string out;
  for (int k = 0; k < times; ++k) out += s;
  return out;
}

}  // namespace

LinkReport check_kuperberg_links(int n_sites, const Rational& q) {
  if (n_sites < 1) throw std::invalid_argument("need at least one site");
  const int big_n = n_sites;
  const vertex::ModelParams p = vertex::ModelParams::from_q(q);
  const ExactScalar qs(q);
  const ExactScalar x = qs + qs.inverse();
  const ExactScalar t = x * x;
  LinkReport r;

  auto plain = [&](int size) { return size == 0 ? GenPoly(1) : genfun(AsmClass::Plain, size); };
  auto vs = [&](int n) {
    return 2 * n + 1 <= max_size(AsmClass::VS) ? genfun(AsmClass::VS, 2 * n + 1) : closed_form(ClosedForm::AV, n);
  };
  const ExactScalar a_n = at_t(plain(big_n), t);

  // Sum rules of the anti-diagonal overlap.
  const GenPoly zad = closed_form(ClosedForm::ZADhom, big_n);
  auto zad_at = [&](const ExactScalar& y) { return evaluate(zad, t, y) / pow_int(y, big_n); };
  add(r, "sumrule.y=q", zad_at(qs), pow_int(x, big_n) * a_n);

  const exact::ScalarVector phi_d = sov::phi(transfer::Twist::Diagonal, big_n, p);
  const exact::ScalarVector phi_ad = sov::phi(transfer::Twist::AntiDiagonal, big_n, p);
  auto comp = [&](const exact::ScalarVector& v, const std::string& pattern) { return v[sov::parse_pattern(pattern)]; };
  {
    // sum_s y^{M(s)} phi_AD(s)^2 at a generic y
    const ExactScalar y(Rational(3, 2));
    ExactScalar direct(0);
    for (std::size_t s = 0; s < phi_ad.size(); ++s)
      direct += pow_int(y, transfer::magnetisation(s, big_n)) * phi_ad[s] * phi_ad[s];
    add(r, "sumrule.direct", direct, zad_at(y));
    add(r, "sumrule.entrywise", z_ad_hom(big_n, x, y), zad_at(y));
  }
  if (2 * big_n <= max_size(AsmClass::HT)) {
    add(r, "sumrule.y=1", zad_at(1) * a_n, at_t(genfun(AsmClass::HT, 2 * big_n), t));
    if (big_n % 2 == 0) {
      const ExactScalar ht_minus = at_t(genfun_ht_minus(2 * big_n), t);
      add(r, "sumrule.y=i", zad_at(ExactScalar::i()) * a_n, pow_int(ExactScalar::i(), big_n) * ht_minus);
      const ExactScalar qt1 = at_t(closed_form(ClosedForm::AQT1, big_n / 2), t);
      add(r, "ht-.factorisation", ht_minus, pow_int(-t, big_n / 2) * a_n * qt1 * qt1);
    }
  }

  add(r, "norm.phi_D", exact::dot(phi_d, phi_d), a_n);
  if (big_n % 2 == 0 && 2 * big_n <= max_size(AsmClass::QT)) {
    const ExactScalar a_qt = at_t(genfun(AsmClass::QT, 2 * big_n), t);
    add(r, "pairing.qt", exact::dot(phi_d, phi_ad), a_qt);
    add(r, "qt.factorisation", a_qt,
        at_t(closed_form(ClosedForm::AQT1, big_n / 2), t) * at_t(closed_form(ClosedForm::AQT2, big_n / 2), t));
  }

  // Special components.
  const int n = big_n / 2;
  if (big_n % 2 == 0) {
    add(r, "component.D.blocks", comp(phi_d, repeat("U", n) + repeat("D", n)), at_t(plain(n), t));
    add(r, "component.D.alternating", comp(phi_d, repeat("UD", n)), at_t(vs(n), t));
    add(r, "component.AD.zeros", comp(phi_ad, repeat("0", big_n)),
        pow_int(-x, n) * at_t(closed_form(ClosedForm::AUU2Tilde, n), t));
    add(r, "component.AD.alternating", comp(phi_ad, repeat("UD", n)), at_t(closed_form(ClosedForm::AVHP2, n), t));
  } else {
    add(r, "component.D.blocks", comp(phi_d, repeat("U", n) + "0" + repeat("D", n)), at_t(plain(n), t));
    add(r, "component.D.zeros", comp(phi_d, repeat("0", big_n)), pow_int(x, n) * at_t(vs(n), t));
    add(r, "component.AD.alternating", comp(phi_ad, repeat("UD", n) + "U"),
        pow_int(ExactScalar(-1), n) * at_t(closed_form(ClosedForm::AUU2Tilde, n + 1), t));
  }

  // Homogeneous partition functions.
  using partition::Domain;
  using partition::DomainSpec;
  const ExactScalar bq = p.brq(1), bq2 = p.brq(2);
  if (big_n <= 3) {
    const partition::Params ones(static_cast<std::size_t>(big_n), ExactScalar(1));
    add(r, "partition.ik", partition::z_bruteforce(DomainSpec{Domain::DWBC, ones, ones}, p),
        pow_int(bq, big_n * (big_n - 1)) * pow_int(bq2, big_n) * a_n);
  }
  const int nu = (big_n + 1) / 2;
  if (nu <= 2) {
    const partition::Params ones(static_cast<std::size_t>(nu), ExactScalar(1));
    auto br = [](const ExactScalar& v) { return exact::bracket(v); };
    // Boundary parameters with [b/q], [b q] and friends non-zero.
    auto pick = [&](std::initializer_list<Rational> candidates) -> ExactScalar {
      for (const Rational& v : candidates)
        if (!br(ExactScalar(v) * qs).is_zero() && !br(ExactScalar(v) / qs).is_zero()) return ExactScalar(v);
      throw std::logic_error("no admissible boundary parameter");
    };
    const ExactScalar b = pick({Rational(5, 3), Rational(11, 7)}), c = pick({Rational(7, 2), Rational(13, 4)});
    const ExactScalar zu = partition::z_bruteforce(DomainSpec{Domain::Uturn, ones, ones, b}, p);
    const ExactScalar av = at_t(vs(nu), t);
    add(r, "partition.u", zu,
        av * pow_int(bq, 2 * nu * nu - nu) * pow_int(bq2, nu) * pow_int(br(b * qs) + br(b / qs), nu));
    const ExactScalar zuu = partition::z_bruteforce(DomainSpec{Domain::UUturn, ones, ones, b, c}, p);
    const ExactScalar zuu2 = zuu * pow_int(br(b), nu) / (pow_int(bq2, nu) * zu);
    const ExactScalar lhs = pow_int(bq2, 2 * nu) * zuu2 / (pow_int(bq, nu * (2 * nu + 1)) * pow_int(br(b / qs) * br(c / qs), nu));
    const ExactScalar yv = br(b * qs) / br(b / qs), zv = br(c * qs) / br(c / qs);
    add(r, "partition.uu2", lhs, evaluate(closed_form(ClosedForm::AUU2, nu), t, yv, zv));
  }
  return r;
}

Matrix<Rational> l_matrix(const Rational& alpha, const Rational& beta, int n) {
  Matrix<Rational> m(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= i; ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          Rational(binomial(i, j)) * exact::pow(alpha, i) * exact::pow(beta, j);
  return m;
}

namespace {

using Series = std::array<Rational, 3>;  // truncated power series in eps

Series series_inverse(const Rational& a, const Rational& b, const Rational& c) {
  // 1 / (a + b eps + c eps^2)
  Series s;
  s[0] = 1 / a;
  s[1] = -b * s[0] / a;
  s[2] = -(b * s[1] + c * s[0]) / a;
  return s;
}

// g(u, v) = 1/(2(uv - 9)) - 2/(9(uv - 1/9)): the overlap kernel at q = 3, y = 2.
const std::array<std::pair<Rational, Rational>, 2> kKernel = {{{Rational(1, 2), Rational(9)},
                                                              {Rational(-2, 9), Rational(1, 9)}}};

// g(r + eps a, r + eps b) as a series in eps.
Series kernel_series(const Rational& r, const Rational& a, const Rational& b) {
  Series out{};
  for (const auto& [w, c] : kKernel) {
    const Series s = series_inverse(r * r - c, r * (a + b), a * b);
    for (std::size_t k = 0; k < 3; ++k) out[k] += w * s[k];
  }
  return out;
}

// {u^i v^j} g(u + r, v + r).
Rational kernel_coefficient(const Rational& r, int i, int j) {
  Rational total = 0;
  for (const auto& [w, c] : kKernel) {
    // 1 / (A + B u + B v + uv)
    const Rational a = r * r - c, b = r;
    Matrix<Rational> co(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(j + 1));
    for (int ii = 0; ii <= i; ++ii)
      for (int jj = 0; jj <= j; ++jj) {
        Rational rhs = (ii == 0 && jj == 0) ? 1 : 0;
        if (ii > 0) rhs -= b * co(static_cast<std::size_t>(ii - 1), static_cast<std::size_t>(jj));
        if (jj > 0) rhs -= b * co(static_cast<std::size_t>(ii), static_cast<std::size_t>(jj - 1));
        if (ii > 0 && jj > 0) rhs -= co(static_cast<std::size_t>(ii - 1), static_cast<std::size_t>(jj - 1));
        co(static_cast<std::size_t>(ii), static_cast<std::size_t>(jj)) = rhs / a;
      }
    total += w * co(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  return total;
}

}  // namespace

LinkReport l_matrix_checks(const Rational& alpha, const Rational& beta, const Rational& alpha2, const Rational& beta2,
                           int n) {
  if (sgn(alpha) == 0 || sgn(beta) == 0 || sgn(alpha2) == 0 || sgn(beta2) == 0)
    throw std::invalid_argument("L-matrix parameters must be non-zero");
  if (alpha == alpha2) throw std::invalid_argument("the product law needs alpha' != alpha");
  LinkReport r;
  auto add_rational = [&](const std::string& id, const Rational& lhs, const Rational& rhs) {
    r.checks.push_back({id, exact::to_string(lhs), exact::to_string(rhs), lhs == rhs});
  };
  const Matrix<Rational> l = l_matrix(alpha, beta, n);
  add_rational("l.det", n == 0 ? Rational(1) : exact::det(l), exact::pow(alpha * beta, n * (n - 1) / 2));

  // L L^t against the series of 1/(1 - alpha(u+v) - alpha^2(beta^2-1)uv) and the binomial sum.
  const Matrix<Rational> llt = l * l.transpose();
  const Rational gamma = alpha * alpha * (beta * beta - 1);
  Matrix<Rational> series(static_cast<std::size_t>(n));
  bool series_ok = true, binomial_ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational c = (i == 0 && j == 0) ? 1 : 0;
      if (i > 0) c += alpha * series(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j));
      if (j > 0) c += alpha * series(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1));
      if (i > 0 && j > 0) c += gamma * series(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
      series(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = c;
      Rational sum = 0;
      for (long k = 0; k < n; ++k) sum += Rational(binomial(i, k) * binomial(j, k)) * exact::pow(beta, 2 * k);
      const Rational& e = llt(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      series_ok = series_ok && e == c;
      binomial_ok = binomial_ok && e == exact::pow(alpha, i + j) * sum;
    }
  r.checks.push_back({"l.series", "L L^t", "series coefficients", series_ok});
  r.checks.push_back({"l.binomial", "L L^t", "binomial sum", binomial_ok});

  const Rational alpha0 = (alpha2 - alpha) / (alpha * beta);
  const Rational beta0 = alpha2 * beta2 / (alpha2 - alpha);
  r.checks.push_back({"l.product", "L(a,b) L(a0,b0)", "L(a',b')",
                      l * l_matrix(alpha0, beta0, n) == l_matrix(alpha2, beta2, n)});

  // Confluent divided difference at N = 2 with offsets eps*(0,1) and eps*(0,3) around r = 1.
  const Rational r0 = 1;
  const std::array<Rational, 2> ua{0, 1}, vb{0, 3};
  bool dd_ok = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Series num{};
      for (int m = 0; m <= i; ++m)
        for (int k = 0; k <= j; ++k) {
          Rational den = 1;
          for (int m2 = 0; m2 <= i; ++m2)
            if (m2 != m) den *= ua[static_cast<std::size_t>(m)] - ua[static_cast<std::size_t>(m2)];
          for (int k2 = 0; k2 <= j; ++k2)
            if (k2 != k) den *= vb[static_cast<std::size_t>(k)] - vb[static_cast<std::size_t>(k2)];
          const Series s = kernel_series(r0, ua[static_cast<std::size_t>(m)], vb[static_cast<std::size_t>(k)]);
          for (std::size_t e = 0; e < 3; ++e) num[e] += s[e] / den;
        }
      // The divided difference is num / eps^(i+j): lower orders must cancel.
      const int order = i + j;
      for (int e = 0; e < order; ++e) dd_ok = dd_ok && sgn(num[static_cast<std::size_t>(e)]) == 0;
      dd_ok = dd_ok && num[static_cast<std::size_t>(order)] == kernel_coefficient(r0, i, j);
    }
  r.checks.push_back({"l.divided_difference", "confluent limit", "series coefficient", dd_ok});
  return r;
}

}  // namespace vertexlab::asms
