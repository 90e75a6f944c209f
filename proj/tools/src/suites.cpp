#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <stdexcept>

#include "vertexlab/asm.hpp"
#include "vertexlab/partition.hpp"
#include "vertexlab/rational.hpp"
#include "vertexlab/sov.hpp"
#include "vertexlab/transfer.hpp"
#include "vertexlab/vertex.hpp"

namespace vertexlab::cli {

namespace {

using exact::ExactScalar;
using exact::GenPoly;
using exact::Rational;
using transfer::Inhom;
using transfer::Twist;
using vertex::ModelParams;
using Params = std::vector<ExactScalar>;

std::string rs(const Rational& r) { return exact::to_string(r); }

std::string list(const Params& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].str();
  return out + ")";
}

std::string tw(Twist t) { return t == Twist::Diagonal ? "d" : "ad"; }

Outcome equal(const ExactScalar& a, const ExactScalar& b) { return compare(a.str(), b.str()); }
Outcome equal(const GenPoly& a, const GenPoly& b) { return {a == b ? Status::Pass : Status::Fail, a.str(), b.str(), {}}; }
Outcome equal(const exact::RatPoly& a, const exact::RatPoly& b) {
  return {a == b ? Status::Pass : Status::Fail, a.str(), b.str(), {}};
}

Outcome from_links(const asms::LinkReport& r) {
  Outcome o;
  for (const asms::Check& c : r.checks)
    o.parts.emplace_back(c.id, Outcome{c.pass ? Status::Pass : Status::Fail, c.lhs, c.rhs, {}});
  return o;
}

std::uint64_t mix(std::uint64_t seed, const std::string& suite) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : suite) h = (h ^ c) * 1099511628211ULL;
  return h ^ (seed * 0x9E3779B97F4A7C15ULL);
}

class Builder {
 public:
  Builder(const std::string& suite, const SuiteConfig& cfg) : sampler_(mix(cfg.seed, suite)), cfg_(cfg) {}

  int cap(int def) const { return cfg_.max_n > 0 ? std::min(def, cfg_.max_n) : def; }
  exact::RationalSampler& s() { return sampler_; }
  Rational small_q() { return exact::RationalSampler(sampler_.next_seed(), 12).draw_q(); }

  Params draws(int n) {
    Params v;
    for (int k = 0; k < n; ++k) v.emplace_back(sampler_.draw());
    return v;
  }

  void add(std::string id, ParamList params, std::function<Outcome()> run) {
    tasks.push_back(Task{std::move(id), std::move(params), std::move(run)});
  }

  std::vector<Task> tasks;

 private:
  exact::RationalSampler sampler_;
  SuiteConfig cfg_;
};

std::string pt(int k) { return "/pt" + std::to_string(k); }
std::string nn(const char* tag, int n) { return std::string("/") + tag + std::to_string(n); }

// ---------------------------------------------------------------------------------------------

void local_suite(Builder& b) {
  for (int k = 0; k < 3; ++k) {
    const Rational q = b.s().draw_q();
    const ExactScalar z(b.s().draw()), w(b.s().draw());
    const ModelParams p = ModelParams::from_q(q);
    const ParamList pl{{"q", rs(q)}, {"z", z.str()}, {"w", w.str()}};
    for (int m = 1; m <= 2; ++m)
      for (int n = 1; n <= 2; ++n)
        for (int pk = 1; pk <= 2; ++pk) {
          const std::string id = "local.ybe/R" + std::to_string(m) + std::to_string(n) + std::to_string(pk) + pt(k);
          b.add(id, pl, [=] { return truth(vertex::check_yang_baxter(m, n, pk, z, w, p)); });
        }
    b.add("local.inversion_crossing" + pt(k), pl, [=] { return truth(vertex::check_inversion_crossing(p, z)); });
    b.add("local.q_inversion" + pt(k), pl, [=] { return truth(vertex::check_q_inversion(p, z)); });
    b.add("local.unitarity" + pt(k), pl, [=] { return truth(vertex::check_rcheck_unitarity(p, z)); });
    b.add("local.highest_weight" + pt(k), pl, [=] { return truth(vertex::check_highest_weight_covector(p, z)); });
    b.add("local.projector" + pt(k), pl, [=] { return truth(vertex::check_projector_absorption(p, z)); });
    b.add("local.special_points" + pt(k), {{"q", rs(q)}}, [=] { return truth(vertex::check_special_points(p)); });

    const Rational half = b.s().draw_positive();
    const ExactScalar bb(b.s().draw());
    const ModelParams ph = ModelParams::from_half(half);
    for (int model = 1; model <= 2; ++model) {
      const ParamList bl{{"s", rs(half)}, {"z", z.str()}, {"w", w.str()}, {"b", bb.str()}};
      b.add("local.boundary/model" + std::to_string(model) + pt(k), bl,
            [=] { return truth(vertex::check_boundary_ybe_and_fish(model, z, w, bb, ph)); });
    }
  }
}

// ---------------------------------------------------------------------------------------------

std::string fmt(double v) {
  if (std::abs(v) < 1e-10) return "0";  // round-off
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

void transfer_suite(Builder& b) {
  for (Twist t : {Twist::Diagonal, Twist::AntiDiagonal}) {
    for (int n = 1; n <= b.cap(4); ++n)
      for (int k = 0; k < 3; ++k) {
        const Rational q = b.s().draw_q();
        const Inhom in{b.draws(n)};
        const ExactScalar z(b.s().draw());
        b.add("transfer.fusion/" + tw(t) + nn("N", n) + pt(k), {{"q", rs(q)}, {"w", list(in.w)}, {"z", z.str()}},
              [=] { return truth(transfer::check_fusion(z, t, ModelParams::from_q(q), in)); });
      }

    for (int n = 1; n <= b.cap(3); ++n) {
      const Rational q = b.s().draw_q();
      const Inhom in{b.draws(n)};
      const ExactScalar z(b.s().draw()), u(b.s().draw());
      b.add("transfer.commuting/" + tw(t) + nn("N", n), {{"q", rs(q)}, {"w", list(in.w)}, {"z", z.str()}, {"u", u.str()}},
            [=] {
              const ModelParams p = ModelParams::from_q(q);
              bool ok = true;
              for (int a = 1; a <= 2; ++a)
                for (int c = 1; c <= 2; ++c) {
                  const auto ta = transfer::transfer(a, z, t, p, in), tc = transfer::transfer(c, u, t, p, in);
                  ok = ok && ta * tc == tc * ta;
                }
              return truth(ok, "[T_a(z), T_b(u)] = 0 for a, b in {1, 2}");
            });
    }

    for (int n = 2; n <= b.cap(3); ++n) {
      const Rational q = b.s().draw_q();
      b.add("transfer.hamiltonian/" + tw(t) + nn("N", n), {{"q", rs(q)}}, [=] {
        const ModelParams p = ModelParams::from_q(q);
        return truth(transfer::hamiltonian(n, q + 1 / q, t) == transfer::hamiltonian_from_transfer(n, p, t),
                     "closed-form H equals the transfer-matrix derivative");
      });
    }

    for (int n = 1; n <= b.cap(4); ++n) {
      const Rational q = b.s().draw_q();
      const Inhom in{b.draws(n)};
      const ExactScalar z(b.s().draw());
      b.add("transfer.null_inhom/" + tw(t) + nn("N", n), {{"q", rs(q)}, {"w", list(in.w)}, {"z", z.str()}}, [=] {
        const ModelParams p = ModelParams::from_q(q);
        const auto v = sov::psi(t, p, in);
        return truth(!exact::is_zero_vector(v) && sov::check_null_vector(t, v, z, p, in));
      });
    }

    // Homogeneous chains at N = 5 cost minutes with q of height 10^4; a small-height q is just as generic.
    for (int n = 1; n <= b.cap(5); ++n) {
      const Rational q = b.small_q();
      const ExactScalar z(b.s().draw());
      b.add("transfer.null_hom/" + tw(t) + nn("N", n), {{"q", rs(q)}, {"z", z.str()}}, [=] {
        const ModelParams p = ModelParams::from_q(q);
        const Inhom in = Inhom::homogeneous(n);
        const auto v = sov::psi(t, p, in);
        return truth(!exact::is_zero_vector(v) && sov::check_null_vector(t, v, z, p, in));
      });
    }

    for (int n = 2; n <= b.cap(5); ++n) {
      const Rational q = b.small_q();
      b.add("transfer.zero_energy/" + tw(t) + nn("N", n), {{"q", rs(q)}}, [=] {
        const auto v = sov::phi(t, n, ModelParams::from_q(q));
        const auto hv = transfer::hamiltonian(n, q + 1 / q, t).apply(v);
        return truth(!exact::is_zero_vector(v) && exact::is_zero_vector(hv), "H phi = 0 with phi != 0");
      });
    }

    for (int n = 2; n <= b.cap(3); ++n)
      for (const char* xs : {"-3", "-1", "0", "1/2", "1", "3/2", "2", "3"}) {
        const Rational xr = exact::parse_rational(xs);
        const double x = xr.get_d();
        const std::string tag = std::string("/x") + xs;
        const ParamList pl{{"x", xs}};
        b.add("transfer.spectrum/" + tw(t) + nn("N", n) + tag, pl, [=] {
          const auto r = transfer::spectrum_probe(n, x, t);
          const bool zero_ok = x == 0 ? r.zero_in_special_sector >= 1 : r.zero_in_special_sector == 1;
          const bool ok = r.nonzero_parts_coincide && r.max_pair_deviation <= 1e-9 && zero_ok;
          return Outcome{ok ? Status::Pass : Status::Fail,
                         "pair deviation " + fmt(r.max_pair_deviation) + ", E = 0 multiplicity in sector " +
                             std::to_string(r.zero_in_special_sector),
                         std::string("sectors coincide off E = 0, multiplicity ") + (x == 0 ? ">= 1" : "1"),
                         {}};
        });
        b.add("transfer.conjecture/" + tw(t) + nn("N", n) + tag, pl, [=] {
          const auto r = transfer::spectrum_probe(n, x, t);
          return Outcome{Status::Skipped, "min eigenvalue " + fmt(r.min_eigenvalue), ">= 0 (conjectural, not asserted)", {}};
        });
      }
  }
}

// ---------------------------------------------------------------------------------------------

void sov_suite(Builder& b) {
  for (int n = 1; n <= b.cap(3); ++n)
    for (int k = 0; k < 3; ++k) {
      const Rational q = b.s().draw_q();
      const Inhom in{b.draws(n)};
      const ExactScalar z(b.s().draw());
      const ParamList pl{{"q", rs(q)}, {"w", list(in.w)}, {"z", z.str()}};
      b.add("sov.structure" + nn("N", n) + pt(k), pl, [=] {
        const auto r = sov::check_sov_structure(ModelParams::from_q(q), in, z);
        std::string failed;
        for (auto [name, ok] : {std::pair{"d_eigen", r.d_eigen}, {"b_hopping", r.b_hopping}, {"c_hopping", r.c_hopping},
                                {"dual_actions", r.dual_actions}, {"scalar_products", r.scalar_products},
                                {"completeness", r.completeness}})
          if (!ok) failed += std::string(failed.empty() ? "" : ", ") + name;
        return Outcome{r.all() ? Status::Pass : Status::Fail, failed.empty() ? "all hold" : "failed: " + failed,
                       "all hold", {}};
      });
      b.add("sov.reconstruction" + nn("N", n) + pt(k), pl, [=] {
        const ModelParams p = ModelParams::from_q(q);
        const auto a = sov::psi_ad(p, in, sov::Method::Sov), c = sov::psi_ad(p, in, sov::Method::Kernel);
        return truth(!exact::is_zero_vector(a) && exact::vectors_equal(a, c), "separated-variables vector equals kernel vector");
      });
    }

  for (Twist t : {Twist::Diagonal, Twist::AntiDiagonal})
    for (int n = 1; n <= b.cap(3); ++n) {
      const Rational q = b.s().draw_q();
      const Inhom in{b.draws(n)};
      b.add("sov.eigenvector/" + tw(t) + nn("N", n), {{"q", rs(q)}, {"w", list(in.w)}},
            [=] { return truth(sov::check_eigenvector_properties(t, ModelParams::from_q(q), in).all()); });
    }

  for (int n = 1; n <= b.cap(4); ++n) {
    const Rational q = b.s().draw_q();
    const Inhom in{b.draws(n)};
    const ExactScalar z(b.s().draw());
    b.add("sov.bethe_uniqueness" + nn("N", n), {{"q", rs(q)}, {"w", list(in.w)}, {"z", z.str()}}, [=] {
      return compare(std::to_string(sov::diagonal_null_dimension(ModelParams::from_q(q), in, z)), "1");
    });
  }

  const std::vector<Rational> qs{2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  for (Twist t : {Twist::Diagonal, Twist::AntiDiagonal})
    for (int n = 1; n <= b.cap(3); ++n)
      b.add("sov.polynomiality/" + tw(t) + nn("N", n), {{"q", "2..11"}}, [=] {
        const auto fit = sov::phi_polynomial_in_x(t, n, qs);
        return Outcome{fit.consistent ? Status::Pass : Status::Fail, "max degree " + std::to_string(fit.max_degree),
                       "below " + std::to_string(qs.size() - 1), {}};
      });
}

// ---------------------------------------------------------------------------------------------

// Interpolates f over t = (q + 1/q)^2 at the sample values of q.
exact::RatPoly interpolate_in_t(Params qs, const std::function<Rational(const Rational&)>& f) {
  std::vector<Rational> ts, vs;
  for (const ExactScalar& qv : qs) {
    const Rational q = qv.to_rational();
    ts.push_back((q + 1 / q) * (q + 1 / q));
    vs.push_back(f(q));
  }
  return exact::RatPoly::interpolate(ts, vs);
}

Params distinct_t_samples(exact::RationalSampler& s, int count) {
  Params out;
  std::set<Rational> seen;
  while (static_cast<int>(out.size()) < count) {
    const Rational q = s.draw_q();
    const Rational t = (q + 1 / q) * (q + 1 / q);
    if (seen.insert(t).second) out.emplace_back(q);
  }
  return out;
}

void partition_suite(Builder& b) {
  using partition::Domain;
  using partition::DomainSpec;
  struct Shape {
    Domain d;
    int max;
    int rows_per, cols_per;
    int extras;  // number of boundary parameters (b, c)
    bool half;
  };
  const std::vector<Shape> shapes{
      {Domain::DWBC, 3, 1, 1, 0, false},   {Domain::HTplus, 2, 1, 1, 0, false},  {Domain::HTminus, 2, 1, 1, 0, false},
      {Domain::QT, 2, 2, 0, 0, false},     {Domain::Uturn, 2, 1, 1, 1, false},   {Domain::UUturn, 2, 1, 1, 2, false},
      {Domain::TenVertexDWBC, 2, 1, 1, 0, false}, {Domain::ZAdomain, 2, 1, 2, 1, false}, {Domain::ZcapDomain, 2, 1, 1, 1, true},
  };
  for (const Shape& sh : shapes)
    for (int n = 1; n <= b.cap(sh.max); ++n) {
      DomainSpec d;
      d.kind = sh.d;
      d.rows = b.draws(n * sh.rows_per);
      d.cols = b.draws(n * sh.cols_per);
      if (sh.extras >= 1) d.b = ExactScalar(b.s().draw());
      if (sh.extras >= 2) d.c = ExactScalar(b.s().draw());
      const Rational q = sh.half ? b.s().draw_positive() : b.s().draw_q();
      ParamList pl{{sh.half ? "s" : "q", rs(q)}, {"rows", list(d.rows)}, {"cols", list(d.cols)}};
      if (sh.extras >= 1) pl.emplace_back("b", d.b.str());
      if (sh.extras >= 2) pl.emplace_back("c", d.c.str());
      const bool half = sh.half;
      b.add("partition.oracle/" + partition::to_string(sh.d) + nn("n", n), pl, [=] {
        const ModelParams p = half ? ModelParams::from_half(q) : ModelParams::from_q(q);
        return equal(partition::z_bruteforce(d, p), partition::z_closed(d, p));
      });
    }

  if (b.cap(2) >= 2)
    for (int k = 0; k < 2; ++k) {
      const Rational q = b.s().draw_q();
      const Params x = b.draws(2);
      const ExactScalar y4(b.s().draw()), bb(b.s().draw());
      const Params y{x[0] / ExactScalar(q), x[0], ExactScalar(q) * x[0], y4};
      b.add("partition.wheel" + pt(k), {{"q", rs(q)}, {"x", list(x)}, {"y", list(y)}, {"b", bb.str()}}, [=] {
        return equal(partition::z_bruteforce(DomainSpec{Domain::ZAdomain, x, y, bb}, ModelParams::from_q(q)), ExactScalar(0));
      });
    }

  for (int n = 1; n <= b.cap(4); ++n) {
    const Rational q = b.s().draw_q();
    const Inhom in{b.draws(n)};
    const ExactScalar y(b.s().draw());
    b.add("partition.sumrule" + nn("N", n), {{"q", rs(q)}, {"w", list(in.w)}, {"y", y.str()}}, [=] {
      const ModelParams p = ModelParams::from_q(q);
      return equal(partition::z_ad(y, in, p), partition::z_ad_direct(y, in, p));
    });
  }

  {
    // Five nodes determine every target here (degree <= 3 in t); A_HT-(8) has degree 6, so y = i stops at N = 3.
    const Params qs = distinct_t_samples(b.s(), 5);
    const ParamList pl{{"q", list(qs)}};
    for (int n = 1; n <= b.cap(4); ++n)
      b.add("partition.sumrule_hom/y=q" + nn("N", n), pl, [=] {
        const auto lhs = interpolate_in_t(qs, [n](const Rational& q) -> Rational {
          const ExactScalar x(q + 1 / q);
          return (asms::z_ad_hom(n, x, ExactScalar(q)) / exact::pow(x, n)).to_rational();
        });
        return equal(lhs, exact::RatPoly::from_genpoly_t(asms::genfun(asms::AsmClass::Plain, n)));
      });
    for (int n = 1; n <= b.cap(3); ++n)
      b.add("partition.sumrule_hom/y=1" + nn("N", n), pl, [=] {
        const GenPoly a = asms::genfun(asms::AsmClass::Plain, n);
        const auto lhs = interpolate_in_t(qs, [&](const Rational& q) -> Rational {
          const Rational t = (q + 1 / q) * (q + 1 / q);
          return asms::z_ad_hom(n, ExactScalar(q + 1 / q), ExactScalar(1)).to_rational() * a.evaluate(t);
        });
        return equal(lhs, exact::RatPoly::from_genpoly_t(asms::genfun(asms::AsmClass::HT, 2 * n)));
      });
    for (int n = 1; n <= b.cap(3); ++n)
      b.add("partition.sumrule_hom/y=i" + nn("N", n), pl, [=] {
        const GenPoly a = asms::genfun(asms::AsmClass::Plain, n);
        const auto lhs = interpolate_in_t(qs, [&](const Rational& q) -> Rational {
          const Rational t = (q + 1 / q) * (q + 1 / q);
          const ExactScalar i = ExactScalar::i();
          return (asms::z_ad_hom(n, ExactScalar(q + 1 / q), i) / exact::pow(i, n)).to_rational() * a.evaluate(t);
        });
        return equal(lhs, exact::RatPoly::from_genpoly_t(asms::genfun_ht_minus(2 * n)));
      });
  }

  for (int n = 1; n <= b.cap(4); ++n) {
    const Rational q = b.s().draw_q();
    const Inhom in{b.draws(n)};
    b.add("partition.mixed" + nn("N", n), {{"q", rs(q)}, {"w", list(in.w)}}, [=] {
      const auto r = partition::z_mixed(in, ModelParams::from_q(q));
      return Outcome{r.agree ? Status::Pass : Status::Fail, r.direct.str(),
                     r.subset_sum.str() + " / " + r.quarter_turn.str(), {}};
    });
  }

  if (b.cap(4) >= 4)
    for (int k = 0; k < 2; ++k) {
      const Rational q = b.s().draw_q();
      const Params w = b.draws(3);
      b.add("partition.recurrence" + pt(k), {{"q", rs(q)}, {"w", list(w)}}, [=] {
        const ModelParams p = ModelParams::from_q(q);
        const Inhom full{{w[0], w[1], w[2], p.q() * w[2]}}, head{{w[0], w[1]}};
        ExactScalar f = p.brq(1) * p.brq(2);
        for (int i = 0; i < 2; ++i) f *= p.brq(-1, w[2] / w[i]) * p.brq(2, w[2] / w[i]);
        return equal(partition::z_mixed_direct(full, p) / partition::z_mixed_direct(head, p), f * f);
      });
    }

  for (Twist t : {Twist::Diagonal, Twist::AntiDiagonal})
    for (int n = 1; n <= b.cap(2); ++n) {
      const Rational q = b.s().draw_q();
      const Params x = b.draws(n);
      const ExactScalar bb(b.s().draw());
      b.add("partition.xi/" + tw(t) + nn("n", n), {{"q", rs(q)}, {"x", list(x)}, {"b", bb.str()}}, [=] {
        const auto r = partition::xi_scalar(t, x, bb, ModelParams::from_q(q));
        return equal(r.direct, r.closed);
      });
    }

  for (int n = 0; n <= b.cap(2); ++n) {
    const Rational q = b.s().draw_q();
    const Params x = b.draws(n);
    b.add("partition.odd_ad" + nn("n", n), {{"q", rs(q)}, {"x", list(x)}}, [=] {
      const auto r = partition::z_odd_ad(x, ModelParams::from_q(q));
      return equal(r.direct, r.closed);
    });
  }

  for (int n = 2; n <= b.cap(3); ++n) {
    const Rational q = b.s().draw_q();
    const Params z = b.draws(n);
    const Inhom in{b.draws(n)};
    b.add("partition.spin_reversal" + nn("N", n), {{"q", rs(q)}, {"z", list(z)}, {"w", list(in.w)}}, [=] {
      const auto [flipped, plain] = partition::spin_reversal_pairing(z, in, ModelParams::from_q(q));
      return equal(flipped, plain);
    });
  }

  for (int k = 0; k < 2; ++k) {
    const Rational q = b.s().draw_q();
    const Params x = b.draws(1), y = b.draws(2);
    const ExactScalar bb(b.s().draw());
    b.add("partition.za_symmetry" + pt(k), {{"q", rs(q)}, {"x", list(x)}, {"y", list(y)}, {"b", bb.str()}}, [=] {
      const ModelParams p = ModelParams::from_q(q);
      const Params yi{y[0].inverse(), y[1]};
      return equal(partition::z_a(x, yi, bb, p),
                   exact::bracket(bb * y[0]) / exact::bracket(bb / y[0]) * partition::z_a(x, y, bb, p));
    });
  }
}

// ---------------------------------------------------------------------------------------------

GenPoly tpow(long c, int e) { return GenPoly::monomial(exact::Integer(c), {e, 0, 0}); }

bool y_palindromic(const GenPoly& p, int n) {
  for (const auto& [e, c] : p.terms())
    if (p.coeff({e[0], 2 * n - e[1], e[2]}) != c) return false;
  return true;
}

void asm_suite(Builder& b) {
  using asms::AsmClass;
  using asms::ClosedForm;
  // Frozen counts; the plain column is OEIS A005130.
  const std::vector<std::tuple<AsmClass, int, long>> counts{
      {AsmClass::Plain, 1, 1},  {AsmClass::Plain, 2, 2},   {AsmClass::Plain, 3, 7},   {AsmClass::Plain, 4, 42},
      {AsmClass::Plain, 5, 429}, {AsmClass::Plain, 6, 7436}, {AsmClass::HT, 2, 2},     {AsmClass::HT, 4, 10},
      {AsmClass::HT, 6, 140},   {AsmClass::HT, 8, 5544},   {AsmClass::QT, 4, 2},      {AsmClass::QT, 8, 40},
      {AsmClass::VS, 1, 1},     {AsmClass::VS, 3, 1},      {AsmClass::VS, 5, 3},      {AsmClass::VS, 7, 26},
      {AsmClass::UU, 2, 5},     {AsmClass::UU, 4, 198},    {AsmClass::VHP, 5, 1},
  };
  for (const auto& [c, size, expected] : counts) {
    const std::string id = "asm.count/" + asms::to_string(c) + nn("s", size);
    b.add(id, {{"class", asms::to_string(c)}, {"size", std::to_string(size)}}, [c = c, size = size, expected = expected] {
      const auto all = asms::enumerate(c, size);
      const bool valid = std::all_of(all.begin(), all.end(), [](const asms::AsmMatrix& m) { return asms::is_valid(m); });
      const std::string got = std::to_string(all.size()) + (valid ? "" : " (invalid matrix produced)");
      return compare(got, std::to_string(expected));
    });
  }

  b.add("asm.genfun/plain3", {}, [] { return equal(asms::genfun(AsmClass::Plain, 3), GenPoly(6) + GenPoly::t()); });
  b.add("asm.genfun/plain4", {}, [] {
    return equal(asms::genfun(AsmClass::Plain, 4), GenPoly(24) + tpow(16, 1) + tpow(2, 2));
  });
  b.add("asm.genfun/vs5", {}, [] { return equal(asms::genfun(AsmClass::VS, 5), GenPoly(2) + GenPoly::t()); });
  b.add("asm.genfun/plain5_at_1", {}, [] {
    return compare(exact::to_string(asms::genfun(AsmClass::Plain, 5).at_one()), "429");
  });

  for (int n = 0; n <= 3; ++n)
    b.add("asm.av" + nn("n", n), {}, [n] {
      return equal(asms::closed_form(ClosedForm::AV, n), asms::genfun(AsmClass::VS, 2 * n + 1));
    });

  for (int n = 1; n <= 2; ++n)
    b.add("asm.uu/quotient" + nn("n", n), {}, [n] {
      return equal(asms::genfun(AsmClass::UU, 2 * n),
                   asms::closed_form(ClosedForm::AV, n) * asms::closed_form(ClosedForm::AUU2, n));
    });
  b.add("asm.uu/example", {}, [] {
    asms::AsmMatrix m{AsmClass::UU, 4, 4, {1, -1, 0, 1, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1}};
    const auto c = asms::counters(m);
    return compare(std::string(asms::is_valid(m) ? "valid" : "invalid") + " k=" + std::to_string(c.k) +
                       " m=" + std::to_string(c.m) + " m'=" + std::to_string(c.m_prime),
                   "valid k=2 m=1 m'=1");
  });

  b.add("asm.vhp/enumeration", {}, [] {
    return equal(asms::vhp_limit(asms::genfun(AsmClass::UU, 2), 1), asms::genfun(AsmClass::VHP, 5));
  });
  for (int n = 1; n <= 2; ++n)
    b.add("asm.vhp/quotient" + nn("n", n), {}, [n] {
      return equal(asms::vhp_limit(asms::genfun(AsmClass::UU, 2 * n), n),
                   asms::closed_form(ClosedForm::AV, n) * asms::closed_form(ClosedForm::AVHP2, n));
    });
  for (int n = 1; n <= 3; ++n)
    b.add("asm.vhp/closed" + nn("n", n), {}, [n] {
      return equal(asms::vhp_limit(asms::closed_form(ClosedForm::AUU2, n), n), asms::closed_form(ClosedForm::AVHP2, n));
    });

  for (int n = 1; n <= 4; ++n)
    b.add("asm.closed/zad_inversion" + nn("N", n), {}, [n] {
      return truth(y_palindromic(asms::closed_form(ClosedForm::ZADhom, n), n), "y^N Z_AD(y) is palindromic in y");
    });
  for (int n = 1; n <= 3; ++n)
    b.add("asm.closed/tilde" + nn("n", n), {}, [n] {
      const GenPoly a = asms::closed_form(ClosedForm::AUU2, n), at = asms::closed_form(ClosedForm::AUU2Tilde, n);
      bool ok = true;
      for (long t = 2; t < 2 + n * n + 3; ++t)
        ok = ok && a.evaluate(t, -1, -1) == exact::pow(Rational(t), n) * at.evaluate(t);
      return truth(ok, "A_UU2(t; -1, -1) = t^n A_UU2_tilde(t)");
    });
  b.add("asm.closed/examples", {}, [] {
    const std::string got = asms::closed_form(ClosedForm::AV, 2).str() + "; " +
                            asms::closed_form(ClosedForm::AUU2Tilde, 2).str() + "; " +
                            asms::closed_form(ClosedForm::AVHP2, 2).str() + "; " +
                            asms::closed_form(ClosedForm::AQT1, 2).str();
    const std::string want = (GenPoly(2) + GenPoly::t()).str() + "; " + (GenPoly(1) + GenPoly::t()).str() + "; " +
                             (GenPoly(1) + tpow(2, 1)).str() + "; " + (GenPoly(3) + GenPoly::t()).str();
    return compare(got, want);
  });
  for (int n = 1; n <= 3; ++n)
    b.add("asm.closed/pfaffian_square" + nn("n", n), {{"x", "5/2"}, {"q", "3"}}, [n] {
      const auto m1 = asms::a_qt1_matrix(n, Rational(5, 2)), m2 = asms::a_qt2_matrix(n, Rational(3));
      const Rational p1 = exact::pfaffian(m1), p2 = exact::pfaffian(m2);
      return truth(p1 * p1 == exact::det(m1) && p2 * p2 == exact::det(m2), "Pf^2 = det for both matrices");
    });

  for (int n = 1; n <= 2; ++n)
    b.add("asm.qt" + nn("n", n), {}, [n] {
      return equal(asms::genfun(AsmClass::QT, 4 * n),
                   asms::closed_form(ClosedForm::AQT1, n) * asms::closed_form(ClosedForm::AQT2, n));
    });

  for (int n = 1; n <= 4; ++n)
    b.add("asm.ht_minus" + nn("N", n), {}, [n] {
      GenPoly rhs(0);
      if (n % 2 == 0) {
        const GenPoly q1 = asms::closed_form(ClosedForm::AQT1, n / 2);
        rhs = tpow((n / 2) % 2 ? -1 : 1, n / 2) * asms::genfun(AsmClass::Plain, n) * q1 * q1;
      }
      return equal(asms::genfun_ht_minus(2 * n), rhs);
    });

  const std::vector<Rational> link_qs{Rational(2), Rational(3, 2), Rational(5, 3)};
  for (int n = 1; n <= b.cap(5); ++n)
    for (const Rational& q : link_qs) {
      if (n == 5 && q != 2) continue;  // one q at N = 5 keeps the suite in minutes
      std::string label = rs(q);
      std::replace(label.begin(), label.end(), '/', '_');
      b.add("asm.links" + nn("N", n) + "/q" + label, {{"q", rs(q)}},
            [n, q] { return from_links(asms::check_kuperberg_links(n, q)); });
    }

  for (int k = 0; k < 3; ++k) {
    const Rational a = b.s().draw(), be = b.s().draw(), a2 = b.s().draw_avoiding({a}), b2 = b.s().draw();
    b.add("asm.l_matrix/random" + pt(k), {{"alpha", rs(a)}, {"beta", rs(be)}, {"alpha'", rs(a2)}, {"beta'", rs(b2)}},
          [=] { return from_links(asms::l_matrix_checks(a, be, a2, b2, 4)); });
  }
  for (int k = 0; k < 2; ++k) {
    const Rational q = b.s().draw_q();
    const Rational x = q + 1 / q, q2 = q * q;
    b.add("asm.l_matrix/overlap" + pt(k), {{"q", rs(q)}}, [=] {
      const Rational ap = 1 / (q2 - 1), am = 1 / (1 / q2 - 1), bp = q, bm = 1 / q;
      Outcome o = from_links(asms::l_matrix_checks(ap, bp, am, bm, 4));
      const Rational a0 = (am - ap) / (ap * bp), b0 = am * bm / (am - ap);
      o.parts.emplace_back("parameters", compare(rs(a0) + ", " + rs(b0), rs(-x) + ", " + rs(1 / x)));
      return o;
    });
    b.add("asm.l_matrix/quarter_turn" + pt(k), {{"q", rs(q)}}, [=] {
      const Rational ap = 1 / (q2 - 1), am = 1 / (1 / q2 - 1);
      Outcome o = from_links(asms::l_matrix_checks(ap, 1, am, 1, 4));
      const Rational a0 = (am - ap) / ap, b0 = am / (am - ap);
      o.parts.emplace_back("parameters", compare(rs(a0) + ", " + rs(b0), rs(-q * x) + ", " + rs(q / x)));
      return o;
    });
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"local", "transfer", "sov", "partition", "asm", "all"};
  return names;
}

std::vector<Task> suite_tasks(const std::string& suite, const SuiteConfig& cfg) {
  static const std::vector<std::pair<std::string, void (*)(Builder&)>> table{
      {"local", local_suite}, {"transfer", transfer_suite}, {"sov", sov_suite},
      {"partition", partition_suite}, {"asm", asm_suite}};
  std::vector<Task> out;
  bool found = false;
  for (const auto& [name, fill] : table)
    if (suite == "all" || suite == name) {
      Builder b(name, cfg);
      fill(b);
      for (auto& t : b.tasks) out.push_back(std::move(t));
      found = true;
    }
  if (!found) throw std::invalid_argument("unknown suite '" + suite + "'");
  return out;
}

Report run_suite(const std::string& suite, const SuiteConfig& cfg) {
  Report r;
  r.command = "verify " + suite;
  r.config = {{"seed", std::to_string(cfg.seed)}, {"max_n", std::to_string(cfg.max_n)}};
  r.checks = run_tasks(suite_tasks(suite, cfg), cfg.jobs);
  return r;
}

}  // namespace vertexlab::cli
