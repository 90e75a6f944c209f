#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"
#include "suites.hpp"
#include "vertexlab/asm.hpp"
#include "vertexlab/partition.hpp"
#include "vertexlab/rational.hpp"
#include "vertexlab/sov.hpp"
#include "vertexlab/transfer.hpp"
#include "vertexlab/vertex.hpp"

namespace {

using namespace vertexlab;
using exact::ExactScalar;
using exact::Rational;

// Errors in user-supplied values; reported with exit code 2 like parse errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_arg(const std::string& name, const std::string& text) {
  try {
    return exact::parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError("--" + name + ": '" + text + "' is not a rational number");
  }
}

std::vector<ExactScalar> list_arg(const std::string& name, const std::string& text) {
  std::vector<ExactScalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.emplace_back(rational_arg(name, item));
  return out;
}

vertex::ModelParams model_for(const Rational& q) {
  if (q == 0 || q * q * q * q == 1) throw UsageError("--q must be non-zero with q^4 != 1");
  return vertex::ModelParams::from_q(q);
}

transfer::Twist twist_arg(const std::string& s) {
  try {
    return transfer::parse_twist(s);
  } catch (const std::exception&) {
    throw UsageError("--twist must be d or ad");
  }
}

void anchor_line(const std::string& family) { std::cout << "anchor: " << cli::anchor_for(family + "/") << '\n'; }

int cmd_verify(const std::string& suite, const cli::SuiteConfig& cfg, const std::string& only, cli::Format f, bool timings) {
  cli::Report r;
  r.command = "verify " + suite;
  r.config = {{"seed", std::to_string(cfg.seed)}, {"max_n", std::to_string(cfg.max_n)}};
  std::vector<cli::Task> tasks = cli::suite_tasks(suite, cfg);
  if (!only.empty()) {
    r.config.emplace_back("only", only);
    std::erase_if(tasks, [&](const cli::Task& t) { return t.id.rfind(only, 0) != 0; });
  }
  r.checks = cli::run_tasks(tasks, cfg.jobs);
  std::cout << cli::render(r, f, timings);
  return r.ok() ? 0 : 1;
}

int cmd_genfun(const std::string& cls, int size, const std::string& form, int n, bool compare) {
  if (!form.empty()) {
    const auto f = asms::parse_closed_form(form);
    anchor_line("asm.closed");
    std::cout << "closed_form: " << asms::to_string(f) << "\nn: " << n << '\n';
    std::cout << "value: " << asms::closed_form(f, n).str() << '\n';
    return 0;
  }
  const auto c = asms::parse_class(cls);
  if (!asms::size_allowed(c, size)) throw UsageError("size " + std::to_string(size) + " is not available for class " + cls);
  anchor_line("asm.genfun");
  const auto g = asms::genfun(c, size);
  std::cout << "class: " << asms::to_string(c) << "\nsize: " << size << "\ngenfun: " << g.str()
            << "\ncount: " << exact::to_string(g.at_one()) << '\n';
  if (!compare) return 0;
  // Closed-form side for the classes that have one.
  exact::GenPoly closed;
  switch (c) {
    case asms::AsmClass::VS: closed = asms::closed_form(asms::ClosedForm::AV, (size - 1) / 2); break;
    case asms::AsmClass::QT:
      closed = asms::closed_form(asms::ClosedForm::AQT1, size / 4) * asms::closed_form(asms::ClosedForm::AQT2, size / 4);
      break;
    case asms::AsmClass::UU:
      closed = asms::closed_form(asms::ClosedForm::AV, size / 2) * asms::closed_form(asms::ClosedForm::AUU2, size / 2);
      break;
    case asms::AsmClass::VHP:
      closed = asms::closed_form(asms::ClosedForm::AV, (size - 1) / 4) *
               asms::closed_form(asms::ClosedForm::AVHP2, (size - 1) / 4);
      break;
    default: std::cout << "closed_form: none for this class\n"; return 0;
  }
  std::cout << "closed_form: " << closed.str() << "\nmatch: " << (closed == g ? "yes" : "no") << '\n';
  return closed == g ? 0 : 1;
}

int cmd_partition(const std::string& domain, const std::string& rows, const std::string& cols, const std::string& b,
                  const std::string& c, const std::string& q, bool brute) {
  partition::DomainSpec d;
  try {
    d.kind = partition::parse_domain(domain);
  } catch (const std::exception&) {
    throw UsageError("unknown domain '" + domain + "'");
  }
  d.rows = list_arg("rows", rows);
  d.cols = list_arg("cols", cols);
  d.b = ExactScalar(rational_arg("b", b));
  d.c = ExactScalar(rational_arg("c", c));
  const Rational qv = rational_arg("q", q);
  // The cap domain lives over Q(s) with q = s^2; --q is then read as s.
  const vertex::ModelParams p =
      d.kind == partition::Domain::ZcapDomain ? vertex::ModelParams::from_half(qv) : model_for(qv);
  anchor_line("partition.oracle");
  std::cout << "domain: " << partition::to_string(d.kind) << '\n';
  const ExactScalar closed = partition::z_closed(d, p);
  std::cout << "closed_form: " << closed.str() << '\n';
  if (!brute) return 0;
  const ExactScalar bf = partition::z_bruteforce(d, p);
  std::cout << "brute_force: " << bf.str() << "\nmatch: " << (bf == closed ? "yes" : "no") << '\n';
  return bf == closed ? 0 : 1;
}

int cmd_component(const std::string& twist, int n, const std::string& pattern, const std::string& q) {
  const auto t = twist_arg(twist);
  if (n < 1 || n > 6) throw UsageError("--N must be in 1..6");
  int letters = 0;  // UTF-8 arrows count once; separators not at all
  for (unsigned char ch : pattern)
    if ((ch & 0xC0) != 0x80 && ch != ' ' && ch != ',') ++letters;
  if (letters != n) throw UsageError("--pattern must have N letters");
  const auto p = model_for(rational_arg("q", q));
  const auto phi = sov::phi(t, n, p);
  anchor_line("sov.polynomiality");
  std::cout << "twist: " << transfer::to_string(t) << "\nN: " << n << "\npattern: " << pattern
            << "\ncomponent: " << phi[sov::parse_pattern(pattern)].str() << '\n';
  return 0;
}

int cmd_sumrule(const std::string& twist, int n, const std::string& q, const std::string& y) {
  const auto t = twist_arg(twist);
  if (n < 1 || n > 6) throw UsageError("--N must be in 1..6");
  const Rational qv = rational_arg("q", q);
  const auto p = model_for(qv);
  const ExactScalar x(qv + 1 / qv), tt = x * x;
  const auto phi = sov::phi(t, n, p);
  anchor_line("asm.links");
  std::cout << "twist: " << transfer::to_string(t) << "\nN: " << n << "\nq: " << exact::to_string(qv) << '\n';
  const bool plain_ok = n <= asms::max_size(asms::AsmClass::Plain);
  const ExactScalar a_n = plain_ok ? asms::evaluate(asms::genfun(asms::AsmClass::Plain, n), tt) : ExactScalar(0);
  if (t == transfer::Twist::Diagonal) {
    const ExactScalar norm = exact::dot(phi, phi);
    std::cout << "norm: " << norm.str() << '\n';
    if (!plain_ok) return 0;
    std::cout << "A(N; x^2): " << a_n.str() << "\nmatch: " << (norm == a_n ? "yes" : "no") << '\n';
    return norm == a_n ? 0 : 1;
  }
  ExactScalar yv;
  if (y == "q") yv = ExactScalar(qv);
  else if (y == "i") yv = ExactScalar::i();
  else yv = ExactScalar(rational_arg("y", y));
  if (yv.is_zero()) throw UsageError("--y must be non-zero");
  ExactScalar direct(0);
  for (std::size_t s = 0; s < phi.size(); ++s)
    direct += exact::pow(yv, transfer::magnetisation(s, n)) * phi[s] * phi[s];
  const ExactScalar det = asms::z_ad_hom(n, x, yv);
  std::cout << "y: " << yv.str() << "\ndirect: " << direct.str() << "\ndeterminant: " << det.str()
            << "\nmatch: " << (direct == det ? "yes" : "no") << '\n';
  if (plain_ok && y == "q") std::cout << "x^N A(N; x^2): " << (exact::pow(x, n) * a_n).str() << '\n';
  if (plain_ok && y == "1" && 2 * n <= asms::max_size(asms::AsmClass::HT))
    std::cout << "A_HT(2N; x^2) / A(N; x^2): " << (asms::evaluate(asms::genfun(asms::AsmClass::HT, 2 * n), tt) / a_n).str()
              << '\n';
  if (plain_ok && y == "i" && 2 * n <= asms::max_size(asms::AsmClass::HT))
    std::cout << "i^N A_HT-(2N; x^2) / A(N; x^2): "
              << (exact::pow(ExactScalar::i(), n) * asms::evaluate(asms::genfun_ht_minus(2 * n), tt) / a_n).str() << '\n';
  return direct == det ? 0 : 1;
}

int cmd_spectrum(int n, double x, const std::string& twist) {
  const auto t = twist_arg(twist);
  if (n < 2 || n > 6) throw UsageError("--N must be in 2..6");
  const auto r = transfer::spectrum_probe(n, x, t);
  anchor_line("transfer.spectrum");
  std::cout << "note: approximate (floating-point eigenvalues)\n";
  std::cout << "twist: " << transfer::to_string(t) << "\nN: " << n << "\nx: " << x << '\n';
  for (const auto& s : r.sectors) {
    std::cout << "sector " << s.label << ":";
    for (double e : s.eigenvalues) std::cout << ' ' << std::setprecision(10) << e;
    std::cout << '\n';
  }
  std::cout << "nonzero_parts_coincide: " << (r.nonzero_parts_coincide ? "yes" : "no")
            << "\nmax_pair_deviation: " << r.max_pair_deviation << "\nmin_eigenvalue: " << r.min_eigenvalue
            << "\nzero_degeneracy: " << r.zero_degeneracy << "\nzero_in_special_sector: " << r.zero_in_special_sector
            << '\n';
  return 0;
}

int cmd_enumerate(const std::string& cls, int size, int limit) {
  const auto c = asms::parse_class(cls);
  if (!asms::size_allowed(c, size)) throw UsageError("size " + std::to_string(size) + " is not available for class " + cls);
  const auto all = asms::enumerate(c, size);
  anchor_line("asm.count");
  std::cout << "class: " << asms::to_string(c) << "\nsize: " << size << "\ncount: " << all.size() << '\n';
  int shown = 0;
  for (const auto& m : all) {
    if (limit >= 0 && shown++ >= limit) break;
    const auto k = asms::counters(m);
    const std::string body = m.str();
    std::cout << "\nk=" << k.k << " m=" << k.m << " m'=" << k.m_prime << '\n' << body;
    if (body.empty() || body.back() != '\n') std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vertexlab: exact checks for the twisted spin-one vertex models and ASM enumeration"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  cli::SuiteConfig cfg;
  std::string only;
  bool json = false, csv = false, timings = false;
  verify->add_option("suite", suite, "local, transfer, sov, partition, asm or all")
      ->required()
      ->check(CLI::IsMember(cli::suite_names()));
  verify->add_option("--seed", cfg.seed, "seed for every random parameter");
  verify->add_option("--max-n", cfg.max_n, "lower every size cap to this value")->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--only", only, "run only checks whose id starts with this prefix");
  auto* json_flag = verify->add_flag("--json", json, "JSON report");
  verify->add_flag("--csv", csv, "CSV report")->excludes(json_flag);
  verify->add_flag("--timings", timings, "include elapsed times in JSON/CSV");

  auto* compute = app.add_subcommand("compute", "compute a single quantity");
  compute->require_subcommand(1);

  auto* genfun = compute->add_subcommand("genfun", "ASM generating function by enumeration or a closed form");
  std::string cls = "plain", form;
  int size = 0, n_form = 0;
  bool compare = false;
  genfun->add_option("--class", cls, "plain, ht, qt, vs, uu, vhp");
  genfun->add_option("--size", size, "number of rows");
  genfun->add_option("--closed-form", form, "ZADhom, A_V, A_QT1, A_QT2, A_UU2, A_UU2_tilde, A_VHP2");
  genfun->add_option("--n", n_form, "closed-form index")->check(CLI::Range(0, 8));
  genfun->add_flag("--compare", compare, "compare the enumeration with its closed form");

  auto* part = compute->add_subcommand("partition", "partition function of a domain");
  std::string domain, rows, cols, bstr = "1", cstr = "1", qstr = "2";
  bool brute = false;
  part->add_option("--domain", domain, "dwbc, ht+, ht-, qt, u, uu, dwbc10, za, cap")->required();
  part->add_option("--rows", rows, "comma-separated row parameters")->required();
  part->add_option("--cols", cols, "comma-separated column parameters");
  part->add_option("--b", bstr, "boundary parameter b");
  part->add_option("--c", cstr, "boundary parameter c");
  part->add_option("--q", qstr, "deformation parameter (s with q = s^2 for cap)");
  part->add_flag("--brute-force", brute, "also sum over all configurations");

  auto* comp = compute->add_subcommand("component", "component of the homogeneous zero-energy state");
  std::string twist = "d", pattern;
  int big_n = 2;
  comp->add_option("--twist", twist, "d or ad");
  comp->add_option("--N", big_n, "number of sites");
  comp->add_option("--pattern", pattern, "U/0/D letters, site 0 first")->required();
  comp->add_option("--q", qstr, "deformation parameter");

  auto* sum = compute->add_subcommand("sumrule", "overlap sum rule at one q");
  std::string ystr = "q";
  sum->add_option("--twist", twist, "d (norm) or ad (y-weighted)");
  sum->add_option("--N", big_n, "number of sites");
  sum->add_option("--q", qstr, "deformation parameter");
  sum->add_option("--y", ystr, "q, i, or a rational");

  auto* spec_sub = compute->add_subcommand("spectrum", "floating-point spectrum of the spin-one chain");
  double x = 0;
  spec_sub->add_option("--N", big_n, "number of sites");
  spec_sub->add_option("--x", x, "x = q + 1/q")->required();
  spec_sub->add_option("--twist", twist, "d or ad");

  auto* spectrum = app.add_subcommand("spectrum", "alias of compute spectrum");
  spectrum->add_option("--N", big_n, "number of sites");
  spectrum->add_option("--x", x, "x = q + 1/q")->required();
  spectrum->add_option("--twist", twist, "d or ad");

  auto* enumerate = app.add_subcommand("enumerate", "list the matrices of an ASM class");
  int limit = -1;
  enumerate->add_option("--class", cls, "plain, ht, qt, vs, uu, vhp");
  enumerate->add_option("--size", size, "number of rows")->required();
  enumerate->add_option("--limit", limit, "print at most this many matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      const cli::Format f = json ? cli::Format::Json : csv ? cli::Format::Csv : cli::Format::Human;
      return cmd_verify(suite, cfg, only, f, timings);
    }
    if (*genfun) {
      if (form.empty() && size <= 0) throw UsageError("give --size or --closed-form");
      return cmd_genfun(cls, size, form, n_form, compare);
    }
    if (*part) return cmd_partition(domain, rows, cols, bstr, cstr, qstr, brute);
    if (*comp) return cmd_component(twist, big_n, pattern, qstr);
    if (*sum) return cmd_sumrule(twist, big_n, qstr, ystr);
    if (*spec_sub || *spectrum) return cmd_spectrum(big_n, x, twist);
    if (*enumerate) return cmd_enumerate(cls, size, limit);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "unsupported size: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
