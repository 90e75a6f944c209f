#include "report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace vertexlab::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

int Report::count(Status s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

const std::map<std::string, std::string>& anchor_registry() {
  static const std::map<std::string, std::string> registry = {
      {"local.ybe", "Yang-Baxter equation for the spin-1/2 / spin-1 R-matrices R^(m,n)"},
      {"local.inversion_crossing", "inversion and crossing relations of the R-matrices"},
      {"local.q_inversion", "q -> 1/q symmetry of the R-matrices"},
      {"local.unitarity", "unitarity of the braid-form R-matrices"},
      {"local.highest_weight", "highest-weight covector relation of R^(1,2)"},
      {"local.special_points", "R-matrices at the special spectral parameters"},
      {"local.projector", "projector absorption in the fusion procedure"},
      {"local.boundary", "boundary Yang-Baxter and fish equations for the boundary states"},
      {"transfer.fusion", "fusion relation T2(z) = T1(z) T1(qz) - a(qz) d(z)"},
      {"transfer.commuting", "commuting spin-1/2 transfer matrices"},
      {"transfer.hamiltonian", "spin-one Hamiltonian from the logarithmic derivative of T2 at z = 1"},
      {"transfer.null_inhom", "special eigenvector: T1 psi = 0, T2 psi = -a(qz) d(z) psi (inhomogeneous)"},
      {"transfer.null_hom", "special eigenvector: T1 psi = 0, T2 psi = -a(qz) d(z) psi (homogeneous)"},
      {"transfer.zero_energy", "zero-energy state of the twisted spin-one chain, H phi = 0"},
      {"transfer.spectrum", "Z2 sector pairing of non-zero levels and the simple E = 0 level"},
      {"transfer.conjecture", "non-negativity of the spectrum (conjectural, reported only)"},
      {"sov.structure", "separated-variables basis: D eigenbasis, B/C hopping, scalar products, completeness"},
      {"sov.reconstruction", "anti-diagonal null vector from separated variables against the kernel"},
      {"sov.eigenvector", "transposition, q-inversion, exchange, translation and Z2 properties of psi"},
      {"sov.bethe_uniqueness", "uniqueness of the diagonal null vector in the M = 0 sector"},
      {"sov.polynomiality", "zero-energy components as polynomials in x = q + 1/q"},
      {"partition.oracle", "closed-form partition functions against exhaustive summation"},
      {"partition.wheel", "wheel condition for Z_A at a geometric triple"},
      {"partition.sumrule", "determinant for <psi_AD| y^M |psi_AD>"},
      {"partition.sumrule_hom", "homogeneous overlap sum rule as ASM generating functions in t = x^2"},
      {"partition.mixed", "<psi_D|psi_AD>: direct, subset sum and quarter-turn factorisation"},
      {"partition.recurrence", "recurrence of the mixed scalar product at w_4 = q w_3"},
      {"partition.xi", "boundary-state overlaps Xi_D and Xi_AD"},
      {"partition.odd_ad", "odd-length anti-diagonal overlap at b = 1/q"},
      {"partition.spin_reversal", "spin-reversal pairing for the diagonal null vector"},
      {"partition.za_symmetry", "y -> 1/y covariance of Z_A"},
      {"asm.count", "ASM class enumeration counts"},
      {"asm.genfun", "t-enumeration of ASMs and VSASMs"},
      {"asm.av", "VSASM determinant against enumeration"},
      {"asm.uu", "UUASM generating function against A_V A_UU^(2) and the 4 x 4 weight example"},
      {"asm.vhp", "VHPASM generating function as a limit of UUASM data"},
      {"asm.closed", "internal identities of the closed forms (y-inversion, y = z = -1, pfaffian squares)"},
      {"asm.qt", "QTASM generating function as a product of two pfaffians"},
      {"asm.ht_minus", "HTASM refinement (-1)^m and its quarter-turn factorisation"},
      {"asm.links", "sum rules, special components and homogeneous partition functions at rational q"},
      {"asm.l_matrix", "binomial L-matrices: determinant, L L^t series, product law, divided differences"},
  };
  return registry;
}

std::string family_of(const std::string& id) { return id.substr(0, id.find('/')); }

const std::string& anchor_for(const std::string& id) {
  const auto& reg = anchor_registry();
  auto it = reg.find(family_of(id));
  if (it == reg.end()) throw std::out_of_range("no anchor for check '" + id + "'");
  return it->second;
}

std::vector<CheckResult> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<std::vector<CheckResult>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      const Task& t = tasks[k];
      Outcome o;
      const auto start = std::chrono::steady_clock::now();
      try {
        o = t.run();
      } catch (const std::exception& e) {
        o = Outcome{Status::Fail, std::string("error: ") + e.what(), "", {}};
      }
      const double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      auto emit = [&](const std::string& id, Outcome& part) {
        slots[k].push_back(CheckResult{id, anchor_for(id), t.params, part.status, std::move(part.lhs),
                                       std::move(part.rhs), elapsed});
      };
      if (o.parts.empty()) emit(t.id, o);
      for (auto& [name, part] : o.parts) emit(t.id + "/" + name, part);
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<CheckResult> out;
  for (auto& slot : slots)
    for (auto& r : slot) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return out;
}

Outcome compare(const std::string& lhs, const std::string& rhs) {
  return {lhs == rhs ? Status::Pass : Status::Fail, lhs, rhs, {}};
}

Outcome truth(bool ok, const std::string& what) {
  return {ok ? Status::Pass : Status::Fail, ok ? what : "violated", what, {}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string joined(const ParamList& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ';';
    out += k + "=" + v;
  }
  return out;
}

std::string ms(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << v;
  return os.str();
}

}  // namespace

std::string render(const Report& r, Format f, bool timings) {
  std::ostringstream os;
  switch (f) {
    case Format::Json: {
      nlohmann::ordered_json j;
      j["command"] = r.command;
      nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
      for (const auto& [k, v] : r.config) cfg[k] = v;
      j["config"] = cfg;
      nlohmann::ordered_json checks = nlohmann::ordered_json::array();
      for (const CheckResult& c : r.checks) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["anchor"] = c.anchor;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : c.params) params[k] = v;
        e["params"] = params;
        e["status"] = to_string(c.status);
        e["lhs"] = c.lhs;
        e["rhs"] = c.rhs;
        if (timings) e["elapsed_ms"] = ms(c.elapsed_ms);
        checks.push_back(e);
      }
      j["checks"] = checks;
      j["summary"] = {{"total", std::to_string(r.checks.size())},
                      {"pass", std::to_string(r.count(Status::Pass))},
                      {"fail", std::to_string(r.count(Status::Fail))},
                      {"skipped", std::to_string(r.count(Status::Skipped))}};
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      os << "id,anchor,status,lhs,rhs,params" << (timings ? ",elapsed_ms" : "") << '\n';
      for (const CheckResult& c : r.checks) {
        os << csv_field(c.id) << ',' << csv_field(c.anchor) << ',' << to_string(c.status) << ',' << csv_field(c.lhs)
           << ',' << csv_field(c.rhs) << ',' << csv_field(joined(c.params));
        if (timings) os << ',' << ms(c.elapsed_ms);
        os << '\n';
      }
      break;
    }
    case Format::Human: {
      for (const CheckResult& c : r.checks) {
        const char* tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP";
        os << tag << "  " << c.id << "  (" << ms(c.elapsed_ms) << " ms)";
        if (c.status == Status::Skipped) os << "  " << c.lhs;
        os << '\n';
        if (c.status == Status::Fail) {
          os << "      anchor: " << c.anchor << '\n';
          if (!c.params.empty()) os << "      params: " << joined(c.params) << '\n';
          os << "      lhs: " << c.lhs << "\n      rhs: " << c.rhs << '\n';
        }
      }
      os << r.count(Status::Pass) << " passed, " << r.count(Status::Fail) << " failed, " << r.count(Status::Skipped)
         << " skipped\n";
      break;
    }
  }
  return os.str();
}

}  // namespace vertexlab::cli
