#include "mevreg/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <numeric>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mevreg/errors.hpp"
#include "mevreg/identities.hpp"
#include "mevreg/mellin.hpp"
#include "mevreg/mev.hpp"
#include "mevreg/regulator.hpp"

namespace mevreg {

using Json = nlohmann::ordered_json;

namespace {

// Shortest text that round-trips the double; keeps output byte-stable.
std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

int default_level(const RunConfig& c) { return c.level.value_or(5); }

// --- mev ---------------------------------------------------------------

void run_mev(const RunConfig& c, std::ostream& out) {
  if (c.params.empty() || c.params.size() > 3) throw DomainError("mev needs 1 to 3 --params");
  MevOptions options;
  options.cutoff = c.cutoff;
  std::string word;
  for (const auto& p : c.params) word += (word.empty() ? "(" : " (") + p.str() + ")";
  Complex value;
  double bound = 0.0;
  if (c.signs.empty()) {
    const MevResult r = lambda_mev(c.params, options);
    value = r.value;
    bound = r.truncation_bound;
  } else {
    const std::vector<Sign> signs = parse_signs(c.signs);
    if (signs.size() != c.params.size()) throw DomainError("--signs must have one sign per parameter");
    value = lambda_signed(c.params, signs, options);
  }
  switch (c.format) {
    case OutputFormat::Json: {
      Json j;
      j["schema"] = 1;
      j["command"] = "mev";
      j["word"] = word;
      if (!c.signs.empty()) j["signs"] = c.signs;
      j["cutoff"] = c.cutoff.str();
      j["value"] = complex_json(value);
      j["truncation_bound"] = bound;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "word,signs,value_re,value_im,truncation_bound\n"
          << '"' << word << "\"," << c.signs << ',' << num(value.real()) << ',' << num(value.imag()) << ','
          << num(bound) << '\n';
      break;
    case OutputFormat::Text:
      out << "Lambda" << (c.signs.empty() ? "" : "^" + c.signs) << word << " = " << num(value.real())
          << (value.imag() < 0 ? " - " : " + ") << num(std::abs(value.imag())) << "i\n"
          << "truncation bound " << num(bound) << '\n';
      break;
  }
}

// --- regulator -----------------------------------------------------------

void run_regulator(const RunConfig& c, std::ostream& out) {
  if (!c.a || !c.b) throw DomainError("regulator needs --a and --b");
  MevOptions options;
  options.cutoff = c.cutoff;
  const RegulatorReport r = regulator_report(*c.a, *c.b, c.level.value_or(0), options);
  switch (c.format) {
    case OutputFormat::Json: {
      Json j;
      j["schema"] = 1;
      j["command"] = "regulator";
      j["a"] = r.a.str();
      j["b"] = r.b.str();
      j["c"] = r.c.str();
      j["level"] = r.level;
      j["component"] = r.component;
      j["g_mev"] = r.g_mev;
      j["g_lvalue"] = r.g_lvalue;
      j["beilinson"] = r.beilinson;
      j["zeta3_term"] = r.zeta3;
      j["residual_thm1"] = r.residual_thm1;
      j["residual_thm2"] = r.residual_thm2;
      j["measured_ratio"] = r.measured_ratio;
      j["cutoff"] = r.cutoff.str();
      j["truncation_bound"] = r.truncation_bound;
      Json terms = Json::array();
      for (const auto& t : r.terms) terms.push_back({{"word", t.word}, {"value", complex_json(t.value)}});
      j["terms"] = std::move(terms);
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "a,b,c,level,component,g_mev,g_lvalue,beilinson,zeta3_term,residual_thm1,residual_thm2,measured_ratio\n"
          << '"' << r.a.str() << "\",\"" << r.b.str() << "\",\"" << r.c.str() << "\"," << r.level << ','
          << r.component << ',' << num(r.g_mev) << ',' << num(r.g_lvalue) << ',' << num(r.beilinson) << ','
          << num(r.zeta3) << ',' << num(r.residual_thm1) << ',' << num(r.residual_thm2) << ','
          << num(r.measured_ratio) << '\n';
      break;
    case OutputFormat::Text:
      out << "a = (" << r.a.str() << ")  b = (" << r.b.str() << ")  c = (" << r.c.str() << ")  N = " << r.level
          << "  component " << r.component << '\n'
          << "G via MEVs        " << num(r.g_mev) << '\n'
          << "G via L-value     " << num(r.g_lvalue) << '\n'
          << "Beilinson         " << num(r.beilinson) << '\n'
          << "zeta(3) term      " << num(r.zeta3) << '\n'
          << "residual (L)      " << num(r.residual_thm1) << '\n'
          << "residual (B)      " << num(r.residual_thm2) << '\n'
          << "(G + z3) / B      " << num(r.measured_ratio) << '\n';
      for (const auto& t : r.terms) {
        out << "  " << t.word << " = " << num(t.value.real()) << " + " << num(t.value.imag()) << "i\n";
      }
      break;
  }
}

// --- qdump ---------------------------------------------------------------

void run_qdump(const RunConfig& c, std::ostream& out) {
  if (c.params.size() != 1) throw DomainError("qdump needs exactly one --params");
  const EisensteinSpec spec{c.family, c.weight, c.params.front()};
  spec.validate();
  const TauQSeries f = series_for(spec, c.cutoff);
  if (c.format == OutputFormat::Json) {
    Json j;
    j["schema"] = 1;
    j["command"] = "qdump";
    j["spec"] = spec.str();
    j["cutoff"] = c.cutoff.str();
    Json rows = Json::array();
    for (const auto& [key, v] : f.terms()) {
      rows.push_back({{"alpha", key.alpha.str()}, {"tau_power", key.tau_power}, {"coeff", complex_json(v)}});
    }
    j["terms"] = std::move(rows);
    out << j.dump(2) << '\n';
    return;
  }
  out << "# spec: " << spec.str() << " cutoff=" << c.cutoff.str() << '\n';
  for (const auto& [key, v] : f.terms()) {
    out << key.alpha.num() << ',' << key.alpha.den() << ',' << key.tau_power << ',' << num(v.real()) << ','
        << num(v.imag()) << '\n';
  }
}

// --- verify --------------------------------------------------------------

using Rows = std::vector<ResidualReport>;

Rows suite_bg(const RunConfig& c) {
  const int n = default_level(c);
  Rows rows;
  // Weight-3 relation for E over a spread of pairs.
  int taken = 0;
  for (int i = 1; i < n * n && taken < 8; i += 3) {
    for (int j = 2; j < n * n && taken < 8; j += 5) {
      const EllipticParam x = EllipticParam::torsion(i / n, i % n, n);
      const EllipticParam y = EllipticParam::torsion(j / n, j % n, n);
      if ((x + y).is_zero() || x == y) continue;
      rows.push_back(check_bg_E(x, y, c.cutoff));
      ++taken;
    }
  }
  for (int x1 = 1; x1 < n; ++x1) {
    const int y1 = (x1 % (n - 1)) + 1, u2 = ((2 * x1) % (n - 1)) + 1, v2 = ((3 * x1 + 1) % (n - 1)) + 1;
    if ((x1 + y1) % n == 0 || (u2 - v2) % n == 0) continue;
    rows.push_back(check_bg_G1(Rational(x1, n), Rational(y1, n), Rational(u2, n), Rational(v2, n), c.cutoff));
  }
  for (int u1 = 1; u1 < n; ++u1) rows.push_back(check_bg_G2(Rational(u1, n), Rational((2 * u1) % n, n), c.cutoff));
  for (int k = 1; k <= 3; ++k) rows.push_back(check_partial_fourier(k, n, 1, n - 1, c.cutoff));
  for (int j = 1; j < n; ++j) rows.push_back(check_dilog_sum(j, n));
  if (n > 2) rows.push_back(check_dilog_five_term(Rational(1, n), Rational(2, n)));
  return rows;
}

std::vector<std::pair<EllipticParam, EllipticParam>> pairs_for(const RunConfig& c, std::size_t count) {
  if (c.a && c.b) return {{*c.a, *c.b}};
  return sample_pairs(default_level(c), count);
}

Rows suite_shuffle(const RunConfig& c) {
  MevOptions options;
  options.cutoff = c.cutoff;
  Rows rows;
  for (const auto& [a, b] : pairs_for(c, 2)) {
    for (auto& r : check_shuffle_ledger(a, b, options)) rows.push_back(std::move(r));
    const EllipticParam s = a + b;
    rows.push_back(check_mev_shuffle({a}, {b}, options));
    rows.push_back(check_mev_shuffle({a}, {b, s}, options));
    rows.push_back(check_path_reversal({a, b}, options));
    rows.push_back(check_path_reversal({a, b, s}, options));
  }
  return rows;
}

Rows suite_rz(const RunConfig& c) {
  Rows rows;
  for (const auto& [u, v] : pairs_for(c, 3)) {
    for (int ell : {2, 3}) {
      ResidualReport r;
      r.identity = "im_I_two_routes";
      r.instance = "u=(" + u.str() + ") v=(" + v.str() + ") l=" + std::to_string(ell);
      r.residual = std::abs(im_I_direct(u, v, ell) - im_I_rz(u, v, ell));
      r.tolerance = 1e-8;
      rows.push_back(r);
    }
  }
  return rows;
}

Rows suite_theorem(const RunConfig& c, bool beilinson_relation) {
  MevOptions options;
  options.cutoff = c.cutoff;
  const auto pairs = pairs_for(c, 4);
  // Independent pairs are evaluated concurrently; rows keep the input order.
  std::vector<std::future<ResidualReport>> jobs;
  for (const auto& [a, b] : pairs) {
    jobs.push_back(std::async(std::launch::async, [&, a, b] {
      const int n = c.level.value_or(static_cast<int>(std::lcm(std::lcm(a.x1.den(), a.x2.den()),
                                                               std::lcm(b.x1.den(), b.x2.den()))));
      const double g = goncharov_mev(a, b, options);
      ResidualReport r;
      r.instance = "a=(" + a.str() + ") b=(" + b.str() + ") N=" + std::to_string(n);
      r.tolerance = 1e-7;
      if (beilinson_relation) {
        r.identity = "regulator_beilinson";
        r.residual = std::abs(g - (static_cast<double>(n) * n / 6 * beilinson_level(a, b, n) - zeta3_term(a, b)));
      } else {
        r.identity = "regulator_lvalue";
        r.residual = std::abs(g - goncharov_lvalue(a, b));
      }
      return r;
    }));
  }
  Rows rows;
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

Rows suite_k2(const RunConfig& c) {
  Rows rows;
  for (const auto& [a, b] : pairs_for(c, 3)) {
    const double k = k2_regulator(a, b);
    ResidualReport r;
    r.identity = "k2_quadrature";
    r.instance = "a=(" + a.str() + ") b=(" + b.str() + ")";
    r.residual = std::abs(k - k2_regulator_quadrature(a, b));
    r.tolerance = 1e-7;
    rows.push_back(r);
    r.identity = "k2_antisymmetry";
    r.residual = std::abs(k + k2_regulator(b, a));
    r.tolerance = kLedgerTolerance;
    rows.push_back(r);
  }
  return rows;
}

void run_verify(const RunConfig& c, std::ostream& out, bool& failed) {
  static const std::vector<std::pair<std::string, std::function<Rows(const RunConfig&)>>> kSuites = {
      {"bg", suite_bg},
      {"shuffle", suite_shuffle},
      {"rz", suite_rz},
      {"thm1", [](const RunConfig& cfg) { return suite_theorem(cfg, false); }},
      {"thm2", [](const RunConfig& cfg) { return suite_theorem(cfg, true); }},
      {"k2", suite_k2},
  };
  VerdictTable table;
  bool known = false;
  for (const auto& [name, fn] : kSuites) {
    if (c.suite != "all" && c.suite != name) continue;
    known = true;
    for (auto& r : fn(c)) table.rows.push_back(std::move(r));
  }
  if (!known) throw DomainError("unknown suite '" + c.suite + "'");
  if (c.tolerance) {
    for (auto& r : table.rows) r.tolerance = *c.tolerance;
  }
  failed = !table.all_passed();
  switch (c.format) {
    case OutputFormat::Json: out << table.to_json(); break;
    case OutputFormat::Text: out << table.to_text(); break;
    case OutputFormat::Csv:
      out << "identity,instance,residual,tolerance,passed\n";
      for (const auto& r : table.rows) {
        out << r.identity << ",\"" << r.instance << "\"," << num(r.residual) << ',' << num(r.tolerance) << ','
            << (r.passed() ? "true" : "false") << '\n';
      }
      break;
  }
}

}  // namespace

void RunConfig::validate() const {
  if (cutoff < Rational(4)) throw DomainError("cutoff must be at least 4");
  if (tolerance && !(*tolerance >= 1e-12)) throw DomainError("tolerance must be at least 1e-12");
  if (level && *level < 2) throw DomainError("level must be at least 2");
  if (a.has_value() != b.has_value()) throw DomainError("--a and --b go together");
}

Command parse_command(const std::string& name) {
  if (name == "mev") return Command::Mev;
  if (name == "regulator") return Command::Regulator;
  if (name == "qdump") return Command::Qdump;
  if (name == "verify") return Command::Verify;
  throw DomainError("unknown command '" + name + "'");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw DomainError("unknown format '" + name + "'");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  bool failed = false;
  try {
    config.validate();
    switch (config.command) {
      case Command::Mev: run_mev(config, buffer); break;
      case Command::Regulator: run_regulator(config, buffer); break;
      case Command::Qdump: run_qdump(config, buffer); break;
      case Command::Verify: run_verify(config, buffer, failed); break;
    }
  } catch (const BoundaryError& e) {
    err << "error: hypothesis violated (" << e.hypothesis() << "): " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::overflow_error& e) {
    err << "error: rational overflow: " << e.what() << '\n';
    return 2;
  }
  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << *config.output_path << '\n';
      return 2;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return failed ? 1 : 0;
}

}  // namespace mevreg
