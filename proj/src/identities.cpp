#include "mevreg/identities.hpp"

#include <array>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mevreg/errors.hpp"
#include "mevreg/regulator.hpp"

namespace mevreg {

namespace {

ResidualReport series_report(std::string identity, std::string instance, const TauQSeries& lhs,
                             const TauQSeries& rhs) {
  const SeriesDifference d = max_coefficient_difference(lhs, rhs);
  ResidualReport r;
  r.identity = std::move(identity);
  r.instance = std::move(instance);
  r.residual = d.max_abs;
  r.tolerance = kSeriesTolerance;
  r.worst = d.worst;
  r.coefficientwise = true;
  return r;
}

ResidualReport scalar_report(std::string identity, std::string instance, double lhs, double rhs,
                             double tolerance = kLedgerTolerance) {
  ResidualReport r;
  r.identity = std::move(identity);
  r.instance = std::move(instance);
  r.residual = std::abs(lhs - rhs);
  r.tolerance = tolerance;
  return r;
}

std::string pair_str(const EllipticParam& x, const EllipticParam& y) {
  return "x=(" + x.str() + ") y=(" + y.str() + ")";
}

}  // namespace

ResidualReport check_bg_E(const EllipticParam& x, const EllipticParam& y, Rational cutoff) {
  const EllipticParam z = -(x + y);
  if (x.is_zero() || y.is_zero() || z.is_zero()) {
    throw BoundaryError("x, y, z = -x-y nonzero", pair_str(x, y));
  }
  auto e = [&](int k, const EllipticParam& p) { return e_series(k, p, cutoff); };
  const TauQSeries lhs = e(1, z) * e(2, y) - e(1, y) * e(2, x) - e(1, z) * e(2, x) + e(1, y) * e(2, z);
  const TauQSeries rhs = e(3, x) - e(3, y) * 0.5 - e(3, z) * 0.5;
  return series_report("bg_E", pair_str(x, y), lhs, rhs);
}

namespace {

// Exact Cauchy product and linear combination of rational q-series.
RationalQSeries mul(const RationalQSeries& a, const RationalQSeries& b, const Rational& cutoff) {
  RationalQSeries out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      const Rational e = ea + eb;
      if (e > cutoff) break;
      out[e] += ca * cb;
    }
  }
  return out;
}

void accumulate(RationalQSeries& into, const RationalQSeries& term, int sign) {
  for (const auto& [e, c] : term) into[e] += sign > 0 ? c : -c;
}

ResidualReport exact_report(std::string identity, std::string instance, const RationalQSeries& diff) {
  ResidualReport r;
  r.identity = std::move(identity);
  r.instance = std::move(instance);
  r.tolerance = kSeriesTolerance;
  r.coefficientwise = true;
  for (const auto& [e, c] : diff) {
    const double v = std::abs(c.to_double());
    if (v > r.residual) {
      r.residual = v;
      r.worst = {e, 0};
    }
  }
  return r;
}

}  // namespace

ResidualReport check_bg_G1(const Rational& x1, const Rational& y1, const Rational& u2, const Rational& v2,
                           Rational cutoff) {
  const std::string instance = "x1=" + x1.str() + " y1=" + y1.str() + " u2=" + u2.str() + " v2=" + v2.str();
  if (x1.frac().is_zero() || y1.frac().is_zero() || u2.frac().is_zero() || v2.frac().is_zero() ||
      (x1 + y1).frac().is_zero() || (u2 - v2).frac().is_zero()) {
    throw BoundaryError("x1, y1, u2, v2, x1+y1, u2-v2 nonzero", instance);
  }
  // G coefficients are rational, so the relation is checked in exact arithmetic.
  auto g = [&](int k, const Rational& a, const Rational& b) { return g_series_rational(k, {a, b}, cutoff); };
  const Rational s = x1 + y1;
  RationalQSeries lhs;
  accumulate(lhs, mul(g(1, s, u2), g(2, y1, v2 - u2), cutoff), +1);
  accumulate(lhs, mul(g(1, y1, v2), g(2, x1, u2), cutoff), +1);
  accumulate(lhs, mul(g(1, s, v2), g(2, x1, u2 - v2), cutoff), -1);
  accumulate(lhs, mul(g(1, y1, v2 - u2), g(2, s, u2), cutoff), -1);
  return exact_report("bg_G1", instance, lhs);
}

ResidualReport check_bg_G2(const Rational& u1, const Rational& u2, Rational cutoff) {
  const std::string instance = "u1=" + u1.str() + " u2=" + u2.str();
  if (u1.frac().is_zero()) throw BoundaryError("u1 nonzero", instance);
  auto g = [&](int k, const Rational& a, const Rational& b) { return g_series_rational(k, {a, b}, cutoff); };
  RationalQSeries lhs;
  accumulate(lhs, mul(g(1, u1, u2), g(2, u1, -u2), cutoff), +1);
  accumulate(lhs, mul(g(1, u1, -u2), g(2, u1, u2), cutoff), -1);
  accumulate(lhs, g(3, Rational(0), u2), -1);
  return exact_report("bg_G2", instance, lhs);
}

ResidualReport check_partial_fourier(int k, std::int64_t level, std::int64_t x1, std::int64_t u, Rational cutoff) {
  if (level < 1) throw DomainError("level must be positive");
  const std::string instance = "k=" + std::to_string(k) + " N=" + std::to_string(level) +
                               " x1=" + std::to_string(x1) + " u=" + std::to_string(u);
  TauQSeries lhs(cutoff);
  for (std::int64_t x2 = 0; x2 < level; ++x2) {
    const EllipticParam p = EllipticParam::torsion(x1, x2, level);
    if (k == 2 && p.is_zero()) throw DomainError("E^(2) at the origin appears in the sum: " + instance);
    lhs += e_series(k, p, cutoff) * unit(Rational(-u * x2, level));
  }
  const double scale = -std::pow(static_cast<double>(level), 2 - k);
  return series_report("partial_fourier", instance, lhs, gN_series(k, level, x1, u, cutoff) * scale);
}

ResidualReport check_dilog_sum(std::int64_t j, std::int64_t level) {
  if (level < 2) throw DomainError("need N > 1");
  const Rational t(j, level);
  if (t.frac().is_zero()) throw DomainError("u must differ from 1");
  const Complex u = unit(t);
  double sum = 0.0;
  for (std::int64_t r = 0; r < level; ++r) sum += bloch_wigner((1.0 - unit(Rational(r, level))) / (1.0 - u));
  return scalar_report("dilog_sum", "u=e(" + t.frac().str() + ") N=" + std::to_string(level), sum,
                       0.5 * static_cast<double>(level) * bloch_wigner(u), 1e-10);
}

ResidualReport check_dilog_five_term(const Rational& a, const Rational& b) {
  const std::string instance = "u=e(" + a.frac().str() + ") v=e(" + b.frac().str() + ")";
  if (a.frac().is_zero() || b.frac().is_zero() || (a - b).frac().is_zero()) {
    throw DomainError("five-term check needs u, v, 1 distinct: " + instance);
  }
  const Complex u = unit(a), v = unit(b);
  const double lhs = bloch_wigner(v) + 2 * bloch_wigner((1.0 - v) / (1.0 - u)) + bloch_wigner(u / v);
  return scalar_report("dilog_five_term", instance, lhs, bloch_wigner(u), 1e-10);
}

namespace {

// Memoised signed multiple Eisenstein values over a fixed set of named points.
class SignedTable {
 public:
  SignedTable(std::map<char, EllipticParam> points, const MevOptions& options)
      : points_(std::move(points)), options_(options) {}

  // L("-+-", "aba")
  double operator()(const std::string& signs, const std::string& names) {
    const std::string key = signs + "|" + names;
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const std::vector<EllipticParam> params = resolve(names);
    const double v = lambda_signed(params, parse_signs(signs), options_);
    cache_.emplace(key, v);
    return v;
  }

  Complex full(const std::string& names) {
    const std::vector<EllipticParam> params = resolve(names);
    return lambda_mev(params, options_).value;
  }

  // Sum of the three signed values with exactly one plus sign.
  double one_plus(const std::string& names) {
    return (*this)("+--", names) + (*this)("-+-", names) + (*this)("--+", names);
  }

 private:
  std::vector<EllipticParam> resolve(const std::string& names) const {
    std::vector<EllipticParam> out;
    for (char c : names) out.push_back(points_.at(c));
    return out;
  }

  std::map<char, EllipticParam> points_;
  MevOptions options_;
  std::map<std::string, double> cache_;
};

std::string word(char x, char y) { return {x, y}; }
std::string word(char x, char y, char z) { return {x, y, z}; }

}  // namespace

std::vector<ResidualReport> check_shuffle_ledger(const EllipticParam& a, const EllipticParam& b,
                                                 const MevOptions& options) {
  check_regulator_domain(a, b);
  const EllipticParam c = -(a + b);
  SignedTable L({{'a', a}, {'b', b}, {'c', c}}, options);
  const std::string inst = "a=(" + a.str() + ") b=(" + b.str() + ")";
  std::vector<ResidualReport> out;
  auto push = [&](const std::string& id, const std::string& which, double lhs, double rhs) {
    out.push_back(scalar_report(id, inst + " " + which, lhs, rhs));
  };

  const std::vector<std::pair<char, char>> ordered = {{'a', 'b'}, {'b', 'a'}, {'a', 'c'},
                                                      {'c', 'a'}, {'b', 'c'}, {'c', 'b'}};
  for (auto [x, y] : ordered) {
    const std::string tag = std::string("(x,y)=(") + x + "," + y + ")";
    const double mx = L("-", std::string(1, x));
    push("pair_antisymmetry", tag, L("-+", word(x, y)) + L("+-", word(y, x)), 0.0);
    push("shuffle2", tag, L("--+", word(x, y, x)),
         -L("-+-", word(y, x, x)) - L("--+", word(y, x, x)) + mx * L("-+", word(y, x)));
    push("shuffle3", tag, L("-+-", word(x, y, x)), -2 * L("--+", word(x, x, y)) + mx * L("-+", word(x, y)));
    push("shuffle6", tag, L("-+-", word(x, y, x)), -2 * L("+--", word(y, x, x)) + mx * L("+-", word(y, x)));
    push("shuffle7", tag, L("--+", word(x, x, y)),
         L("+--", word(y, x, x)) + 0.5 * mx * (L("-+", word(x, y)) - L("+-", word(y, x))));
  }

  const double ma = L("-", "a"), mb = L("-", "b");
  push("shuffle8", "", L("--+", "bca"), mb * L("-+", "ca") - L("--+", "cba") - L("-+-", "cab"));
  push("shuffle9", "", L("--+", "acb"), ma * L("-+", "cb") - L("--+", "cab") - L("-+-", "cba"));
  push("shuffle10", "", L("--+", "bac") + L("--+", "abc"),
       mb * L("-+", "ac") - ma * L("+-", "cb") + L("+--", "cab") + L("+--", "cba"));
  push("triple_plus_cyclic", "", L("+++", "abc") + L("+++", "bac") + L("+++", "bca"), 0.0);
  push("real_part_split", "(a,b,c)", L.full("abc").real(), -L.one_plus("abc") + L("+++", "abc"));

  // A2 as the sum of six differences of --+ values, against its closed form.
  auto m = [&](const char* names) { return L("--+", names); };
  const double a2_direct = (m("bab") - m("bba")) + (m("bbc") - m("bcb")) + (m("bca") - m("bac")) +
                           (-m("aab") + m("aba")) + (-m("abc") + m("acb")) + (-m("aca") + m("aac"));
  auto im_pair = [&](const char* names) { return L("+-", names) + L("-+", names); };
  const double a2_closed = -L.one_plus("abb") + L.one_plus("cbb") - L.one_plus("baa") + L.one_plus("caa") -
                           L.one_plus("cba") - L.one_plus("cab") +
                           (mb - ma) * (im_pair("ab") + im_pair("bc") + im_pair("ca"));
  push("A2_closed_form", "", a2_direct, a2_closed);

  // 3 A3 as six lines of four +++ values each; every line collapses by the
  // cyclic shuffle relation.
  auto P = [&](const char* names) { return L("+++", names); };
  const std::array<double, 6> lines = {
      -P("bab") - P("bba") + P("abb") + P("abb"), -P("cbb") - P("cbb") + P("bcb") + P("bbc"),
      -P("acb") - P("abc") + P("cab") + P("cba"), +P("baa") + P("baa") - P("aba") - P("aab"),
      +P("cba") + P("cab") - P("bca") - P("bac"), +P("aca") + P("aac") - P("caa") - P("caa")};
  const std::array<double, 6> collapsed = {3 * P("abb"), -3 * P("cbb"), 2 * P("cab") + P("cba"),
                                           3 * P("baa"), 2 * P("cba") + P("cab"), -3 * P("caa")};
  double a3_lines = 0.0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    push("A3_line_collapse", "line " + std::to_string(i + 1), lines[i], collapsed[i]);
    a3_lines += lines[i] / 3.0;
  }
  const double a3_closed = P("abb") - P("cbb") + P("cab") + P("cba") + P("baa") - P("caa");
  push("A3_closed_form", "", a3_lines, a3_closed);
  push("assembly", "A2+A3 vs regulator", a2_closed + a3_closed, goncharov_mev(a, b, options));
  return out;
}

namespace {

std::string word_str(const std::vector<EllipticParam>& w) {
  std::string out;
  for (const auto& x : w) out += (out.empty() ? "(" : " (") + x.str() + ")";
  return out;
}

void shuffles(const std::vector<EllipticParam>& u, std::size_t i, const std::vector<EllipticParam>& v, std::size_t j,
              std::vector<EllipticParam>& prefix, std::vector<std::vector<EllipticParam>>& out) {
  if (i == u.size() && j == v.size()) {
    out.push_back(prefix);
    return;
  }
  if (i < u.size()) {
    prefix.push_back(u[i]);
    shuffles(u, i + 1, v, j, prefix, out);
    prefix.pop_back();
  }
  if (j < v.size()) {
    prefix.push_back(v[j]);
    shuffles(u, i, v, j + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

ResidualReport check_mev_shuffle(const std::vector<EllipticParam>& u, const std::vector<EllipticParam>& v,
                                 const MevOptions& options) {
  if (u.empty() || v.empty() || u.size() + v.size() > 3) throw DomainError("shuffle check needs 2 or 3 letters");
  std::vector<std::vector<EllipticParam>> words;
  std::vector<EllipticParam> prefix;
  shuffles(u, 0, v, 0, prefix, words);
  Complex sum = 0.0;
  for (const auto& w : words) sum += lambda_mev(w, options).value;
  const Complex product = lambda_mev(u, options).value * lambda_mev(v, options).value;
  ResidualReport r;
  r.identity = "mev_shuffle";
  r.instance = word_str(u) + " x " + word_str(v);
  r.residual = std::abs(product - sum);
  r.tolerance = kLedgerTolerance;
  return r;
}

ResidualReport check_path_reversal(const std::vector<EllipticParam>& params, const MevOptions& options) {
  std::vector<EllipticParam> turned, reversed(params.rbegin(), params.rend());
  for (const auto& x : params) turned.push_back(x.sigma());
  const double sign = params.size() % 2 == 0 ? 1.0 : -1.0;
  ResidualReport r;
  r.identity = "path_reversal";
  r.instance = word_str(params);
  r.residual = std::abs(lambda_mev(turned, options).value - sign * lambda_mev(reversed, options).value);
  r.tolerance = kLedgerTolerance;
  return r;
}

bool VerdictTable::all_passed() const {
  for (const auto& r : rows) {
    if (!r.passed()) return false;
  }
  return true;
}

std::string VerdictTable::to_text() const {
  std::ostringstream os;
  os << std::left << std::setw(22) << "identity" << std::setw(52) << "instance" << std::setw(14) << "residual"
     << "verdict\n";
  for (const auto& r : rows) {
    std::ostringstream res;
    res << std::scientific << std::setprecision(3) << r.residual;
    os << std::setw(22) << r.identity << std::setw(52) << r.instance << std::setw(14) << res.str()
       << (r.passed() ? "PASS" : "FAIL");
    if (r.coefficientwise && !r.passed()) {
      os << " worst=(" << r.worst.alpha.str() << "," << r.worst.tau_power << ")";
    }
    os << '\n';
  }
  return os.str();
}

std::string VerdictTable::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["all_passed"] = all_passed();
  auto& arr = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["identity"] = r.identity;
    row["instance"] = r.instance;
    row["residual"] = r.residual;
    row["tolerance"] = r.tolerance;
    row["passed"] = r.passed();
    if (r.coefficientwise) row["worst"] = {{"alpha", r.worst.alpha.str()}, {"tau_power", r.worst.tau_power}};
    arr.push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

}  // namespace mevreg
