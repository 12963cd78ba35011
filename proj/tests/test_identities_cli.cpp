#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "mevreg/cli.hpp"
#include "mevreg/errors.hpp"
#include "mevreg/identities.hpp"
#include "oracles.hpp"

using namespace mevreg;

namespace {

EllipticParam P(const char* s) { return EllipticParam::parse(s); }

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_cli(RunConfig c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("weight-three relation among E products") {
  std::mt19937 rng(3);
  for (int n = 0; n < 10; ++n) {
    const EllipticParam x = oracle::random_point(rng, {5, 6, 7, 12}), y = oracle::random_point(rng, {5, 6, 7, 12});
    if ((x + y).is_zero()) continue;
    const ResidualReport r = check_bg_E(x, y);
    CHECK_MESSAGE(r.passed(), r.instance, " residual ", r.residual);
    CHECK(r.coefficientwise);
  }
}

TEST_CASE("G relations hold exactly") {
  CHECK(check_bg_G1(Rational(1, 5), Rational(2, 5), Rational(3, 7), Rational(1, 7)).residual == 0.0);
  CHECK(check_bg_G2(Rational(1, 12), Rational(5, 12)).residual == 0.0);
  CHECK(check_bg_G2(Rational(2, 5), Rational(1, 6)).passed());
  CHECK_THROWS_AS(check_bg_G2(Rational(0), Rational(1, 5)), BoundaryError);
}

TEST_CASE("partial Fourier transform of E") {
  for (int k = 1; k <= 3; ++k) {
    for (std::int64_t u : {0, 1, 3}) CHECK(check_partial_fourier(k, 5, 2, u).passed());
  }
}

TEST_CASE("dilogarithm sums") {
  CHECK(check_dilog_sum(1, 5).passed());
  CHECK(check_dilog_sum(5, 12).passed());
  std::mt19937 rng(5);
  for (int n = 0; n < 100; ++n) {
    const Rational u = oracle::random_fraction(rng, {5, 6, 7, 12});
    const Rational v = oracle::random_fraction(rng, {5, 6, 7, 12});
    if (u == v) continue;
    CHECK(check_dilog_five_term(u, v).residual < 1e-10);
  }
}

TEST_CASE("shuffle ledger") {
  const auto rows = check_shuffle_ledger(P("1/7,3/7"), P("2/7,1/7"));
  CHECK(rows.size() > 20);
  for (const auto& r : rows) CHECK_MESSAGE(r.passed(), r.identity, " ", r.instance, " residual ", r.residual);
}

TEST_CASE("MEV shuffle and reversal up to length three") {
  std::mt19937 rng(13);
  for (int n = 0; n < 6; ++n) {
    const EllipticParam x = oracle::random_point(rng, {5, 7}), y = oracle::random_point(rng, {5, 7}),
                        z = oracle::random_point(rng, {5, 7});
    CHECK(check_mev_shuffle({x}, {y, z}).passed());
    CHECK(check_mev_shuffle({x, y}, {z}).passed());
    CHECK(check_path_reversal({x, y, z}).passed());
  }
  CHECK_THROWS_AS(check_mev_shuffle({P("1/5,1/5"), P("1/5,1/5")}, {P("1/5,1/5"), P("1/5,1/5")}), DomainError);
}

TEST_CASE("verdict table serialises") {
  VerdictTable t;
  t.rows.push_back({"a", "x", 1e-13, 1e-12});
  t.rows.push_back({"b", "y", 1e-3, 1e-12});
  CHECK(!t.all_passed());
  const auto j = nlohmann::json::parse(t.to_json());
  CHECK(j["schema"] == 1);
  CHECK(j["rows"].size() == 2);
  CHECK(t.to_text().find("FAIL") != std::string::npos);
}

TEST_CASE("cli: mev output is deterministic json") {
  RunConfig c;
  c.params = {P("1/4,1/4")};
  const Outcome first = run_cli(c), second = run_cli(c);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  const auto j = nlohmann::json::parse(first.out);
  CHECK(j["schema"] == 1);
  CHECK(j.dump().find("0.39269908169872") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
  RunConfig bad;
  bad.params = {P("0,1/3"), P("1/5,2/5")};
  const Outcome o = run_cli(bad);
  CHECK(o.code == 2);
  CHECK(o.err.find("nonzero") != std::string::npos);

  RunConfig strict;
  strict.command = Command::Verify;
  strict.suite = "bg";
  strict.level = 5;
  strict.tolerance = 1e-12;
  CHECK(run_cli(strict).code == 0);

  RunConfig unknown;
  unknown.command = Command::Verify;
  unknown.suite = "nope";
  CHECK(run_cli(unknown).code == 2);

  RunConfig small;
  small.params = {P("1/5,1/5")};
  small.cutoff = Rational(2);
  CHECK_THROWS_AS(small.validate(), DomainError);
  CHECK(run_cli(small).code == 2);
}

TEST_CASE("cli: qdump header and regulator report") {
  RunConfig q;
  q.command = Command::Qdump;
  q.format = OutputFormat::Csv;
  q.params = {P("1/5,2/5")};
  q.family = Family::E;
  q.weight = 2;
  q.cutoff = Rational(4);
  const Outcome o = run_cli(q);
  CHECK(o.code == 0);
  CHECK(o.out.rfind("# spec: ", 0) == 0);
  CHECK(o.out.find("cutoff=4") != std::string::npos);

  RunConfig r;
  r.command = Command::Regulator;
  r.a = P("1/7,2/7");
  r.b = P("3/7,1/7");
  const Outcome rr = run_cli(r);
  REQUIRE(rr.code == 0);
  const auto j = nlohmann::json::parse(rr.out);
  CHECK(j.contains("g_mev"));
}

TEST_CASE("cli: parsing helpers") {
  CHECK(parse_command("verify") == Command::Verify);
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(parse_format("xml"), DomainError);
}
