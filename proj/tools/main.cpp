#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mevreg/cli.hpp"
#include "mevreg/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Iterated Eisenstein integrals, regulators and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::vector<std::string> params;
  std::string a, b, cutoff = "12", format = "json", out, family = "G", suite = "all", signs;
  int level = 0;
  double tol = 0.0;
  int weight = 1;

  app.add_option("--params", params, "rational point p/q,r/s; repeat for a word")->take_all();
  app.add_option("--a", a, "first point of the regulator pair");
  app.add_option("--b", b, "second point of the regulator pair");
  app.add_option("--level", level, "level N")->check(CLI::Range(2, 1000));
  app.add_option("--cutoff", cutoff, "largest q-exponent kept, as a rational");
  app.add_option("--tol", tol, "override verification tolerance");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out, "write the report to this file");

  auto* mev = app.add_subcommand("mev", "multiple Eisenstein value of a word of 1 to 3 points");
  mev->add_option("--signs", signs, "real/imaginary channel per letter, e.g. -+-");
  app.add_subcommand("regulator", "Goncharov and Beilinson regulators of the pair (a, b)");
  auto* qdump = app.add_subcommand("qdump", "dump the q-expansion of one Eisenstein series");
  qdump->add_option("--family", family, "E, G, H or logSiegel")->check(CLI::IsMember({"E", "G", "H", "logSiegel"}));
  qdump->add_option("--weight", weight, "weight k")->check(CLI::PositiveNumber);
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember({"bg", "shuffle", "rz", "thm1", "thm2", "k2", "all"}));

  CLI11_PARSE(app, argc, argv);

  mevreg::RunConfig config;
  try {
    config.command = mevreg::parse_command(app.get_subcommands().front()->get_name());
    for (const auto& p : params) config.params.push_back(mevreg::EllipticParam::parse(p));
    if (!a.empty()) config.a = mevreg::EllipticParam::parse(a);
    if (!b.empty()) config.b = mevreg::EllipticParam::parse(b);
    if (level > 0) config.level = level;
    config.cutoff = mevreg::Rational::parse(cutoff);
    if (app.count("--tol") > 0) config.tolerance = tol;
    config.format = mevreg::parse_format(format);
    if (!out.empty()) config.output_path = out;
    config.signs = signs;
    config.family = mevreg::parse_family(family);
    config.weight = weight;
    config.suite = suite;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return mevreg::run(config, std::cout, std::cerr);
}
