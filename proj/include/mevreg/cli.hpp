#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mevreg/eisenstein.hpp"

namespace mevreg {

enum class Command { Mev, Regulator, Qdump, Verify };
enum class OutputFormat { Json, Csv, Text };

struct RunConfig {
  Command command = Command::Mev;
  std::vector<EllipticParam> params;
  std::optional<EllipticParam> a;
  std::optional<EllipticParam> b;
  std::optional<int> level;
  Rational cutoff = default_cutoff();
  // Overrides the per-row tolerances of verification suites when set.
  std::optional<double> tolerance;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> output_path;
  std::string signs;  // mev: optional "+-" string selecting real/imaginary channels
  Family family = Family::G;
  int weight = 1;
  std::string suite = "all";

  // Throws DomainError when the invariants (tolerance >= 1e-12, cutoff >= 4, ...) fail.
  void validate() const;
};

Command parse_command(const std::string& name);
OutputFormat parse_format(const std::string& name);

// Runs one command, writing the serialised report to out. Returns the process
// exit status: 0 on success, 1 when a verification residual exceeds its
// tolerance, 2 when an input violates a precondition.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace mevreg
