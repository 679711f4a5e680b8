#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "qdom/quaddom/defining.hpp"
#include "qdom/tolerances.hpp"

namespace qdom {

enum class Command { SymbolBuild, CurveTrace, DomainVerify, ParamsCompute, QuadratureCheck, DefiningEq, Scenario };

std::string_view to_string(Command c) noexcept;
/// Throws SchemaError for an unknown command name.
Command parse_command(std::string_view s);

struct RunConfig {
  Command command = Command::Scenario;
  std::string input;  // symbol or scenario JSON path, or ex1 / ex2 / ex3 / ex3-variant
  Tolerances tol;
  Backend backend = Backend::Float;
  std::filesystem::path output_dir = ".";
  unsigned seed = 42;
  int samples = 512;
  std::optional<int> grid_w, grid_h;  // default 512, quadrature 2048
  bool report_only = false;
  // stages of the scenario command
  bool trace = false, verify = false, params = false, quadrature = false, defining = false;
  // Example 1 overrides
  std::optional<cplx> ex1_a, ex1_beta;
};

/// Throws PreconditionViolation for non-positive tolerances, samples or grid sizes.
void validate(const RunConfig& cfg);

/// Runs one command, writes its files to cfg.output_dir and prints the
/// report JSON to out. Returns 0 on success, 2 when an acceptance check
/// fails (0 with report_only), 1 on error with {"error", "message"} JSON on err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses "re" or "re,im".
cplx parse_complex(std::string_view s);

}  // namespace qdom
