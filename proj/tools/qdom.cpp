#include <CLI11.hpp>
#include <iostream>

#include "qdom/cli/run.hpp"

int main(int argc, char** argv) {
  qdom::RunConfig cfg;
  std::string command;
  std::string backend = "float";
  std::vector<int> grid;
  std::string a, beta;
  std::optional<double> tol_root, tol_rank;

  CLI::App app{"Quadrature domains from rational normal matrix functions"};
  app.add_option("command", command,
                 "symbol-build | curve-trace | domain-verify | params-compute | quadrature-check | defining-eq | scenario")
      ->required();
  app.add_option("input", cfg.input, "symbol or scenario JSON file, or ex1 | ex2 | ex3 | ex3-variant")->required();
  app.add_option("--samples", cfg.samples, "initial boundary samples for tracing")->capture_default_str();
  app.add_option("--grid", grid, "grid width and height")->expected(2);
  app.add_option("--tol-root", tol_root, "root tolerance");
  app.add_option("--tol-rank", tol_rank, "relative singular value cut");
  app.add_option("--backend", backend, "float | exact")->capture_default_str();
  app.add_option("--out", cfg.output_dir, "output directory")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for pseudo-random test points")->capture_default_str();
  app.add_flag("--report-only", cfg.report_only, "exit 0 even when a check fails");
  app.add_flag("--trace", cfg.trace, "scenario: trace the boundary");
  app.add_flag("--verify", cfg.verify, "scenario: verify the domain criterion");
  app.add_flag("--params", cfg.params, "scenario: compute the matrix parameters");
  app.add_flag("--quadrature", cfg.quadrature, "scenario: check the quadrature identity");
  app.add_flag("--defining-eq", cfg.defining, "scenario: compute the defining equation");
  app.add_option("--a", a, "Example 1: pole a as re[,im]");
  app.add_option("--beta", beta, "Example 1: residue beta as re[,im]");
  CLI11_PARSE(app, argc, argv);

  try {
    cfg.command = qdom::parse_command(command);
    cfg.backend = qdom::parse_backend(backend);
    if (tol_root) cfg.tol.root = *tol_root;
    if (tol_rank) cfg.tol.rank = *tol_rank;
    if (grid.size() == 2) {
      cfg.grid_w = grid[0];
      cfg.grid_h = grid[1];
    }
    if (!a.empty()) cfg.ex1_a = qdom::parse_complex(a);
    if (!beta.empty()) cfg.ex1_beta = qdom::parse_complex(beta);
  } catch (const qdom::Error& e) {
    std::cerr << nlohmann::json{{"error", std::string(qdom::to_string(e.kind()))}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return qdom::run(cfg, std::cout, std::cerr);
}
