#include "qdom/cli/run.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

#include "qdom/cli/svg.hpp"
#include "qdom/hardy/sections.hpp"
#include "qdom/quaddom/example2.hpp"
#include "qdom/quaddom/scenario.hpp"
#include "qdom/subnormal/params.hpp"

namespace qdom {

namespace {

struct Input {
  std::string id;
  MatrixSymbol F;
  std::optional<Scenario> scenario;
};

struct Stage {
  nlohmann::json report;
  bool ok = true;
};

nlohmann::json cjson(cplx z) { return {z.real(), z.imag()}; }

Input load_input(const RunConfig& cfg) {
  const std::string& in = cfg.input;
  if (in == "ex1" && (cfg.ex1_a || cfg.ex1_beta)) {
    auto s = scenario_ex1(cfg.ex1_a.value_or(2.0), cfg.ex1_beta.value_or(0.3));
    return {"ex1", s.F, s};
  }
  if (in == "ex1" || in == "ex2" || in == "ex3" || in == "ex3-variant") {
    auto s = builtin_scenario(in);
    return {in, s.F, s};
  }
  std::ifstream f(in);
  if (!f) fail(ErrorKind::SchemaError, "cannot read input '" + in + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::SchemaError, std::string("invalid JSON: ") + e.what());
  }
  const std::string stem = std::filesystem::path(in).stem().string();
  if (j.is_object() && j.contains("scenario")) {
    auto s = parse_scenario(j);
    return {stem, s.F, s};
  }
  return {stem, build_symbol(parse_symbol(j)), std::nullopt};
}

void write_json(const std::filesystem::path& p, const nlohmann::json& j) {
  std::ofstream f(p);
  if (!f) fail(ErrorKind::NoData, "cannot write " + p.string());
  f << j.dump(2) << '\n';
}

GridSpec grid_of(const RunConfig& cfg, int fallback) {
  GridSpec g;
  g.nx = cfg.grid_w.value_or(fallback);
  g.ny = cfg.grid_h.value_or(fallback);
  g.n_init = cfg.samples;
  g.seed = cfg.seed;
  return g;
}

Stage stage_symbol(const Input& in, const RunConfig& cfg) {
  MatrixSymbol F = in.F;
  auto fl = classify_symbol(F, cfg.tol, cfg.seed);
  nlohmann::json poles = nlohmann::json::array();
  for (const auto& p : F.poles(cfg.tol)) poles.push_back({{"value", cjson(p.value)}, {"multiplicity", p.multiplicity}});
  Stage s;
  s.report = {{"m", F.m()},
              {"normal", to_string(fl.normal)},
              {"analytic_closed_disc", to_string(fl.analytic_closed_disc)},
              {"nondegenerate", to_string(fl.nondegenerate)},
              {"ndarn_member", to_string(fl.ndarn_member)},
              {"normal_margin", fl.normal_margin},
              {"pole_margin", fl.pole_margin},
              {"poles", poles}};
  if (in.scenario) s.report["scenario"] = to_json(*in.scenario);
  s.ok = fl.ndarn_member == Tri::True;
  return s;
}

Stage stage_trace(const Input& in, const RunConfig& cfg) {
  auto tr = trace_branches(in.F, cfg.samples, cfg.tol);
  {
    std::ofstream f(cfg.output_dir / (in.id + "_trace.csv"));
    write_trace_csv(tr, f);
  }
  emit_svg(tr, nullptr, cfg.output_dir / (in.id + "_curve.svg"));
  nlohmann::json loops = nlohmann::json::array();
  for (const auto& l : tr.loops) loops.push_back(l);
  Stage s;
  s.report = {{"branches", tr.m()},
              {"samples", tr.size()},
              {"component_count", tr.component_count},
              {"loops", loops},
              {"loop_component", tr.loop_component},
              {"refinement_levels", tr.refinement_levels},
              {"min_gap", tr.min_gap}};
  if (in.scenario && in.scenario->ex2) {
    auto b = trace_z_branches(*in.scenario->ex2, 4096);
    s.report["z_branches"] = {{"samples", b.thetas.size()},
                              {"product_defect", b.product_defect},
                              {"mean_modulus_plus", b.mean_modulus_plus},
                              {"mean_modulus_minus", b.mean_modulus_minus},
                              {"swapped", b.swapped}};
    s.ok = b.product_defect <= 1e-8;
  }
  return s;
}

Stage stage_domain(const Input& in, const RunConfig& cfg) {
  auto rep = verify_generates_domain(in.F, grid_of(cfg, 512));
  emit_svg(rep.boundary, &rep, cfg.output_dir / (in.id + "_domain.svg"));
  Stage s;
  s.report = to_json(rep);
  s.ok = rep.passed();
  if (in.scenario && in.scenario->ex2) {
    auto u = univalence_check(*in.scenario->ex2);
    nlohmann::json poles = nlohmann::json::array();
    for (cplx t : u.disc_poles) poles.push_back(cjson(t));
    s.report["univalence"] = {{"pass", u.pass},
                              {"arg_increasing", u.arg_increasing},
                              {"pole_free", u.pole_free},
                              {"min_arg_step", u.min_arg_step},
                              {"disc_poles", poles}};
    s.ok = s.ok && u.pass;
  }
  if (in.scenario && in.scenario->ex1) {
    s.report["univalence"] = {{"pass", in.scenario->ex1->univalent},
                              {"simple_boundary", in.scenario->ex1->simple_boundary},
                              {"boundary_winding", in.scenario->ex1->boundary_winding},
                              {"min_arg_step", in.scenario->ex1->min_arg_step}};
    s.ok = s.ok && in.scenario->ex1->univalent;
  }
  return s;
}

Stage stage_params(const Input& in, const RunConfig& cfg) {
  auto p = matrix_parameters(in.F, cfg.tol);
  Stage s;
  s.report = to_json(p);
  auto cr = self_commutator_rank(in.F, 32, cfg.tol.rank, cfg.tol);
  s.report["self_commutator_rank"] = cr.rank;
  s.ok = cr.rank == p.dimM;
  return s;
}

Stage stage_quadrature(const Input& in, const RunConfig& cfg) {
  if (!in.scenario || !in.scenario->ex1)
    fail(ErrorKind::PreconditionViolation, "the quadrature check needs an Example 1 scenario");
  const auto& e = *in.scenario->ex1;
  auto nw = schwartz_nodes_weights(e);
  GridSpec g = grid_of(cfg, 2048);
  auto res = verify_quadrature_identity(e, standard_test_functions(), g);
  Stage s;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : res) {
    rows.push_back({{"f", r.name},
                    {"integral", cjson(r.integral)},
                    {"quadrature", cjson(r.quadrature)},
                    {"residual", r.residual},
                    {"level_residuals", r.level_residuals}});
    s.ok = s.ok && r.residual < 1e-3;
  }
  s.report = {{"nodes_weights", to_json(nw)}, {"residuals", rows}, {"grid", {g.nx, g.ny}}};
  return s;
}

Stage stage_defining(const Input& in, const RunConfig& cfg) {
  if (!in.scenario || !(in.scenario->ex1 || in.scenario->ex2))
    fail(ErrorKind::PreconditionViolation, "defining equations need an Example 1 or Example 2 scenario");
  auto d = in.scenario->ex1 ? defining_equation(*in.scenario->ex1, -1, -1, cfg.backend)
                            : defining_equation(*in.scenario->ex2, -1, -1, cfg.backend);
  Stage s;
  s.report = to_json(d);
  s.ok = d.validation_residual <= 1e-6;
  return s;
}

void emit_error(std::ostream& err, ErrorKind kind, const std::string& msg) {
  err << nlohmann::json{{"error", std::string(to_string(kind))}, {"message", msg}}.dump() << '\n';
}

}  // namespace

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::SymbolBuild: return "symbol-build";
    case Command::CurveTrace: return "curve-trace";
    case Command::DomainVerify: return "domain-verify";
    case Command::ParamsCompute: return "params-compute";
    case Command::QuadratureCheck: return "quadrature-check";
    case Command::DefiningEq: return "defining-eq";
    case Command::Scenario: return "scenario";
  }
  return "scenario";
}

Command parse_command(std::string_view s) {
  for (Command c : {Command::SymbolBuild, Command::CurveTrace, Command::DomainVerify, Command::ParamsCompute,
                    Command::QuadratureCheck, Command::DefiningEq, Command::Scenario})
    if (to_string(c) == s) return c;
  fail(ErrorKind::SchemaError, "unknown command '" + std::string(s) + "'");
}

cplx parse_complex(std::string_view s) {
  auto num = [&](std::string_view t) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size())
      fail(ErrorKind::SchemaError, "not a number: '" + std::string(t) + "'");
    return v;
  };
  auto comma = s.find(',');
  if (comma == std::string_view::npos) return num(s);
  return {num(s.substr(0, comma)), num(s.substr(comma + 1))};
}

void validate(const RunConfig& cfg) {
  const Tolerances& t = cfg.tol;
  for (double v : {t.root, t.root_cluster, t.rank, t.normal, t.boundary_pole, t.fourier_check, t.branch_collision, t.symmetry})
    if (!(v > 0.0)) fail(ErrorKind::PreconditionViolation, "tolerances must be positive");
  if (cfg.samples < 64) fail(ErrorKind::PreconditionViolation, "--samples must be at least 64");
  if ((cfg.grid_w && *cfg.grid_w < 16) || (cfg.grid_h && *cfg.grid_h < 16))
    fail(ErrorKind::PreconditionViolation, "--grid sizes must be at least 16");
  if (cfg.input.empty()) fail(ErrorKind::SchemaError, "no input given");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    std::filesystem::create_directories(cfg.output_dir);
    Input in = load_input(cfg);
    nlohmann::json report = {{"command", std::string(to_string(cfg.command))}, {"input", in.id}};
    bool ok = true;
    auto add = [&](const char* key, const Stage& s, const char* file) {
      report[key] = s.report;
      ok = ok && s.ok;
      if (file) write_json(cfg.output_dir / (in.id + file), s.report);
    };
    switch (cfg.command) {
      case Command::SymbolBuild: add("symbol", stage_symbol(in, cfg), "_symbol.json"); break;
      case Command::CurveTrace: add("trace", stage_trace(in, cfg), "_trace.json"); break;
      case Command::DomainVerify: add("domain", stage_domain(in, cfg), "_domain.json"); break;
      case Command::ParamsCompute: add("params", stage_params(in, cfg), "_params.json"); break;
      case Command::QuadratureCheck: add("quadrature", stage_quadrature(in, cfg), "_quadrature.json"); break;
      case Command::DefiningEq: add("defining_equation", stage_defining(in, cfg), "_defining.json"); break;
      case Command::Scenario: {
        if (!in.scenario) fail(ErrorKind::SchemaError, "the scenario command needs a scenario input");
        report["scenario"] = to_json(*in.scenario);
        write_json(cfg.output_dir / (in.id + "_scenario.json"), report["scenario"]);
        if (cfg.trace) add("trace", stage_trace(in, cfg), "_trace.json");
        if (cfg.verify) add("domain", stage_domain(in, cfg), "_domain.json");
        if (cfg.params) add("params", stage_params(in, cfg), "_params.json");
        if (cfg.quadrature) add("quadrature", stage_quadrature(in, cfg), "_quadrature.json");
        if (cfg.defining) add("defining_equation", stage_defining(in, cfg), "_defining.json");
        break;
      }
    }
    report["passed"] = ok;
    write_json(cfg.output_dir / (in.id + "_report.json"), report);
    out << report.dump(2) << '\n';
    return ok || cfg.report_only ? 0 : 2;
  } catch (const Error& e) {
    emit_error(err, e.kind(), e.what());
  } catch (const std::exception& e) {
    emit_error(err, ErrorKind::SchemaError, e.what());
  }
  return 1;
}

}  // namespace qdom
