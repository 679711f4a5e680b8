#include "qdom/quaddom/scenario.hpp"

#include <cmath>
#include <numbers>

#include "qdom/quaddom/example3.hpp"

namespace qdom {

namespace {

ScalarBivarRational t_plus_eta() {
  return {QBivar({{GaussRational(0), GaussRational(1)}, {GaussRational(1), GaussRational(0)}}), QBivar({{GaussRational(1)}})};
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::SchemaError, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Scenario scenario_ex1(cplx a, cplx beta) {
  Scenario s;
  s.id = "ex1";
  s.ex1 = example1_build(a, beta);
  const GaussRational aq = GaussRational::from_complex(a), bq = GaussRational::from_complex(beta);
  s.symbol.kind = "entrywise";
  s.symbol.m = 1;
  s.symbol.entries = {QRatFun(QPoly{bq, -aq, GaussRational(1)}, QPoly{-aq, GaussRational(1)})};
  s.F = s.ex1->F;
  return s;
}

Scenario scenario_ex2(const Example2Scenario& e) {
  Scenario s;
  s.id = "ex2";
  s.ex2 = e;
  s.symbol.kind = "bp_psi";
  s.symbol.m = 2;
  s.symbol.B = e.B;
  s.symbol.psi = e.psi;
  s.F = e.F;
  return s;
}

Scenario scenario_ex2() { return scenario_ex2(example2_reference()); }

Scenario scenario_ex3(cplx eps2) {
  Scenario s;
  s.id = "ex3";
  s.eps2 = eps2;
  s.symbol.kind = "bp_psi";
  s.symbol.m = 3;
  s.symbol.B = example3_blaschke(eps2);
  s.symbol.psi = t_plus_eta();
  s.F = example3_build(eps2);
  return s;
}

Scenario scenario_ex3() { return scenario_ex3(std::polar(1.0, 2.0 * std::numbers::pi / 3.0)); }

Scenario builtin_scenario(std::string_view id) {
  if (id == "ex1") return scenario_ex1();
  if (id == "ex2") return scenario_ex2();
  if (id == "ex3") return scenario_ex3();
  if (id == "ex3-variant") return scenario_ex3(cplx(-1.0, 1.0) / std::numbers::sqrt2);
  fail(ErrorKind::SchemaError, "unknown scenario '" + std::string(id) + "'");
}

nlohmann::json to_json(const Scenario& s) {
  nlohmann::json par;
  if (s.ex1) {
    par = {{"a", scalar_json(GaussRational::from_complex(s.ex1->a))},
           {"beta", scalar_json(GaussRational::from_complex(s.ex1->beta))}};
  } else if (s.ex2) {
    par = {{"lambda", scalar_json(s.ex2->lambda)}, {"a", scalar_json(s.ex2->a)},
           {"c", scalar_json(s.ex2->c)},           {"L", scalar_json(s.ex2->L)},
           {"branch_pick", s.ex2->branch_pick},    {"gamma1", scalar_json(s.ex2->gamma1_exact)}};
  } else {
    par = {{"eps2", scalar_json(GaussRational::from_complex(s.eps2))}};
  }
  return {{"scenario", s.id}, {"parameters", par}, {"symbol", to_json(s.symbol)}};
}

Scenario parse_scenario(const nlohmann::json& j) {
  const auto& idj = field(j, "scenario");
  if (!idj.is_string()) fail(ErrorKind::SchemaError, "'scenario' must be a string");
  const std::string id = idj.get<std::string>();
  const auto& par = field(j, "parameters");
  if (id == "ex1")
    return scenario_ex1(parse_scalar(field(par, "a")).to_complex(), parse_scalar(field(par, "beta")).to_complex());
  if (id == "ex2") {
    int pick = 0;
    if (par.contains("branch_pick")) {
      if (!par["branch_pick"].is_number_integer()) fail(ErrorKind::SchemaError, "'branch_pick' must be an integer");
      pick = par["branch_pick"].get<int>();
    }
    return scenario_ex2(example2_build(parse_scalar(field(par, "lambda")), parse_scalar(field(par, "a")),
                                       parse_scalar(field(par, "c")), parse_scalar(field(par, "L")), pick));
  }
  if (id == "ex3") return scenario_ex3(parse_scalar(field(par, "eps2")).to_complex());
  fail(ErrorKind::SchemaError, "unknown scenario '" + id + "'");
}

}  // namespace qdom
