#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "qdom/quaddom/example1.hpp"
#include "qdom/quaddom/example2.hpp"
#include "qdom/symbols/symbol_json.hpp"

namespace qdom {

/// A built-in example with its symbol. JSON form:
///   {"scenario": "ex1" | "ex2" | "ex3", "parameters": {...}, "symbol": <symbol JSON>}
/// Parameters: ex1 {a, beta}; ex2 {lambda, a, c, L, branch_pick, gamma1};
/// ex3 {eps2}. Scalars use the symbol schema ([re, im]).
struct Scenario {
  std::string id;
  std::optional<Example1Scenario> ex1;
  std::optional<Example2Scenario> ex2;
  cplx eps2;  // ex3 only
  SymbolSpec symbol;
  MatrixSymbol F;
};

Scenario scenario_ex1(cplx a = 2.0, cplx beta = 0.3);
Scenario scenario_ex2(const Example2Scenario& s);
/// Reference parameters lambda = 4i/5, a = 5/13, c = 12/13, L = i.
Scenario scenario_ex2();
Scenario scenario_ex3(cplx eps2);
/// eps2 = exp(2 pi i / 3).
Scenario scenario_ex3();

/// "ex1", "ex2", "ex3" or "ex3-variant"; anything else throws SchemaError.
Scenario builtin_scenario(std::string_view id);

nlohmann::json to_json(const Scenario& s);
/// Rebuilds the scenario from its parameters. Throws SchemaError on a
/// malformed document.
Scenario parse_scenario(const nlohmann::json& j);

}  // namespace qdom
