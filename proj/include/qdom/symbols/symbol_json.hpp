#pragma once

#include <json.hpp>
#include <string>

#include "qdom/symbols/compose.hpp"

namespace qdom {

/// Parsed symbol description.
///   {"m": 2, "kind": "bp_psi", "v": M, "factors": [{"a": c, "xi": c, "P": M}],
///    "psi": {"num": G, "den": G}}
///   {"m": 1, "kind": "entrywise", "entries": [[{"num": p, "den": p}]]}
/// A scalar c is [re, im]; each part is a JSON number or a rational string
/// such as "-3/10". p is a list of scalars (ascending degree), M a list of
/// rows, G a grid indexed [t-degree][eta-degree].
struct SymbolSpec {
  std::string kind;
  int m = 0;
  BlaschkePotapov B;
  ScalarBivarRational psi;
  std::vector<QRatFun> entries;  // row-major, entrywise kind only
};

SymbolSpec parse_symbol(const nlohmann::json& j);
nlohmann::json to_json(const SymbolSpec& s);
MatrixSymbol build_symbol(const SymbolSpec& s);

GaussRational parse_scalar(const nlohmann::json& j);
nlohmann::json scalar_json(const GaussRational& z);
nlohmann::json scalar_json(cplx z);
nlohmann::json matrix_json(const CMat& a);

}  // namespace qdom
