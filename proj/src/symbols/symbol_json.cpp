#include "qdom/symbols/symbol_json.hpp"

namespace qdom {

using nlohmann::json;

namespace {

GaussRational part(const json& j) {
  if (j.is_string()) return GaussRational::parse(j.get<std::string>());
  if (j.is_number_integer()) return GaussRational(mpq_class(j.get<long>()), mpq_class(0));
  if (j.is_number()) return GaussRational::from_double(j.get<double>());
  fail(ErrorKind::SchemaError, "expected a number or rational string, got " + j.dump());
}

void require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::SchemaError, std::string("missing field '") + key + "'");
}

QPoly parse_poly(const json& j) {
  if (!j.is_array()) fail(ErrorKind::SchemaError, "polynomial must be an array of scalars");
  std::vector<GaussRational> c;
  for (const auto& x : j) c.push_back(parse_scalar(x));
  return QPoly(std::move(c));
}

Matrix<GaussRational> parse_matrix(const json& j, size_t m) {
  if (!j.is_array() || j.size() != m) fail(ErrorKind::SchemaError, "matrix must have m rows");
  Matrix<GaussRational> a;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != m) fail(ErrorKind::SchemaError, "matrix must have m columns");
    a.emplace_back();
    for (const auto& x : row) a.back().push_back(parse_scalar(x));
  }
  return a;
}

QBivar parse_grid(const json& j) {
  if (!j.is_array()) fail(ErrorKind::SchemaError, "psi grid must be an array of arrays");
  std::vector<std::vector<GaussRational>> a;
  size_t width = 0;
  for (const auto& row : j) width = std::max(width, row.size());
  for (const auto& row : j) {
    if (!row.is_array()) fail(ErrorKind::SchemaError, "psi grid row must be an array");
    a.emplace_back();
    for (const auto& x : row) a.back().push_back(parse_scalar(x));
    a.back().resize(width, GaussRational(0));
  }
  return QBivar(std::move(a));
}

json poly_json(const QPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(scalar_json(c));
  return out;
}

json matrix_json(const Matrix<GaussRational>& a) {
  json out = json::array();
  for (const auto& row : a) {
    json r = json::array();
    for (const auto& x : row) r.push_back(scalar_json(x));
    out.push_back(r);
  }
  return out;
}

json grid_json(const QBivar& q) {
  json out = json::array();
  for (const auto& row : q.coeffs()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(scalar_json(x));
    out.push_back(r);
  }
  return out;
}

}  // namespace

GaussRational parse_scalar(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) fail(ErrorKind::SchemaError, "complex scalar must be [re, im]");
    GaussRational re = part(j[0]), im = part(j[1]);
    return {re.re(), im.re()};
  }
  return part(j);
}

json scalar_json(const GaussRational& z) { return json::array({z.re_string(), z.im_string()}); }
json scalar_json(cplx z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const CMat& a) {
  json out = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index k = 0; k < a.cols(); ++k) r.push_back(scalar_json(cplx(a(i, k))));
    out.push_back(r);
  }
  return out;
}

SymbolSpec parse_symbol(const json& j) {
  require(j, "m");
  require(j, "kind");
  SymbolSpec s;
  if (!j["m"].is_number_integer() || j["m"].get<int>() < 1) fail(ErrorKind::SchemaError, "m must be a positive integer");
  s.m = j["m"].get<int>();
  s.kind = j["kind"].get<std::string>();
  const size_t m = static_cast<size_t>(s.m);
  if (s.kind == "bp_psi") {
    require(j, "factors");
    require(j, "psi");
    Matrix<GaussRational> v = j.contains("v") ? parse_matrix(j["v"], m) : mat_identity<GaussRational>(m);
    std::vector<BlaschkeFactorSpec> factors;
    for (const auto& f : j["factors"]) {
      require(f, "a");
      require(f, "P");
      BlaschkeFactorSpec spec;
      spec.a = parse_scalar(f["a"]);
      spec.xi = f.contains("xi") ? parse_scalar(f["xi"]) : GaussRational(1);
      spec.P = parse_matrix(f["P"], m);
      factors.push_back(std::move(spec));
    }
    s.B = bp_build(std::move(v), std::move(factors));
    require(j["psi"], "num");
    require(j["psi"], "den");
    s.psi = ScalarBivarRational(parse_grid(j["psi"]["num"]), parse_grid(j["psi"]["den"]));
  } else if (s.kind == "entrywise") {
    require(j, "entries");
    const auto& e = j["entries"];
    if (!e.is_array() || e.size() != m) fail(ErrorKind::SchemaError, "entries must have m rows");
    for (const auto& row : e) {
      if (!row.is_array() || row.size() != m) fail(ErrorKind::SchemaError, "entries must have m columns");
      for (const auto& x : row) {
        require(x, "num");
        QPoly den = x.contains("den") ? parse_poly(x["den"]) : QPoly(GaussRational(1));
        if (den.is_zero()) fail(ErrorKind::SchemaError, "zero denominator");
        s.entries.emplace_back(parse_poly(x["num"]), den);
      }
    }
  } else {
    fail(ErrorKind::SchemaError, "unknown symbol kind '" + s.kind + "'");
  }
  return s;
}

json to_json(const SymbolSpec& s) {
  json out;
  out["m"] = s.m;
  out["kind"] = s.kind;
  if (s.kind == "bp_psi") {
    out["v"] = matrix_json(s.B.v());
    json fs = json::array();
    for (const auto& f : s.B.factors()) fs.push_back({{"a", scalar_json(f.a)}, {"xi", scalar_json(f.xi)}, {"P", matrix_json(f.P)}});
    out["factors"] = fs;
    out["psi"] = {{"num", grid_json(s.psi.num)}, {"den", grid_json(s.psi.den)}};
  } else {
    json rows = json::array();
    for (int i = 0; i < s.m; ++i) {
      json r = json::array();
      for (int k = 0; k < s.m; ++k) {
        const auto& e = s.entries[static_cast<size_t>(i * s.m + k)];
        r.push_back({{"num", poly_json(e.num)}, {"den", poly_json(e.den)}});
      }
      rows.push_back(r);
    }
    out["entries"] = rows;
  }
  return out;
}

MatrixSymbol build_symbol(const SymbolSpec& s) {
  if (s.kind == "bp_psi") return compose_psi(s.psi, s.B);
  return MatrixSymbol(s.m, s.entries);
}

}  // namespace qdom
