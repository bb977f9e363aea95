#include "postlie/io.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "postlie/errors.hpp"

namespace postlie::io {

namespace {

constexpr std::pair<Kind, std::string_view> kKinds[] = {
    {Kind::Algebra, "algebra"},   {Kind::Action, "action"},       {Kind::CrossedModule, "crossed_module"},
    {Kind::Cat1, "cat1"},         {Kind::Cocycle, "cocycle"},     {Kind::Extension, "extension"},
    {Kind::Morphism, "morphism"}, {Kind::AutPair, "aut_pair"},    {Kind::Witness, "witness"},
};

[[noreturn]] void schemaFail(const std::string& path, const std::string& what) {
  throw SchemaError((path.empty() ? std::string("/") : path) + ": " + what);
}

std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& requireObject(const Json& j, const std::string& path, std::initializer_list<std::string_view> required,
                          std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) schemaFail(path, "expected an object");
  for (auto key : required)
    if (!j.contains(std::string(key))) schemaFail(path, "missing key \"" + std::string(key) + "\"");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto k : required) known = known || k == key;
    for (auto k : optional) known = known || k == key;
    if (!known) schemaFail(path, "unknown key \"" + key + "\"");
  }
  return j;
}

const Json& requireArray(const Json& j, const std::string& path) {
  if (!j.is_array()) schemaFail(path, "expected an array");
  return j;
}

std::size_t countFrom(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) schemaFail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::size_t indexFrom(const Json& j, const std::string& path, std::size_t bound) {
  const std::size_t i = countFrom(j, path);
  if (i >= bound) schemaFail(path, "index " + std::to_string(i) + " out of range [0, " + std::to_string(bound) + ")");
  return i;
}

// Sparse entries [i0, ..., i_{r-1}, "v"] with per-axis bounds; calls put for each.
template <class Put>
void sparseFrom(const Json& j, const std::string& path, std::initializer_list<std::size_t> bounds, Put put) {
  requireArray(j, path);
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string ep = child(path, e);
    const Json& entry = j[e];
    if (!entry.is_array() || entry.size() != bounds.size() + 1)
      schemaFail(ep, "expected " + std::to_string(bounds.size()) + " indices followed by a \"p/q\" string");
    std::vector<std::size_t> idx;
    std::size_t axis = 0;
    for (std::size_t b : bounds) {
      idx.push_back(indexFrom(entry[axis], child(ep, axis), b));
      ++axis;
    }
    if (!seen.insert(idx).second) schemaFail(ep, "duplicate entry");
    put(idx, rationalFrom(entry[axis], child(ep, axis)));
  }
}

Tensor3 tensorFrom(const Json& j, const std::string& path, std::size_t n0, std::size_t n1, std::size_t n2) {
  Tensor3 t(n0, n1, n2);
  sparseFrom(j, path, {n0, n1, n2}, [&](const std::vector<std::size_t>& i, Rational v) { t(i[0], i[1], i[2]) = v; });
  return t;
}

Json tensorJson(const Tensor3& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.extent(0); ++i)
    for (std::size_t j = 0; j < t.extent(1); ++j)
      for (std::size_t k = 0; k < t.extent(2); ++k)
        if (!t(i, j, k).isZero()) out.push_back(Json::array({i, j, k, t(i, j, k).str()}));
  return out;
}

std::vector<Matrix> familyFrom(const Json* j, const std::string& path, std::size_t m, std::size_t n) {
  std::vector<Matrix> out(m, Matrix(n, n));
  if (j) sparseFrom(*j, path, {m, n, n}, [&](const std::vector<std::size_t>& i, Rational v) { out[i[0]](i[2], i[1]) = v; });
  return out;
}

Json familyJson(const std::vector<Matrix>& maps) {
  Json out = Json::array();
  for (std::size_t a = 0; a < maps.size(); ++a)
    for (std::size_t x = 0; x < maps[a].cols(); ++x)
      for (std::size_t k = 0; k < maps[a].rows(); ++k)
        if (!maps[a](k, x).isZero()) out.push_back(Json::array({a, x, k, maps[a](k, x).str()}));
  return out;
}

const Json* optionalKey(const Json& j, std::string_view key) {
  auto it = j.find(std::string(key));
  return it == j.end() ? nullptr : &*it;
}

Matrix matrixShaped(const Json& j, const std::string& path, std::size_t rows, std::size_t cols) {
  Matrix m = matrixFrom(j, path);
  if (m.rows() != rows || m.cols() != cols)
    schemaFail(path, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  return m;
}

TripleMaps mapsFrom(const Json& j, const std::string& path, std::size_t m, std::size_t n) {
  TripleMaps t;
  t.actingDim = m;
  t.spaceDim = n;
  t.rho = familyFrom(optionalKey(j, "rho"), child(path, "rho"), m, n);
  t.psi = familyFrom(optionalKey(j, "psi"), child(path, "psi"), m, n);
  t.phi = familyFrom(optionalKey(j, "phi"), child(path, "phi"), m, n);
  return t;
}

std::pair<std::size_t, std::size_t> lineColumn(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::string_view kindName(Kind k) {
  for (const auto& [kind, name] : kKinds)
    if (kind == k) return name;
  return "unknown";
}

Document parseDocument(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is one past the offending character
    const auto [line, col] = lineColumn(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col), line, col);
  }
  requireObject(j, "", {"schemaVersion", "kind", "payload"});
  if (!j["schemaVersion"].is_string() || j["schemaVersion"].get<std::string>() != kSchemaVersion)
    schemaFail("/schemaVersion", "unsupported schema version (expected \"1\")");
  if (!j["kind"].is_string()) schemaFail("/kind", "expected a string");
  const std::string kind = j["kind"].get<std::string>();
  for (const auto& [k, name] : kKinds)
    if (name == kind) return Document{k, j["payload"]};
  schemaFail("/kind", "unknown kind \"" + kind + "\"");
}

Document readDocument(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputShapeError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parseDocument(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json envelope(Kind kind, Json payload) {
  Json out;
  out["schemaVersion"] = kSchemaVersion;
  out["kind"] = kindName(kind);
  out["payload"] = std::move(payload);
  return out;
}

Rational rationalFrom(const Json& j, const std::string& path) {
  if (!j.is_string()) schemaFail(path, "rationals are written as strings \"p/q\" or \"n\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Matrix matrixFrom(const Json& j, const std::string& path) {
  requireObject(j, path, {"rows", "cols"}, {"entries"});
  const std::size_t r = countFrom(j["rows"], child(path, "rows"));
  const std::size_t c = countFrom(j["cols"], child(path, "cols"));
  Matrix m(r, c);
  if (const Json* e = optionalKey(j, "entries"))
    sparseFrom(*e, child(path, "entries"), {r, c}, [&](const std::vector<std::size_t>& i, Rational v) { m(i[0], i[1]) = v; });
  return m;
}

Algebra algebraFrom(const Json& j, const std::string& path) {
  requireObject(j, path, {"dim"}, {"label", "bracket", "product"});
  const std::size_t n = countFrom(j["dim"], child(path, "dim"));
  Algebra a = Algebra::null(n);
  if (const Json* l = optionalKey(j, "label")) {
    if (!l->is_string()) schemaFail(child(path, "label"), "expected a string");
    a.label = l->get<std::string>();
  }
  if (const Json* b = optionalKey(j, "bracket")) a.bracket = tensorFrom(*b, child(path, "bracket"), n, n, n);
  if (const Json* p = optionalKey(j, "product")) a.product = tensorFrom(*p, child(path, "product"), n, n, n);
  return a;
}

ActionData actionFrom(const Json& j, const std::string& path, const Algebra* acting) {
  requireObject(j, path, {"space"}, {"acting", "rho", "psi", "phi"});
  ActionData r;
  if (const Json* a = optionalKey(j, "acting"))
    r.acting = algebraFrom(*a, child(path, "acting"));
  else if (acting)
    r.acting = *acting;
  else
    schemaFail(path, "missing key \"acting\" (or supply the acting algebra separately)");
  r.space = algebraFrom(j["space"], child(path, "space"));
  r.maps = mapsFrom(j, path, r.acting.dim, r.space.dim);
  return r;
}

CrossedModule crossedFrom(const Json& j, const std::string& path) {
  requireObject(j, path, {"action", "boundary"});
  CrossedModule x;
  x.action = actionFrom(j["action"], child(path, "action"));
  x.boundary = matrixShaped(j["boundary"], child(path, "boundary"), x.base().dim, x.top().dim);
  return x;
}

Cat1Algebra cat1From(const Json& j, const std::string& path) {
  requireObject(j, path, {"total", "sub", "sigma", "tau"});
  Cat1Algebra c;
  c.total = algebraFrom(j["total"], child(path, "total"));
  const std::size_t d = c.total.dim;
  const std::string sp = child(path, "sub");
  requireArray(j["sub"], sp);
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < j["sub"].size(); ++i) {
    const std::string vp = child(sp, i);
    const Json& v = requireArray(j["sub"][i], vp);
    if (v.size() != d) schemaFail(vp, "expected a vector of length " + std::to_string(d));
    Vector vec;
    for (std::size_t k = 0; k < d; ++k) vec.push_back(rationalFrom(v[k], child(vp, k)));
    vecs.push_back(std::move(vec));
  }
  try {
    c.sub = SubspaceBasis(d, std::move(vecs));
  } catch (const InputShapeError& e) {
    schemaFail(sp, e.what());
  }
  c.sigma = matrixShaped(j["sigma"], child(path, "sigma"), d, d);
  c.tau = matrixShaped(j["tau"], child(path, "tau"), d, d);
  return c;
}

NonAbelianCocycle cocycleFrom(const Json& j, const std::string& path) {
  requireObject(j, path, {"acting", "space"}, {"rho", "psi", "phi", "sigma", "omega"});
  NonAbelianCocycle c;
  c.acting = algebraFrom(j["acting"], child(path, "acting"));
  c.space = algebraFrom(j["space"], child(path, "space"));
  const std::size_t m = c.acting.dim, n = c.space.dim;
  c.maps = mapsFrom(j, path, m, n);
  c.sigma = Tensor3(m, m, n);
  c.omega = Tensor3(m, m, n);
  if (const Json* s = optionalKey(j, "sigma")) c.sigma = tensorFrom(*s, child(path, "sigma"), m, m, n);
  if (const Json* w = optionalKey(j, "omega")) c.omega = tensorFrom(*w, child(path, "omega"), m, m, n);
  return c;
}

ExtensionPresentation extensionFrom(const Json& j, const std::string& path) {
  requireObject(j, path, {"acting", "space", "total", "inj", "proj"}, {"section"});
  ExtensionPresentation e;
  e.acting = algebraFrom(j["acting"], child(path, "acting"));
  e.space = algebraFrom(j["space"], child(path, "space"));
  e.total = algebraFrom(j["total"], child(path, "total"));
  e.inj = matrixShaped(j["inj"], child(path, "inj"), e.total.dim, e.space.dim);
  e.proj = matrixShaped(j["proj"], child(path, "proj"), e.acting.dim, e.total.dim);
  if (const Json* s = optionalKey(j, "section"))
    e.section = matrixShaped(*s, child(path, "section"), e.total.dim, e.acting.dim);
  return e;
}

AlgebraMorphism morphismFrom(const Json& j, const std::string& path) {
  requireObject(j, path, {"source", "target", "matrix"});
  AlgebraMorphism m;
  m.source = algebraFrom(j["source"], child(path, "source"));
  m.target = algebraFrom(j["target"], child(path, "target"));
  m.matrix = matrixShaped(j["matrix"], child(path, "matrix"), m.target.dim, m.source.dim);
  return m;
}

AutPair autPairFrom(const Json& j, const std::string& path) {
  requireObject(j, path, {"beta", "alpha"}, {"space", "acting"});
  AutPair p{matrixFrom(j["beta"], child(path, "beta")), matrixFrom(j["alpha"], child(path, "alpha"))};
  if (!p.beta.isSquare()) schemaFail(child(path, "beta"), "expected a square matrix");
  if (!p.alpha.isSquare()) schemaFail(child(path, "alpha"), "expected a square matrix");
  return p;
}

Matrix witnessFrom(const Json& j, const std::string& path) {
  requireObject(j, path, {"map"});
  return matrixFrom(j["map"], child(path, "map"));
}

Json toJson(const Rational& r) { return r.str(); }

Json toJson(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json toJson(const Matrix& m) {
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).isZero()) entries.push_back(Json::array({i, j, m(i, j).str()}));
  out["entries"] = std::move(entries);
  return out;
}

Json toJson(const Algebra& a) {
  Json out;
  out["label"] = a.label;
  out["dim"] = a.dim;
  out["bracket"] = tensorJson(a.bracket);
  out["product"] = tensorJson(a.product);
  return out;
}

Json toJson(const ActionData& r) {
  Json out;
  out["acting"] = toJson(r.acting);
  out["space"] = toJson(r.space);
  out["rho"] = familyJson(r.maps.rho);
  out["psi"] = familyJson(r.maps.psi);
  out["phi"] = familyJson(r.maps.phi);
  return out;
}

Json toJson(const CrossedModule& x) {
  Json out;
  out["action"] = toJson(x.action);
  out["boundary"] = toJson(x.boundary);
  return out;
}

Json toJson(const Cat1Algebra& c) {
  Json out;
  out["total"] = toJson(c.total);
  Json sub = Json::array();
  for (const auto& v : c.sub.vectors()) sub.push_back(toJson(v));
  out["sub"] = std::move(sub);
  out["sigma"] = toJson(c.sigma);
  out["tau"] = toJson(c.tau);
  return out;
}

Json toJson(const NonAbelianCocycle& c) {
  Json out;
  out["acting"] = toJson(c.acting);
  out["space"] = toJson(c.space);
  out["rho"] = familyJson(c.maps.rho);
  out["psi"] = familyJson(c.maps.psi);
  out["phi"] = familyJson(c.maps.phi);
  out["sigma"] = tensorJson(c.sigma);
  out["omega"] = tensorJson(c.omega);
  return out;
}

Json toJson(const ExtensionPresentation& e) {
  Json out;
  out["acting"] = toJson(e.acting);
  out["space"] = toJson(e.space);
  out["total"] = toJson(e.total);
  out["inj"] = toJson(e.inj);
  out["proj"] = toJson(e.proj);
  if (e.section.rows() != 0 || e.acting.dim == 0) out["section"] = toJson(e.section);
  return out;
}

Json toJson(const AlgebraMorphism& m) {
  Json out;
  out["source"] = toJson(m.source);
  out["target"] = toJson(m.target);
  out["matrix"] = toJson(m.matrix);
  return out;
}

Json toJson(const AutPair& p) {
  Json out;
  out["beta"] = toJson(p.beta);
  out["alpha"] = toJson(p.alpha);
  return out;
}

Json toJson(const SubspaceBasis& b) {
  Json out = Json::array();
  for (const auto& v : b.vectors()) out.push_back(toJson(v));
  return out;
}

Json toJson(const ViolationList& v) {
  Json out;
  out["total"] = v.total();
  out["truncated"] = v.truncated();
  Json items = Json::array();
  for (const auto& x : v.items()) {
    Json item;
    item["axiom"] = axiomName(x.axiom);
    item["basis"] = x.basis;
    item["discrepancy"] = toJson(x.discrepancy);
    items.push_back(std::move(item));
  }
  out["violations"] = std::move(items);
  return out;
}

}  // namespace postlie::io
