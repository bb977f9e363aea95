#pragma once

// Workbench documents: UTF-8 JSON, schemaVersion "1".
//
//   {"schemaVersion": "1", "kind": <kind>, "payload": {...}}
//
// Rationals are strings "n" or "p/q". Tensors are sparse lists of
// [i, j, k, "v"] with 0-based indices; unlisted entries are zero. Map
// families (rho, psi, phi) use [a, x, k, "v"] for the k-th coordinate of
// rho_{e_a}(h_x). Matrices are {"rows": r, "cols": c, "entries": [[i, j, "v"], ...]}.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "postlie/automorphism.hpp"
#include "postlie/crossed.hpp"

namespace postlie::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1";
inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Kind { Algebra, Action, CrossedModule, Cat1, Cocycle, Extension, Morphism, AutPair, Witness };

std::string_view kindName(Kind k);

struct Document {
  Kind kind;
  Json payload;
};

/// ParseError (with line and column) on malformed JSON; SchemaError (with a
/// JSON-pointer path) on a wrong envelope.
Document parseDocument(std::string_view text);
Document readDocument(const std::filesystem::path& path);

/// Canonical text: two-space indent, keys in schema order, trailing newline.
std::string dump(const Json& j);
Json envelope(Kind kind, Json payload);

// Decoders take the JSON-pointer path of `j` for error messages.
Rational rationalFrom(const Json& j, const std::string& path);
Matrix matrixFrom(const Json& j, const std::string& path);
Algebra algebraFrom(const Json& j, const std::string& path);
/// `acting` supplies A when the payload omits it.
ActionData actionFrom(const Json& j, const std::string& path, const Algebra* acting = nullptr);
CrossedModule crossedFrom(const Json& j, const std::string& path);
Cat1Algebra cat1From(const Json& j, const std::string& path);
NonAbelianCocycle cocycleFrom(const Json& j, const std::string& path);
/// The section may be absent; the returned matrix is then 0 x 0.
ExtensionPresentation extensionFrom(const Json& j, const std::string& path);
AlgebraMorphism morphismFrom(const Json& j, const std::string& path);
AutPair autPairFrom(const Json& j, const std::string& path);
/// Payload {"map": matrix}; used for lambda, phi and explicit sections.
Matrix witnessFrom(const Json& j, const std::string& path);

Json toJson(const Rational& r);
Json toJson(const Vector& v);
Json toJson(const Matrix& m);
Json toJson(const Algebra& a);
Json toJson(const ActionData& r);
Json toJson(const CrossedModule& x);
Json toJson(const Cat1Algebra& c);
Json toJson(const NonAbelianCocycle& c);
Json toJson(const ExtensionPresentation& e);
Json toJson(const AlgebraMorphism& m);
Json toJson(const AutPair& p);
Json toJson(const SubspaceBasis& b);
Json toJson(const ViolationList& v);

}  // namespace postlie::io
