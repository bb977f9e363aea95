// _core: JSON-in, JSON-out bindings over the workbench library.

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "postlie/abelian.hpp"
#include "postlie/cli.hpp"
#include "postlie/errors.hpp"
#include "postlie/io.hpp"

namespace py = pybind11;
using namespace postlie;
using io::Json;

namespace {

io::Document load(const std::string& text, io::Kind expected) {
  io::Document d = io::parseDocument(text);
  if (d.kind != expected)
    throw SchemaError("/kind: expected " + std::string(io::kindName(expected)) + ", got " +
                      std::string(io::kindName(d.kind)));
  return d;
}

std::string wrap(io::Kind kind, Json payload) { return io::dump(io::envelope(kind, std::move(payload))); }

py::tuple runCommand(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::runCommand(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

std::string certifyAlgebra(const std::string& text) {
  const Algebra a = io::algebraFrom(load(text, io::Kind::Algebra).payload, "/payload");
  return io::dump(io::toJson(certifyPostLie(a)));
}

std::string semidirect(const std::string& text, bool repOnly) {
  const ActionData r = io::actionFrom(load(text, io::Kind::Action).payload, "/payload");
  if (!certifyRepresentation(r).empty()) throw UncertifiedInputError("maps do not form a representation");
  if (!repOnly && !certifyAction(r).empty()) throw UncertifiedInputError("maps do not form an action");
  return wrap(io::Kind::Algebra, io::toJson(repOnly ? semidirectRep(r) : semidirectAction(r)));
}

std::string h2(const std::string& text) {
  const ActionData r = io::actionFrom(load(text, io::Kind::Action).payload, "/payload");
  const H2 h = h2Abelian(r);
  Json out;
  out["dimension"] = h.dimension;
  out["cocycleBasis"] = io::toJson(h.cocycles);
  out["coboundaryBasis"] = io::toJson(h.coboundaries);
  out["complementBasis"] = io::toJson(h.complement);
  out["flatteningOrder"] = std::string(kFlatteningOrder);
  return io::dump(out);
}

std::string extractCocycleDoc(const std::string& text) {
  const ExtensionPresentation e = io::extensionFrom(load(text, io::Kind::Extension).payload, "/payload");
  return wrap(io::Kind::Cocycle, io::toJson(extractCocycle(e)));
}

std::string buildExtensionDoc(const std::string& text) {
  const NonAbelianCocycle c = io::cocycleFrom(load(text, io::Kind::Cocycle).payload, "/payload");
  return wrap(io::Kind::Extension, io::toJson(buildExtension(c)));
}

std::string certifyCocycleDoc(const std::string& text) {
  const NonAbelianCocycle c = io::cocycleFrom(load(text, io::Kind::Cocycle).payload, "/payload");
  return io::dump(io::toJson(certifyCocycle(c)));
}

std::string classOfDoc(const std::string& text) {
  const NonAbelianCocycle c = io::cocycleFrom(load(text, io::Kind::Cocycle).payload, "/payload");
  const AbelianLayout L{c.acting.dim, c.space.dim};
  return io::dump(io::toJson(classOf(L.flatten(c.sigma, c.omega), c.action())));
}

std::string wells(const std::string& cocycleText, const std::string& pairText) {
  const NonAbelianCocycle c = io::cocycleFrom(load(cocycleText, io::Kind::Cocycle).payload, "/payload");
  const AutPair p = io::autPairFrom(load(pairText, io::Kind::AutPair).payload, "/payload");
  const AbelianLayout L{c.acting.dim, c.space.dim};
  const WellsResult w = wellsObstructionAbelian(c.action(), L.flatten(c.sigma, c.omega), p);
  Json out;
  out["class"] = io::toJson(w.classCoords);
  out["inducible"] = w.vanishes();
  out["lambda"] = w.lambda ? io::toJson(*w.lambda) : Json();
  return io::dump(out);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact post-Lie algebra workbench (JSON documents in, JSON out)";
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> errorType;
  errorType.call_once_and_store_result(
      [&]() { return py::exception<Error>(m, "WorkbenchError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(errorType.get_stored(), (std::string(e.kind()) + ": " + e.what()).c_str());
    }
  });
  m.attr("TOOL_VERSION") = std::string(io::kToolVersion);
  m.attr("FLATTENING_ORDER") = std::string(kFlatteningOrder);
  m.def("run_command", &runCommand, py::arg("args"), "Run a CLI subcommand; returns (exit_code, stdout, stderr)");
  m.def("certify_algebra", &certifyAlgebra, py::arg("document"));
  m.def("semidirect", &semidirect, py::arg("document"), py::arg("rep_only") = false);
  m.def("h2", &h2, py::arg("document"));
  m.def("extract_cocycle", &extractCocycleDoc, py::arg("document"));
  m.def("build_extension", &buildExtensionDoc, py::arg("document"));
  m.def("certify_cocycle", &certifyCocycleDoc, py::arg("document"));
  m.def("class_of", &classOfDoc, py::arg("document"));
  m.def("wells", &wells, py::arg("cocycle"), py::arg("pair"));
}
