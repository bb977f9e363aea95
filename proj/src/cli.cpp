#include "postlie/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "postlie/errors.hpp"
#include "postlie/io.hpp"

namespace postlie::cli {

namespace {

using io::Json;
using io::Kind;

enum class Status { Ok, Violations };

struct Report {
  Status status = Status::Ok;
  Json details = Json::object();
};

// Named violation lists; later checks are skipped once a prerequisite fails.
class Checks {
 public:
  bool run(const std::string& name, const std::function<ViolationList()>& f) {
    ViolationList v = f();
    Json entry;
    entry["name"] = name;
    entry.update(io::toJson(v));
    list_.push_back(std::move(entry));
    ok_ = ok_ && v.empty();
    return v.empty();
  }
  void skip(const std::string& name) { skipped_.push_back(name); }
  bool ok() const { return ok_; }

  Report report(const std::string& kind) const {
    Report r;
    r.status = ok_ ? Status::Ok : Status::Violations;
    r.details["kind"] = kind;
    r.details["checks"] = list_;
    r.details["skipped"] = skipped_;
    return r;
  }

 private:
  Json list_ = Json::array();
  Json skipped_ = Json::array();
  bool ok_ = true;
};

void checkAlgebra(Checks& c, const std::string& name, const Algebra& a) {
  c.run(name, [&] { return certifyPostLie(a); });
}

bool checkAction(Checks& c, const ActionData& r, bool needSpace) {
  bool ok = true;
  ok = c.run("acting.postLie", [&] { return certifyPostLie(r.acting); }) && ok;
  bool spaceOk = !needSpace || c.run("space.postLie", [&] { return certifyPostLie(r.space); });
  if (!ok) {
    c.skip("representation");
    if (needSpace) c.skip("action");
    return false;
  }
  if (!c.run("representation", [&] { return certifyRepresentation(r); })) {
    if (needSpace) c.skip("action");
    return false;
  }
  if (!needSpace) return true;
  if (!spaceOk) {
    c.skip("action");
    return false;
  }
  return c.run("action", [&] { return certifyAction(r); });
}

bool checkCrossed(Checks& c, const CrossedModule& x) {
  if (!checkAction(c, x.action, true)) {
    c.skip("crossedModule");
    c.skip("crossedModuleViaSemidirect");
    return false;
  }
  bool ok = c.run("crossedModule", [&] { return certifyCrossedModule(x); });
  ok = c.run("crossedModuleViaSemidirect", [&] { return certifyCrossedModuleViaSemidirect(x); }) && ok;
  return ok;
}

bool checkCat1(Checks& c, const Cat1Algebra& x) {
  if (!c.run("total.postLie", [&] { return certifyPostLie(x.total); })) {
    c.skip("cat1");
    return false;
  }
  return c.run("cat1", [&] { return certifyCat1(x); });
}

bool checkCocycle(Checks& c, const NonAbelianCocycle& x) {
  bool ok = c.run("acting.postLie", [&] { return certifyPostLie(x.acting); });
  ok = c.run("space.postLie", [&] { return certifyPostLie(x.space); }) && ok;
  if (!ok) {
    c.skip("cocycle");
    return false;
  }
  return c.run("cocycle", [&] { return certifyCocycle(x); });
}

// Without a section (hasSection false) the p s = id rows are dropped.
bool checkExtension(Checks& c, const ExtensionPresentation& e, bool hasSection = true) {
  bool ok = c.run("acting.postLie", [&] { return certifyPostLie(e.acting); });
  ok = c.run("space.postLie", [&] { return certifyPostLie(e.space); }) && ok;
  if (!c.run("total.postLie", [&] { return certifyPostLie(e.total); })) {
    c.skip("extension");
    return false;
  }
  return c.run("extension", [&] {
           if (hasSection) return certifyExtension(e);
           ViolationList kept;
           const ViolationList all = certifyExtension(e);
           for (const auto& v : all.items())
             if (v.axiom != Axiom::ExtProjSection) kept.add(v);
           return kept;
         }) && ok;
}

Algebra actingFrom(const std::string& file) {
  const io::Document d = io::readDocument(file);
  if (d.kind != Kind::Algebra) throw SchemaError(file + ": /kind: expected an algebra document");
  return io::algebraFrom(d.payload, "/payload");
}

io::Document expect(const std::string& file, std::initializer_list<Kind> kinds) {
  io::Document d = io::readDocument(file);
  for (Kind k : kinds)
    if (d.kind == k) return d;
  std::string names;
  for (Kind k : kinds) names += (names.empty() ? "" : " or ") + std::string(io::kindName(k));
  throw SchemaError(file + ": /kind: expected " + names + ", got " + std::string(io::kindName(d.kind)));
}

ActionData actionDoc(const std::string& file, const std::string& algebraFile) {
  const io::Document d = expect(file, {Kind::Action});
  if (algebraFile.empty()) return io::actionFrom(d.payload, "/payload");
  const Algebra acting = actingFrom(algebraFile);
  ActionData r = io::actionFrom(d.payload, "/payload", &acting);
  if (!(r.acting == acting)) throw InputShapeError("acting algebra in " + file + " differs from " + algebraFile);
  return r;
}

Matrix mapDoc(const std::string& file) {
  return io::witnessFrom(expect(file, {Kind::Witness}).payload, "/payload");
}

AutPair pairDoc(const std::string& file) {
  return io::autPairFrom(expect(file, {Kind::AutPair}).payload, "/payload");
}

ExtensionPresentation extensionWithSection(const io::Document& d, const std::string& file) {
  ExtensionPresentation e = io::extensionFrom(d.payload, "/payload");
  if (e.section.rows() == 0 && e.acting.dim > 0)
    throw SchemaError(file + ": /payload: extension has no section; pass one explicitly");
  return e;
}

// The cocycle of a cocycle document, or of an extension through its stored section.
NonAbelianCocycle cocycleOrExtension(const std::string& file) {
  const io::Document d = expect(file, {Kind::Cocycle, Kind::Extension});
  if (d.kind == Kind::Cocycle) return io::cocycleFrom(d.payload, "/payload");
  return extractCocycle(extensionWithSection(d, file));
}

void withDocument(Report& r, Kind kind, Json payload) { r.details["document"] = io::envelope(kind, std::move(payload)); }

// ---- subcommands ----------------------------------------------------------

Report cmdCheck(const std::string& file, const std::string& algebraFile) {
  const io::Document d = io::readDocument(file);
  Checks c;
  const std::string p = "/payload";
  switch (d.kind) {
    case Kind::Algebra:
      checkAlgebra(c, "postLie", io::algebraFrom(d.payload, p));
      break;
    case Kind::Action:
      checkAction(c, actionDoc(file, algebraFile), true);
      break;
    case Kind::CrossedModule:
      checkCrossed(c, io::crossedFrom(d.payload, p));
      break;
    case Kind::Cat1:
      checkCat1(c, io::cat1From(d.payload, p));
      break;
    case Kind::Cocycle:
      checkCocycle(c, io::cocycleFrom(d.payload, p));
      break;
    case Kind::Extension: {
      const ExtensionPresentation e = io::extensionFrom(d.payload, p);
      if (e.section.rows() == 0 && e.acting.dim > 0) {
        ExtensionPresentation probe = e;
        probe.section = Matrix(e.total.dim, e.acting.dim);
        checkExtension(c, probe, false);
        c.skip("cocycle");
        break;
      }
      if (checkExtension(c, e))
        c.run("cocycle", [&] { return certifyCocycle(extractCocycle(e)); });
      else
        c.skip("cocycle");
      break;
    }
    case Kind::Morphism: {
      const AlgebraMorphism m = io::morphismFrom(d.payload, p);
      c.run("morphism", [&] { return certifyMorphism(m); });
      break;
    }
    case Kind::AutPair: {
      const AutPair pr = io::autPairFrom(d.payload, p);
      if (!d.payload.contains("space") || !d.payload.contains("acting"))
        throw SchemaError(file + ": /payload: checking an aut_pair needs \"space\" and \"acting\"");
      const Algebra h = io::algebraFrom(d.payload["space"], p + "/space");
      const Algebra a = io::algebraFrom(d.payload["acting"], p + "/acting");
      c.run("autPair", [&] { return certifyAutPair(h, a, pr); });
      break;
    }
    case Kind::Witness:
      io::witnessFrom(d.payload, p);
      break;
  }
  return c.report(std::string(io::kindName(d.kind)));
}

Report cmdSemidirect(const std::string& file, const std::string& algebraFile, bool repOnly) {
  const ActionData r = actionDoc(file, algebraFile);
  Checks c;
  if (!checkAction(c, r, !repOnly)) return c.report("action");
  Report out = c.report("action");
  withDocument(out, Kind::Algebra, io::toJson(repOnly ? semidirectRep(r) : semidirectAction(r)));
  return out;
}

Report cmdCrossedToCat1(const std::string& file) {
  const CrossedModule x = io::crossedFrom(expect(file, {Kind::CrossedModule}).payload, "/payload");
  Checks c;
  if (!checkCrossed(c, x)) return c.report("crossed_module");
  const Cat1Algebra cat = crossedToCat1(x);
  c.run("result.cat1", [&] { return certifyCat1(cat); });
  Report out = c.report("crossed_module");
  withDocument(out, Kind::Cat1, io::toJson(cat));
  return out;
}

Report cmdCat1ToCrossed(const std::string& file) {
  const Cat1Algebra cat = io::cat1From(expect(file, {Kind::Cat1}).payload, "/payload");
  Checks c;
  if (!checkCat1(c, cat)) return c.report("cat1");
  const CrossedModule x = cat1ToCrossed(cat);
  c.run("result.crossedModule", [&] { return certifyCrossedModule(x); });
  Report out = c.report("cat1");
  withDocument(out, Kind::CrossedModule, io::toJson(x));
  return out;
}

Report cmdRoundtrip(const std::string& file) {
  const CrossedModule x = io::crossedFrom(expect(file, {Kind::CrossedModule}).payload, "/payload");
  Checks c;
  if (!checkCrossed(c, x)) return c.report("crossed_module");
  const RoundTrip rt = roundTripIso(x);
  const Cat1Splitting sp = cat1SplittingIso(crossedToCat1(x));
  c.run("roundTrip", [&] { return rt.laws; });
  c.run("cat1Splitting", [&] { return sp.laws; });
  Report out = c.report("crossed_module");
  out.details["onBase"] = io::toJson(rt.onBase.matrix);
  out.details["onTop"] = io::toJson(rt.onTop.matrix);
  out.details["splittingIso"] = io::toJson(sp.iso);
  return out;
}

Report cmdExtractCocycle(const std::string& file, const std::string& section) {
  ExtensionPresentation e = io::extensionFrom(expect(file, {Kind::Extension}).payload, "/payload");
  const std::size_t m = e.acting.dim, n = e.space.dim;
  if (section == "canonical") {
    Matrix inj(m + n, n), proj(m, m + n), sec(m + n, m);
    for (std::size_t x = 0; x < n; ++x) inj(m + x, x) = Rational(1);
    for (std::size_t a = 0; a < m; ++a) proj(a, a) = sec(a, a) = Rational(1);
    if (e.total.dim != m + n || !(e.inj == inj) || !(e.proj == proj))
      throw SectionError("--section canonical needs a block-form extension (inj = [0; I], proj = [I, 0])");
    e.section = sec;
  } else if (!section.empty()) {
    e.section = mapDoc(section);
  } else if (e.section.rows() == 0 && m > 0) {
    throw SectionError("no section: pass --section <file|canonical>");
  }
  e.validateShape();
  if (!(e.proj * e.section == Matrix::identity(m))) throw SectionError("p o s is not the identity on A");
  Checks c;
  if (!checkExtension(c, e)) return c.report("extension");
  const NonAbelianCocycle cocycle = extractCocycle(e);
  c.run("result.cocycle", [&] { return certifyCocycle(cocycle); });
  Report out = c.report("extension");
  withDocument(out, Kind::Cocycle, io::toJson(cocycle));
  return out;
}

Report cmdBuildExtension(const std::string& file) {
  const NonAbelianCocycle x = io::cocycleFrom(expect(file, {Kind::Cocycle}).payload, "/payload");
  Checks c;
  if (!checkCocycle(c, x)) return c.report("cocycle");
  const ExtensionPresentation e = buildExtension(x);
  c.run("result.extension", [&] { return certifyExtension(e); });
  Report out = c.report("cocycle");
  withDocument(out, Kind::Extension, io::toJson(e));
  return out;
}

Report cmdEquivWitness(const std::string& first, const std::string& second, const std::string& mapFile) {
  const NonAbelianCocycle c1 = io::cocycleFrom(expect(first, {Kind::Cocycle}).payload, "/payload");
  const NonAbelianCocycle c2 = io::cocycleFrom(expect(second, {Kind::Cocycle}).payload, "/payload");
  const Matrix phi = mapDoc(mapFile);
  Checks c;
  c.run("equivalence", [&] { return checkEquivalenceWitness(c1, c2, phi); });
  return c.report("cocycle");
}

Json h2Json(const H2& h, std::size_t coordinateCount) {
  Json out;
  out["dimension"] = h.dimension;
  out["coordinateCount"] = coordinateCount;
  out["cocycleDimension"] = h.cocycles.dim();
  out["coboundaryDimension"] = h.coboundaries.dim();
  out["cocycleBasis"] = io::toJson(h.cocycles);
  out["coboundaryBasis"] = io::toJson(h.coboundaries);
  out["complementBasis"] = io::toJson(h.complement);
  return out;
}

void requireAbelianSpace(const Algebra& space) {
  if (!space.isAbelian()) throw UncertifiedInputError("the space must have zero bracket and product");
}

Report cmdH2(const std::string& algebraFile, const std::string& repFile) {
  const ActionData r = actionDoc(repFile, algebraFile);
  requireAbelianSpace(r.space);
  Checks c;
  if (!checkAction(c, r, false)) return c.report("action");
  Report out = c.report("action");
  out.details["h2"] = h2Json(h2Abelian(r), AbelianLayout{r.acting.dim, r.space.dim}.size());
  return out;
}

Report cmdCocycleClass(const std::string& file) {
  const NonAbelianCocycle x = io::cocycleFrom(expect(file, {Kind::Cocycle}).payload, "/payload");
  requireAbelianSpace(x.space);
  const ActionData r = x.action();
  Checks c;
  if (!checkAction(c, r, false)) return c.report("cocycle");
  const AbelianLayout L{x.acting.dim, x.space.dim};
  const Vector coords = L.flatten(x.sigma, x.omega);
  const H2 h = h2Abelian(r);
  Report out = c.report("cocycle");
  out.details["coordinates"] = io::toJson(coords);
  out.details["dimension"] = h.dimension;
  out.details["class"] = io::toJson(classOf(coords, r, h));
  return out;
}

Report cmdInducible(const std::string& file, const std::string& pairFile, const std::string& witnessFile) {
  const NonAbelianCocycle x = cocycleOrExtension(file);
  const AutPair pair = pairDoc(pairFile);
  const Matrix lambda = mapDoc(witnessFile);
  Checks c;
  if (!c.run("autPair", [&] { return certifyAutPair(x.space, x.acting, pair); })) {
    c.skip("inducible");
    return c.report("cocycle");
  }
  c.run("inducible", [&] { return checkInducibleWitness(x, pair, lambda); });
  return c.report("cocycle");
}

Report cmdBuildGamma(const std::string& file, const std::string& pairFile, const std::string& witnessFile) {
  const ExtensionPresentation e = extensionWithSection(expect(file, {Kind::Extension}), file);
  const AutPair pair = pairDoc(pairFile);
  const Matrix lambda = mapDoc(witnessFile);
  const Matrix gamma = buildGamma(e, pair, lambda);
  Checks c;
  c.run("gamma.morphism", [&] { return certifyMorphism(e.total, e.total, gamma); });
  const AutPair induced = inducedPair(e, gamma);
  Report out = c.report("extension");
  out.details["inducedMatchesPair"] = induced == pair;
  withDocument(out, Kind::Morphism, io::toJson(AlgebraMorphism{e.total, e.total, gamma}));
  return out;
}

Report cmdTransformCocycle(const std::string& file, const std::string& pairFile) {
  const NonAbelianCocycle x = io::cocycleFrom(expect(file, {Kind::Cocycle}).payload, "/payload");
  const AutPair pair = pairDoc(pairFile);
  Checks c;
  if (!checkCocycle(c, x)) return c.report("cocycle");
  if (!c.run("autPair", [&] { return certifyAutPair(x.space, x.acting, pair); })) return c.report("cocycle");
  const NonAbelianCocycle t = transformCocycle(x, pair);
  c.run("result.cocycle", [&] { return certifyCocycle(t); });
  Report out = c.report("cocycle");
  withDocument(out, Kind::Cocycle, io::toJson(t));
  return out;
}

Report cmdWells(const std::string& file, const std::string& pairFile, const std::string& gammaFile) {
  if (pairFile.empty() == gammaFile.empty()) throw InputShapeError("wells needs exactly one of --pair or --gamma");
  Report out;
  if (!pairFile.empty()) {
    const NonAbelianCocycle x = cocycleOrExtension(file);
    requireAbelianSpace(x.space);
    const AutPair pair = pairDoc(pairFile);
    const AbelianLayout L{x.acting.dim, x.space.dim};
    const WellsResult w = wellsObstructionAbelian(x.action(), L.flatten(x.sigma, x.omega), pair);
    out.details["mode"] = "pair";
    out.details["class"] = io::toJson(w.classCoords);
    out.details["inducible"] = w.vanishes();
    out.details["lambda"] = w.lambda ? io::toJson(*w.lambda) : Json(nullptr);
    return out;
  }
  const ExtensionPresentation e = extensionWithSection(expect(file, {Kind::Extension}), file);
  const io::Document g = expect(gammaFile, {Kind::Morphism, Kind::Witness});
  const Matrix gamma =
      g.kind == Kind::Morphism ? io::morphismFrom(g.payload, "/payload").matrix : io::witnessFrom(g.payload, "/payload");
  const bool vanishes = wellsMapVanishesOnImage(e, gamma);
  out.status = vanishes ? Status::Ok : Status::Violations;
  out.details["mode"] = "gamma";
  out.details["pair"] = io::toJson(inducedPair(e, gamma));
  out.details["lambda"] = io::toJson(extractLambda(e, gamma));
  out.details["witnessValid"] = vanishes;
  return out;
}

Json reportJson(const std::string& command, const std::string& status, Json details) {
  Json r;
  r["command"] = command;
  r["status"] = status;
  r["details"] = std::move(details);
  r["toolVersion"] = io::kToolVersion;
  r["flatteningOrder"] = kFlatteningOrder;
  return r;
}

}  // namespace

int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic workbench for finite-dimensional post-Lie algebras.", "postlie"};
  app.require_subcommand(1, 1);
  std::string output, documentOut;
  app.add_option("--output", output, "Write the report here instead of standard output");
  app.add_option("--document", documentOut, "Also write the constructed document (if any) to this path");

  std::string file, file2, algebraFile, section, pairFile, witnessFile, gammaFile, mapFile;
  bool repOnly = false;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto positional = [&](CLI::App* s, const char* what = "input document") {
    s->add_option("file", file, what)->required()->check(CLI::ExistingFile);
  };

  CLI::App* check = sub("check", "Certify any document kind");
  positional(check);
  check->add_option("--algebra", algebraFile, "Acting algebra for action documents that omit it")->check(CLI::ExistingFile);
  CLI::App* semi = sub("semidirect", "Semidirect product A x| H of an action");
  positional(semi, "action document");
  semi->add_flag("--rep", repOnly, "Ignore the operations of H (representation semidirect product)");
  semi->add_option("--algebra", algebraFile, "Acting algebra")->check(CLI::ExistingFile);
  CLI::App* c2c = sub("crossed-to-cat1", "Cat1 algebra of a crossed module");
  positional(c2c, "crossed_module document");
  CLI::App* cat2x = sub("cat1-to-crossed", "Crossed module of a cat1 algebra");
  positional(cat2x, "cat1 document");
  CLI::App* round = sub("roundtrip", "Round trip crossed module -> cat1 -> crossed module");
  positional(round, "crossed_module document");
  CLI::App* extract = sub("extract-cocycle", "Cocycle of an extension through a section");
  positional(extract, "extension document");
  extract->add_option("--section", section, "Witness document with the section matrix, or 'canonical'");
  CLI::App* build = sub("build-extension", "Extension A x|_(sigma,omega) H of a cocycle");
  positional(build, "cocycle document");
  CLI::App* equiv = sub("equiv-witness", "Check phi : A -> H as an equivalence between two cocycles");
  positional(equiv, "first cocycle");
  equiv->add_option("second", file2, "second cocycle")->required()->check(CLI::ExistingFile);
  equiv->add_option("--map", mapFile, "Witness document with phi")->required()->check(CLI::ExistingFile);
  CLI::App* h2 = sub("h2", "Abelian cocycles, coboundaries and H^2");
  h2->add_option("--algebra", algebraFile, "Acting algebra")->required()->check(CLI::ExistingFile);
  h2->add_option("--rep", file, "Representation (action document on an abelian space)")
      ->required()
      ->check(CLI::ExistingFile);
  CLI::App* cls = sub("cocycle-class", "Class of an abelian cocycle in H^2");
  positional(cls, "cocycle document");
  CLI::App* ind = sub("inducible", "Check an inducibility witness lambda for a pair");
  positional(ind, "cocycle or extension document");
  ind->add_option("--pair", pairFile, "aut_pair document")->required()->check(CLI::ExistingFile);
  ind->add_option("--witness", witnessFile, "witness document with lambda")->required()->check(CLI::ExistingFile);
  CLI::App* gam = sub("build-gamma", "Automorphism of E induced by a pair and a witness");
  positional(gam, "extension document");
  gam->add_option("--pair", pairFile, "aut_pair document")->required()->check(CLI::ExistingFile);
  gam->add_option("--witness", witnessFile, "witness document with lambda")->required()->check(CLI::ExistingFile);
  CLI::App* trans = sub("transform-cocycle", "Cocycle transformed by a pair");
  positional(trans, "cocycle document");
  trans->add_option("--pair", pairFile, "aut_pair document")->required()->check(CLI::ExistingFile);
  CLI::App* wells = sub("wells", "Wells map of a pair, or exactness check for an automorphism");
  positional(wells, "cocycle or extension document");
  wells->add_option("--pair", pairFile, "aut_pair document")->check(CLI::ExistingFile);
  wells->add_option("--gamma", gammaFile, "morphism or witness document with gamma")->check(CLI::ExistingFile);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "postlie: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  Report report;
  std::string statusName;
  Json details;
  int code = 0;
  try {
    if (chosen == check) report = cmdCheck(file, algebraFile);
    else if (chosen == semi) report = cmdSemidirect(file, algebraFile, repOnly);
    else if (chosen == c2c) report = cmdCrossedToCat1(file);
    else if (chosen == cat2x) report = cmdCat1ToCrossed(file);
    else if (chosen == round) report = cmdRoundtrip(file);
    else if (chosen == extract) report = cmdExtractCocycle(file, section);
    else if (chosen == build) report = cmdBuildExtension(file);
    else if (chosen == equiv) report = cmdEquivWitness(file, file2, mapFile);
    else if (chosen == h2) report = cmdH2(algebraFile, file);
    else if (chosen == cls) report = cmdCocycleClass(file);
    else if (chosen == ind) report = cmdInducible(file, pairFile, witnessFile);
    else if (chosen == gam) report = cmdBuildGamma(file, pairFile, witnessFile);
    else if (chosen == trans) report = cmdTransformCocycle(file, pairFile);
    else report = cmdWells(file, pairFile, gammaFile);
    statusName = report.status == Status::Ok ? "ok" : "violations";
    code = report.status == Status::Ok ? 0 : 1;
    details = std::move(report.details);
  } catch (const ParseError& e) {
    statusName = "error";
    details = {{"error", e.kind()}, {"message", e.what()}};
    if (e.line() > 0) {
      details["line"] = e.line();
      details["column"] = e.column();
    }
    err << "postlie: " << e.kind() << ": " << e.what() << "\n";
    code = 2;
  } catch (const Error& e) {
    statusName = "error";
    details = {{"error", e.kind()}, {"message", e.what()}};
    err << "postlie: " << e.kind() << ": " << e.what() << "\n";
    code = 2;
  } catch (const std::logic_error& e) {
    statusName = "error";
    details = {{"error", "InternalError"}, {"message", e.what()}};
    err << "postlie: internal consistency failure: " << e.what() << "\n";
    code = 3;
  } catch (const std::exception& e) {
    statusName = "error";
    details = {{"error", "InternalError"}, {"message", e.what()}};
    err << "postlie: internal error: " << e.what() << "\n";
    code = 3;
  }

  if (!documentOut.empty() && details.is_object() && details.contains("document")) {
    std::ofstream doc(documentOut, std::ios::binary);
    if (!doc) {
      err << "postlie: cannot write " << documentOut << "\n";
      return 2;
    }
    doc << io::dump(details["document"]);
  }
  const std::string text = io::dump(reportJson(command, statusName, std::move(details)));
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      err << "postlie: cannot write " << output << "\n";
      return 2;
    }
    f << text;
  }
  return code;
}

}  // namespace postlie::cli
