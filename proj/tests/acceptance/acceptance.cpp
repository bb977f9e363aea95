// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/fixtures.hpp"
#include "../support/golden.hpp"
#include "../support/oracle.hpp"
#include "postlie/abelian.hpp"

using namespace postlie;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string str(std::size_t n) { return std::to_string(n); }

Algebra algebraDoc(const std::string& name) { return io::algebraFrom(fx::corpus(name).payload, "/payload"); }

ActionData actionDoc(const std::string& name, const Algebra* acting = nullptr) {
  return io::actionFrom(fx::corpus(name).payload, "/payload", acting);
}

const std::vector<std::string> kAlgebraFixtures{"a1_null", "abelian2",        "sl2_zero_product", "r2", "heisenberg",
                                                "sl2_neg_bracket", "r2_neg_bracket", "prelie_dual_numbers"};

// 1. every fixture certifies; 50 single-entry mutations each agree with the oracle
Outcome axiomFixtures() {
  Outcome o;
  std::mt19937 rng(101);
  std::size_t mutations = 0, disagreements = 0, rejected = 0;
  for (const auto& name : kAlgebraFixtures) {
    const Algebra base = algebraDoc(name);
    if (!certifyPostLie(base).empty() || !oracle::isPostLie(oracle::table(base))) {
      o.pass = false;
      o.detail += name + " does not certify; ";
    }
    std::uniform_int_distribution<std::size_t> idx(0, base.dim - 1);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int t = 0; t < 50; ++t) {
      Algebra a = base;
      Tensor3& tensor = t % 2 ? a.bracket : a.product;
      static const long deltas[] = {-2, -1, 1, 2};
      tensor(idx(rng), idx(rng), idx(rng)) += Rational(deltas[pick(rng)]);
      const bool library = certifyPostLie(a).empty();
      disagreements += library != oracle::isPostLie(oracle::table(a));
      rejected += !library;
      ++mutations;
    }
  }
  o.pass = o.pass && disagreements == 0;
  o.detail += str(kAlgebraFixtures.size()) + " fixtures, " + str(mutations) + " mutations (" + str(rejected) +
              " rejected), " + str(disagreements) + " disagreements";
  return o;
}

std::vector<std::pair<std::string, ActionData>> actionFixtures() {
  const Algebra a1 = algebraDoc("a1_null");
  std::vector<std::pair<std::string, ActionData>> out{
      {"sl2_adjoint_action", actionDoc("sl2_adjoint_action")},
      {"sl2_zero_adjoint_action", actionDoc("sl2_zero_adjoint_action")},
      {"null1_phi_identity_rep", actionDoc("null1_phi_identity_rep")},
      {"r2_trivial_rep", actionDoc("r2_trivial_rep")},
      {"trivial_1d", actionDoc("trivial_1d", &a1)}};
  for (const auto& name : kAlgebraFixtures) out.push_back({"adjoint " + name, adjointAction(algebraDoc(name))});
  return out;
}

// 2. semidirect products of certified actions certify
Outcome semidirectSoundness() {
  Outcome o;
  std::size_t certified = 0;
  for (const auto& [name, r] : actionFixtures()) {
    if (!certifyRepresentation(r).empty() || !certifyAction(r).empty()) continue;
    ++certified;
    const Algebra e = semidirectAction(r);
    if (!certifyPostLie(e).empty() || !oracle::isPostLie(oracle::table(e)) || !certifyPostLie(semidirectRep(r)).empty()) {
      o.pass = false;
      o.detail += name + " fails; ";
    }
  }
  o.pass = o.pass && certified >= 10;
  o.detail += str(certified) + " certified action fixtures";
  return o;
}

// 3. crossed module <-> cat1 round trip
Outcome roundTrip() {
  Outcome o;
  std::vector<std::pair<std::string, CrossedModule>> xs;
  for (const char* name : {"sl2_adjoint_crossed", "r2_adjoint_crossed", "r2_ideal_crossed"})
    xs.push_back({name, io::crossedFrom(fx::corpus(name).payload, "/payload")});
  for (const auto& name : kAlgebraFixtures) {
    const Algebra a = algebraDoc(name);
    xs.push_back({"(A,A,id) " + name, CrossedModule{adjointAction(a), Matrix::identity(a.dim)}});
  }
  std::size_t checked = 0;
  for (const auto& [name, x] : xs) {
    if (!certifyCrossedModule(x).empty()) {
      o.pass = false;
      o.detail += name + " is not a crossed module; ";
      continue;
    }
    const Cat1Algebra c = crossedToCat1(x);
    const bool ok = certifyCat1(c).empty() && certifyCrossedModule(cat1ToCrossed(c)).empty() &&
                    roundTripIso(x).laws.empty() && cat1SplittingIso(c).laws.empty();
    if (!ok) {
      o.pass = false;
      o.detail += name + " fails; ";
    }
    ++checked;
  }
  o.detail += str(checked) + " crossed modules";
  return o;
}

std::vector<NonAbelianCocycle> cocycleBases() {
  NonAbelianCocycle r2s = NonAbelianCocycle::split(actionDoc("r2_trivial_rep"));
  r2s.sigma(0, 1, 0) = Rational(1);
  r2s.sigma(1, 0, 0) = Rational(-1);
  return {io::cocycleFrom(fx::corpus("omega_fixture").payload, "/payload"),
          NonAbelianCocycle::split(actionDoc("sl2_adjoint_action")),
          NonAbelianCocycle::split(actionDoc("null1_phi_identity_rep")),
          r2s,
          NonAbelianCocycle::split(adjointAction(algebraDoc("r2_neg_bracket"))),
          NonAbelianCocycle::split(adjointAction(algebraDoc("heisenberg"))),
          NonAbelianCocycle::split(adjointAction(algebraDoc("prelie_dual_numbers")))};
}

// 4. explicit cocycle conditions vs post-Lie check of A (+) H
Outcome lemmaDualOracle() {
  Outcome o;
  std::mt19937 rng(404);
  const auto bases = cocycleBases();
  std::size_t trials = 0, disagreements = 0, cocycles = 0;
  for (int t = 0; t < 240; ++t) {
    const NonAbelianCocycle& base = bases[t % bases.size()];
    NonAbelianCocycle c = base;
    const std::size_t m = c.acting.dim, n = c.space.dim;
    std::uniform_int_distribution<std::size_t> ia(0, m - 1), ih(0, n - 1);
    switch ((t / bases.size()) % 4) {
      case 0:  // one omega entry
        c.omega(ia(rng), ia(rng), ih(rng)) += fx::smallRational(rng, 1, 2);
        break;
      case 1: {  // one antisymmetric sigma pair, or a diagonal entry
        const std::size_t a = ia(rng), b = ia(rng), k = ih(rng);
        const Rational d = fx::smallRational(rng, 1, 2);
        c.sigma(a, b, k) += d;
        if (a != b) c.sigma(b, a, k) -= d;
        break;
      }
      case 2:  // section change: always a cocycle
        c = extractCocycle(fx::shiftSection(buildExtension(base), fx::randomMatrix(rng, n, m)));
        break;
      default: {  // section change followed by a random omega tweak
        c = extractCocycle(fx::shiftSection(buildExtension(base), fx::randomMatrix(rng, n, m)));
        Tensor3 delta(m, m, n);
        delta(ia(rng), ia(rng), ih(rng)) = fx::smallRational(rng);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < n; ++k) c.omega(i, j, k) += delta(i, j, k);
      }
    }
    bool conditions = false;
    try {
      conditions = certifyCocycle(c).empty();
    } catch (const std::logic_error&) {
      ++disagreements;
      continue;
    }
    const Algebra block = detail::blockAlgebra(c.acting, c.space, c.maps, &c.sigma, &c.omega, true, "E");
    const bool library = certifyPostLie(block).empty();
    const bool brute = oracle::isPostLie(oracle::extension(c));
    disagreements += conditions != library || conditions != brute;
    cocycles += conditions;
    if (conditions) {
      const ExtensionPresentation e = buildExtension(c);
      disagreements += !certifyPostLie(e.total).empty();
    }
    ++trials;
  }
  o.pass = trials >= 200 && disagreements == 0 && cocycles > 0 && cocycles < trials;
  o.detail = str(trials) + " perturbations (" + str(cocycles) + " cocycles), " + str(disagreements) +
             " disagreements";
  return o;
}

Matrix hCoordinates(const ExtensionPresentation& e, const Matrix& diff) {
  Matrix phi(e.space.dim, e.acting.dim);
  const SubspaceBasis image(e.total.dim, [&] {
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < e.space.dim; ++k) cols.push_back(e.inj.column(k));
    return cols;
  }());
  for (std::size_t a = 0; a < e.acting.dim; ++a) phi.setColumn(a, memberOf(diff.column(a), image).value());
  return phi;
}

// 5. cocycles from different sections are equivalent through phi = s - s'
Outcome sectionIndependence() {
  Outcome o;
  std::mt19937 rng(505);
  std::vector<std::pair<std::string, ExtensionPresentation>> es;
  for (const char* name : {"omega_extension", "omega_extension_shifted", "sl2_split_extension",
                           "sl2_split_extension_ell", "r2_sigma_extension"})
    es.push_back({name, io::extensionFrom(fx::corpus(name).payload, "/payload")});
  es.push_back({"heisenberg adjoint", buildExtension(NonAbelianCocycle::split(adjointAction(algebraDoc("heisenberg"))))});
  std::size_t pairs = 0, failures = 0, classChecks = 0;
  for (const auto& [name, e] : es) {
    std::vector<ExtensionPresentation> sections{e};
    while (sections.size() < 6)
      sections.push_back(fx::shiftSection(e, fx::randomMatrix(rng, e.space.dim, e.acting.dim)));
    std::vector<NonAbelianCocycle> cs;
    for (const auto& s : sections) cs.push_back(extractCocycle(s));
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) {
        if (i == j) continue;
        const Matrix phi = hCoordinates(e, sections[i].section - sections[j].section);
        failures += !checkEquivalenceWitness(cs[i], cs[j], phi).empty();
        ++pairs;
      }
    if (e.space.isAbelian()) {
      const AbelianLayout L{e.acting.dim, e.space.dim};
      const Vector first = classOf(L.flatten(cs[0].sigma, cs[0].omega), cs[0].action());
      for (const auto& c : cs) {
        failures += classOf(L.flatten(c.sigma, c.omega), c.action()) != first;
        ++classChecks;
      }
    }
  }
  o.pass = failures == 0;
  o.detail = str(es.size()) + " extensions x 6 sections, " + str(pairs) + " witness checks, " + str(classChecks) +
             " class checks, " + str(failures) + " failures";
  return o;
}

// 6. exact H^2 dimensions
Outcome h2Values() {
  const Algebra a1 = algebraDoc("a1_null"), r2 = algebraDoc("r2");
  const std::size_t d1 = h2Abelian(actionDoc("trivial_1d", &a1)).dimension;
  const std::size_t d0 = h2Abelian(actionDoc("zero_rep_over_a1")).dimension;
  const ActionData rr = actionDoc("trivial_1d", &r2);
  const std::size_t dr = h2Abelian(rr).dimension;
  const std::size_t expected = oracle::h2(rr).dim();
  Outcome o;
  o.pass = d1 == 1 && d0 == 0 && dr == expected;
  o.detail = "a1/V1 " + str(d1) + " (want 1), a1/V0 " + str(d0) + " (want 0), r2/V1 " + str(dr) + " (oracle " +
             str(expected) + ")";
  return o;
}

// 7. Wells map and inducibility on the omega fixture
Outcome wellsCoherence() {
  Outcome o;
  const NonAbelianCocycle c = io::cocycleFrom(fx::corpus("omega_fixture").payload, "/payload");
  const ActionData rep = c.action();
  const Vector coords = AbelianLayout{1, 1}.flatten(c.sigma, c.omega);
  const ExtensionPresentation e = buildExtension(c);

  const WellsResult bad = wellsObstructionAbelian(rep, coords, AutPair{fx::scalar(2), fx::scalar(1)});
  if (bad.vanishes() || bad.lambda) {
    o.pass = false;
    o.detail += "(2,1) unexpectedly inducible; ";
  }
  std::size_t vanishing = 0, failures = 0, cells = 0;
  for (long beta : {-1L, 1L, 2L, 4L, 9L})
    for (long alpha : {-3L, -1L, 1L, 2L, 3L}) {
      ++cells;
      const AutPair p{fx::scalar(beta), fx::scalar(alpha)};
      const WellsResult w = wellsObstructionAbelian(rep, coords, p);
      failures += w.vanishes() != (beta == alpha * alpha);  // transformed omega is beta / alpha^2
      if (!w.vanishes()) continue;
      ++vanishing;
      if (!w.lambda || !checkInducibleWitness(c, p, *w.lambda).empty()) {
        ++failures;
        continue;
      }
      const Matrix gamma = buildGamma(e, p, *w.lambda);
      failures += !certifyMorphism(e.total, e.total, gamma).empty() || !inverse(gamma) || !(inducedPair(e, gamma) == p);
    }
  o.pass = o.pass && failures == 0 && vanishing > 0;
  o.detail += str(cells) + " grid cells, " + str(vanishing) + " vanishing, " + str(failures) + " failures";
  return o;
}

struct GammaCase {
  ExtensionPresentation e;
  Matrix gamma;
};

bool unipotentBlocks(const ExtensionPresentation& e, const Matrix& gamma) {
  const Matrix M = classificationIso(e);
  const Matrix g = *inverse(M) * gamma * M;
  const std::size_t m = e.acting.dim, n = e.space.dim;
  return g.sub(0, 0, m, m) == Matrix::identity(m) && g.sub(0, m, m, n).isZero() &&
         g.sub(m, m, n, n) == Matrix::identity(n);
}

// 8. image of Aut_H(E) lies in the kernel of the Wells map
Outcome exactSequence() {
  Outcome o;
  std::vector<GammaCase> cases;
  const ExtensionPresentation omegaExt = io::extensionFrom(fx::corpus("omega_extension").payload, "/payload");
  for (long a : {1L, -1L, 2L, -2L, 3L})
    for (const Rational& l : {Rational(0), Rational(1), Rational(-3), Rational(1, 2)})
      cases.push_back({omegaExt, buildGamma(omegaExt, AutPair{fx::scalar(a * a), fx::scalar(a)}, fx::scalar(l))});

  for (const char* name : {"sl2_split_extension"}) {
    const ExtensionPresentation e = io::extensionFrom(fx::corpus(name).payload, "/payload");
    const Matrix theta = fx::chevalley();
    cases.push_back({e, buildGamma(e, AutPair{theta, theta}, Matrix(3, 3))});
    cases.push_back({e, buildGamma(e, AutPair::identity(3, 3), Matrix(3, 3))});
  }
  {
    const ExtensionPresentation e =
        buildExtension(NonAbelianCocycle::split(adjointAction(algebraDoc("sl2_zero_product"))));
    const Matrix theta = fx::chevalley();
    cases.push_back({e, buildGamma(e, AutPair{theta, theta}, Matrix(3, 3))});
  }
  {
    const ExtensionPresentation e = io::extensionFrom(fx::corpus("r2_sigma_extension").payload, "/payload");
    for (long c : {0L, 1L, -2L})
      for (long d : {1L, 2L}) {
        const AutPair p{fx::scalar(d == 1 ? 3 : 1), Matrix{{1, 0}, {Rational(c), Rational(d)}}};
        const WellsResult w = wellsObstructionAbelian(e, p);
        if (w.lambda) cases.push_back({e, buildGamma(e, p, *w.lambda)});
      }
  }
  {
    // r2 acting trivially on the Heisenberg algebra; lambda(e1) central
    const ActionData r{algebraDoc("r2"), algebraDoc("heisenberg"), TripleMaps::zero(2, 3)};
    const ExtensionPresentation e = buildExtension(NonAbelianCocycle::split(r));
    for (long t : {1L, 2L, -1L}) {
      Matrix lambda(3, 2);
      lambda(2, 0) = Rational(t);
      cases.push_back({e, buildGamma(e, AutPair::identity(3, 2), lambda)});
    }
  }

  std::size_t failures = 0, unipotent = 0;
  for (const auto& [e, gamma] : cases) {
    const AutPair p = inducedPair(e, gamma);
    bool inKernel = false;
    if (e.space.isAbelian())
      inKernel = wellsObstructionAbelian(e, p).vanishes();
    else
      inKernel = checkInducibleWitness(extractCocycle(e), p, extractLambda(e, gamma)).empty();
    inKernel = inKernel && wellsMapVanishesOnImage(e, gamma);
    const bool identityPair = p == AutPair::identity(e.space.dim, e.acting.dim);
    const bool blocks = unipotentBlocks(e, gamma);
    failures += !inKernel || identityPair != blocks;
    unipotent += blocks;
  }
  o.pass = cases.size() >= 20 && failures == 0;
  o.detail = str(cases.size()) + " automorphisms (" + str(unipotent) + " unipotent), " + str(failures) + " failures";
  return o;
}

// 9. golden reports, two runs
Outcome cliDeterminism() {
  Outcome o;
  const auto first = golden::runAll(fx::corpusDir());
  const auto second = golden::runAll(fx::corpusDir());
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    std::ifstream in(golden::goldenFile(fx::corpusDir(), first[i].name), std::ios::binary);
    std::stringstream text;
    text << in.rdbuf();
    const bool ok = in && first[i].report == second[i].report && text.str() == first[i].report &&
                    first[i].exit == first[i].expectedExit && second[i].exit == first[i].exit;
    if (!ok) {
      ++mismatches;
      o.detail += first[i].name + " differs; ";
    }
  }
  o.pass = mismatches == 0 && first.size() == second.size() && !first.empty();
  o.detail += str(first.size()) + " commands, " + str(mismatches) + " mismatches";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"axiom fixtures and mutation oracle", axiomFixtures},
      {"semidirect soundness", semidirectSoundness},
      {"crossed module / cat1 round trip", roundTrip},
      {"cocycle conditions vs post-Lie check (>= 200 perturbations)", lemmaDualOracle},
      {"section independence (>= 5 sections)", sectionIndependence},
      {"exact H^2 values", h2Values},
      {"Wells / inducibility coherence on a 5x5 grid", wellsCoherence},
      {"Aut_H(E) image lies in the Wells kernel (>= 20 automorphisms)", exactSequence},
      {"CLI golden determinism", cliDeterminism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " -- "
              << o.detail << "\n";
  }
  return all ? 0 : 1;
}
