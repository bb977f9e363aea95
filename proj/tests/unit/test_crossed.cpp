#include <doctest.h>

#include "../support/fixtures.hpp"
#include "../support/oracle.hpp"

using namespace postlie;

namespace {

CrossedModule adjointCrossed(const Algebra& a) { return CrossedModule{adjointAction(a), Matrix::identity(a.dim)}; }

CrossedModule r2Ideal() {
  // r2 acting on span{e2} by the bracket, boundary the inclusion
  ActionData r{fx::r2(), Algebra::null(1, "span e2"), TripleMaps::zero(2, 1)};
  r.maps.rho[0] = Matrix::identity(1);
  return CrossedModule{r, Matrix{{0}, {1}}};
}

std::vector<CrossedModule> crossedFixtures() {
  std::vector<CrossedModule> out;
  for (const Algebra& a : fx::postLieAlgebras()) out.push_back(adjointCrossed(a));
  out.push_back(r2Ideal());
  return out;
}

bool sameSpan(const SubspaceBasis& a, const std::vector<Vector>& b) {
  std::vector<oracle::Vec> rows, both;
  for (const auto& v : a.vectors()) rows.push_back(oracle::vec(v));
  both = rows;
  for (const auto& v : b) both.push_back(oracle::vec(v));
  return a.dim() == b.size() && oracle::rank(rows) == oracle::rank(both);
}

}  // namespace

TEST_CASE("adjoint crossed modules certify both ways") {
  for (const CrossedModule& x : crossedFixtures()) {
    CAPTURE(x.base().label);
    CHECK(certifyCrossedModule(x).empty());
    CHECK(certifyCrossedModuleViaSemidirect(x).empty());
  }
}

TEST_CASE("doubling the boundary breaks the Peiffer laws") {
  CrossedModule x = adjointCrossed(fx::sl2(true));
  x.boundary = Rational(2) * x.boundary;
  const ViolationList v = certifyCrossedModule(x);
  REQUIRE_FALSE(v.empty());
  bool peiffer = false;
  for (const auto& item : v.items())
    peiffer = peiffer || item.axiom == Axiom::PeifferBracket || item.axiom == Axiom::PeifferRight ||
              item.axiom == Axiom::PeifferLeft;
  CHECK(peiffer);
  CHECK_FALSE(certifyCrossedModuleViaSemidirect(x).empty());
}

TEST_CASE("cat1 algebra of the adjoint r2 crossed module") {
  const Cat1Algebra c = crossedToCat1(adjointCrossed(fx::r2()));
  CHECK(c.total.dim == 4);
  CHECK(c.sub.dim() == 2);
  CHECK(certifyCat1(c).empty());
}

TEST_CASE("kernels of sigma and tau") {
  for (const CrossedModule& x : crossedFixtures()) {
    const Cat1Algebra c = crossedToCat1(x);
    const std::size_t m = x.base().dim, n = x.top().dim;
    std::vector<Vector> hBlock, graph;
    for (std::size_t y = 0; y < n; ++y) {
      hBlock.push_back(unitVector(m + n, m + y));
      Vector v = unitVector(m + n, m + y);
      for (std::size_t a = 0; a < m; ++a) v[a] = -x.boundary(a, y);
      graph.push_back(v);
    }
    CHECK(sameSpan(kernelBasis(c.sigma), hBlock));
    CHECK(sameSpan(kernelBasis(c.tau), graph));
  }
}

TEST_CASE("tau replaced by sigma fails the kernel pairings when products are nonzero") {
  Cat1Algebra c = crossedToCat1(adjointCrossed(fx::sl2(true)));
  c.tau = c.sigma;
  const ViolationList v = certifyCat1(c);
  REQUIRE_FALSE(v.empty());
  for (const auto& item : v.items())
    CHECK((item.axiom == Axiom::KernelBracketST || item.axiom == Axiom::KernelBracketTS ||
           item.axiom == Axiom::KernelProductST || item.axiom == Axiom::KernelProductTS));
}

TEST_CASE("a non-closed sub is reported") {
  Cat1Algebra c = crossedToCat1(adjointCrossed(fx::sl2()));
  c.sub = SubspaceBasis(6, {unitVector(6, 0), unitVector(6, 1)});
  bool closure = false;
  const ViolationList v = certifyCat1(c);
  for (const auto& item : v.items()) closure = closure || item.axiom == Axiom::SubalgebraClosure;
  CHECK(closure);
}

TEST_CASE("round trip crossed -> cat1 -> crossed") {
  for (const CrossedModule& x : crossedFixtures()) {
    CAPTURE(x.base().label);
    const Cat1Algebra c = crossedToCat1(x);
    CHECK(certifyCat1(c).empty());
    const CrossedModule y = cat1ToCrossed(c);
    CHECK(certifyCrossedModule(y).empty());
    const RoundTrip rt = roundTripIso(x);
    CHECK(rt.laws.empty());
    CHECK(rt.onBase.matrix == Matrix::identity(x.base().dim));
    CHECK(rt.onTop.matrix == Matrix::identity(x.top().dim));
    const Cat1Splitting sp = cat1SplittingIso(c);
    CHECK(sp.laws.empty());
    CHECK(certifyCat1Morphism(sp.split, c, sp.iso).empty());
  }
}

TEST_CASE("crossed module morphisms must intertwine the actions") {
  const CrossedModule x = adjointCrossed(fx::sl2(true));
  CHECK(certifyCrossedMorphism(x, x, Matrix::identity(3), Matrix::identity(3)).empty());
  CHECK(certifyCrossedMorphism(x, x, fx::chevalley(), fx::chevalley()).empty());
  CHECK_FALSE(certifyCrossedMorphism(x, x, fx::chevalley(), Matrix::identity(3)).empty());
}

TEST_CASE("crossedToCat1 refuses uncertified input") {
  CrossedModule x = adjointCrossed(fx::sl2(true));
  x.boundary = Rational(2) * x.boundary;
  CHECK_THROWS_AS(crossedToCat1(x), UncertifiedInputError);
}
