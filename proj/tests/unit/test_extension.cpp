#include <random>

#include <doctest.h>

#include "../support/fixtures.hpp"
#include "../support/oracle.hpp"
#include "postlie/abelian.hpp"

using namespace postlie;

namespace {

NonAbelianCocycle sl2Split() { return NonAbelianCocycle::split(adjointAction(fx::sl2(true))); }

NonAbelianCocycle r2Sigma() {
  NonAbelianCocycle c = NonAbelianCocycle::split(fx::trivialRep(fx::r2(), 1));
  c.sigma(0, 1, 0) = Rational(1);
  c.sigma(1, 0, 0) = Rational(-1);
  return c;
}

Matrix unipotent(const Matrix& phi) {
  const std::size_t m = phi.cols(), n = phi.rows();
  return Matrix::block(Matrix::identity(m), Matrix(m, n), phi, Matrix::identity(n));
}

bool hasAxiom(const ViolationList& v, Axiom a) {
  for (const auto& item : v.items())
    if (item.axiom == a) return true;
  return false;
}

}  // namespace

TEST_CASE("the omega fixture is a cocycle and builds e.e = v") {
  const NonAbelianCocycle c = fx::omegaFixture();
  CHECK(certifyCocycle(c).empty());
  const ExtensionPresentation e = buildExtension(c);
  CHECK(e.total.dim == 2);
  CHECK(e.total.bracket.isZero());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        CHECK(e.total.product(i, j, k) == Rational((i == 0 && j == 0 && k == 1) ? 1 : 0));
  CHECK(certifyExtension(e).empty());
}

TEST_CASE("extracting through the canonical section recovers the cocycle") {
  for (const NonAbelianCocycle& c : {fx::omegaFixture(), sl2Split(), r2Sigma()}) {
    REQUIRE(certifyCocycle(c).empty());
    CHECK(extractCocycle(buildExtension(c)) == c);
  }
}

TEST_CASE("a diagonal sigma is not antisymmetric") {
  NonAbelianCocycle c = fx::omegaFixture();
  c.omega(0, 0, 0) = Rational(0);
  c.sigma(0, 0, 0) = Rational(1);
  const ViolationList v = certifyCocycle(c);
  REQUIRE(v.total() == 1);
  CHECK(v.items().front().axiom == Axiom::SigmaAntisymmetry);
  CHECK_THROWS_AS(buildExtension(c), UncertifiedInputError);
}

TEST_CASE("changing the section of the split sl2 extension") {
  const NonAbelianCocycle c = sl2Split();
  const ExtensionPresentation e = buildExtension(c);
  const Matrix ell{{1, 0, 0}, {0, 0, 1}, {0, Rational(-1, 2), 0}};
  const NonAbelianCocycle shifted = extractCocycle(fx::shiftSection(e, ell));
  CHECK_FALSE(shifted.sigma.isZero());
  CHECK_FALSE(shifted.omega.isZero());
  CHECK(certifyCocycle(shifted).empty());
  // phi = s - s'
  CHECK(checkEquivalenceWitness(c, shifted, Rational(-1) * ell).empty());
  CHECK(checkEquivalenceWitness(shifted, c, ell).empty());
  CHECK_FALSE(checkEquivalenceWitness(c, shifted, ell).empty());
}

TEST_CASE("section-change formulas hold entrywise") {
  // sigma - sigma' = rho'_a phi b - rho'_b phi a - phi[a,b] + [phi a, phi b]
  const NonAbelianCocycle c = sl2Split();
  const Matrix ell{{0, 1, 0}, {0, 0, 0}, {2, 0, 1}};
  const NonAbelianCocycle cp = extractCocycle(fx::shiftSection(buildExtension(c), ell));
  const Matrix phi = Rational(-1) * ell;
  const Algebra& A = c.acting;
  const Algebra& H = c.space;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      const Vector pa = phi.column(a), pb = phi.column(b);
      Vector rhs = cp.maps.rho[a] * pb - cp.maps.rho[b] * pa - phi * A.bracket.at(a, b) + H.br(pa, pb);
      CHECK(c.sigma.at(a, b) - cp.sigma.at(a, b) == rhs);
      // omega - omega' = phi'_a phi b + psi'_b phi a - phi(ab) + phi a . phi b
      Vector rhs2 = cp.maps.phi[a] * pb + cp.maps.psi[b] * pa - phi * A.product.at(a, b) + H.mul(pa, pb);
      CHECK(c.omega.at(a, b) - cp.omega.at(a, b) == rhs2);
    }
}

TEST_CASE("a random phi between unrelated cocycles fails a named law") {
  std::mt19937 rng(99);
  const NonAbelianCocycle c = sl2Split();
  const NonAbelianCocycle other =
      extractCocycle(fx::shiftSection(buildExtension(c), Matrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}));
  for (int t = 0; t < 10; ++t) {
    const Matrix phi = fx::randomMatrix(rng, 3, 3);
    if (phi == Matrix{{-1, -1, 0}, {0, -1, 0}, {0, 0, -1}}) continue;
    const ViolationList v = checkEquivalenceWitness(c, other, phi);
    REQUIRE_FALSE(v.empty());
    const Axiom first = v.items().front().axiom;
    CHECK((first == Axiom::EquivRho || first == Axiom::EquivPsi || first == Axiom::EquivPhi ||
           first == Axiom::EquivSigma || first == Axiom::EquivOmega));
  }
}

TEST_CASE("Theta maps the extension of c onto the extension of an equivalent c'") {
  const NonAbelianCocycle c = sl2Split();
  const Matrix ell{{0, 0, 1}, {1, 0, 0}, {0, 0, 0}};
  const NonAbelianCocycle cp = extractCocycle(fx::shiftSection(buildExtension(c), ell));
  const Matrix phi = Rational(-1) * ell;
  REQUIRE(checkEquivalenceWitness(c, cp, phi).empty());
  const ExtensionPresentation e = buildExtension(c), ep = buildExtension(cp);
  CHECK(checkExtensionEquivalence(e, ep, unipotent(phi)).empty());
  CHECK_FALSE(checkExtensionEquivalence(e, ep, Matrix::identity(6)).empty());
}

TEST_CASE("classification iso sends the built extension onto the given one") {
  const ExtensionPresentation base = buildExtension(r2Sigma());
  const ExtensionPresentation e = fx::shiftSection(base, Matrix{{2, -1}});
  const Matrix iso = classificationIso(e);
  const ExtensionPresentation built = buildExtension(extractCocycle(e));
  CHECK(certifyMorphism(built.total, e.total, iso).empty());
  CHECK(iso * built.inj == e.inj);
  CHECK(e.proj * iso == built.proj);
  CHECK(classificationIso(base) == Matrix::identity(3));
}

TEST_CASE("extension certification catches broken presentations") {
  ExtensionPresentation e = buildExtension(fx::omegaFixture());
  ExtensionPresentation badProj = e;
  badProj.proj = Matrix{{1, 1}};
  CHECK(hasAxiom(certifyExtension(badProj), Axiom::ExtProjInj));
  ExtensionPresentation badSection = e;
  badSection.section = Matrix{{2}, {0}};
  CHECK(hasAxiom(certifyExtension(badSection), Axiom::ExtProjSection));
  CHECK_THROWS_AS(extractCocycle(badSection), SectionError);
  ExtensionPresentation badInj = e;
  badInj.inj = Matrix{{0}, {0}};
  CHECK_THROWS_AS(extractCocycle(badInj), UncertifiedInputError);
  ExtensionPresentation wrongShape = e;
  wrongShape.inj = Matrix(3, 1);
  CHECK_THROWS_AS(certifyExtension(wrongShape), InputShapeError);
}

TEST_CASE("the explicit conditions agree with post-Lie certification of the block algebra") {
  std::mt19937 rng(4242);
  const std::vector<NonAbelianCocycle> bases{fx::omegaFixture(), sl2Split(), r2Sigma(),
                                             NonAbelianCocycle::split(adjointAction(fx::r2(true)))};
  int libraryDisagreements = 0, oracleDisagreements = 0, cocycles = 0;
  for (int t = 0; t < 80; ++t) {
    NonAbelianCocycle c = bases[t % bases.size()];
    const std::size_t m = c.acting.dim, n = c.space.dim;
    std::uniform_int_distribution<std::size_t> ia(0, m - 1), ih(0, n - 1);
    if (t % 2) {
      const std::size_t a = ia(rng), b = ia(rng), k = ih(rng);
      c.omega(a, b, k) += fx::smallRational(rng);
    } else {
      const std::size_t a = ia(rng), b = ia(rng), k = ih(rng);
      const Rational d = fx::smallRational(rng);
      c.sigma(a, b, k) += d;
      if (t % 4 == 0 && a != b) c.sigma(b, a, k) -= d;
    }
    const bool conditions = certifyCocycle(c).empty();
    const Algebra block =
        detail::blockAlgebra(c.acting, c.space, c.maps, &c.sigma, &c.omega, true, "probe");
    libraryDisagreements += conditions != certifyPostLie(block).empty();
    oracleDisagreements += conditions != oracle::isPostLie(oracle::extension(c));
    cocycles += conditions;
  }
  CHECK(libraryDisagreements == 0);
  CHECK(oracleDisagreements == 0);
  CHECK(cocycles > 0);
}
