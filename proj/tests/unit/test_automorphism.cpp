#include <random>

#include <doctest.h>

#include "../support/fixtures.hpp"
#include "postlie/abelian.hpp"

using namespace postlie;

namespace {

ExtensionPresentation sl2SplitExtension(bool negProduct) {
  return buildExtension(NonAbelianCocycle::split(adjointAction(fx::sl2(negProduct))));
}

Matrix diag(const Matrix& a, const Matrix& b) {
  return Matrix::block(a, Matrix(a.rows(), b.cols()), Matrix(b.rows(), a.cols()), b);
}

ActionData phiIdentityRep() {
  ActionData r = fx::trivialRep(Algebra::null(1), 1);
  r.maps.phi[0] = Matrix::identity(1);
  return r;
}

}  // namespace

TEST_CASE("block diagonal automorphisms of a split extension induce their blocks") {
  for (bool neg : {false, true}) {
    const ExtensionPresentation e = sl2SplitExtension(neg);
    const Matrix theta = fx::chevalley();
    const Matrix gamma = diag(theta, theta);
    CHECK(certifyMorphism(e.total, e.total, gamma).empty());
    const AutPair p = inducedPair(e, gamma);
    CHECK(p.beta == theta);
    CHECK(p.alpha == theta);
    CHECK(wellsMapVanishesOnImage(e, gamma));
  }
}

TEST_CASE("a unipotent automorphism induces the identity pair") {
  const ExtensionPresentation e = buildExtension(fx::omegaFixture());
  const AutPair id = AutPair::identity(1, 1);
  const Matrix lambda = fx::scalar(1);
  CHECK(checkInducibleWitness(fx::omegaFixture(), id, lambda).empty());
  const Matrix gamma = buildGamma(e, id, lambda);
  CHECK(gamma == Matrix{{1, 0}, {1, 1}});
  CHECK_FALSE(gamma == Matrix::identity(2));
  CHECK(inducedPair(e, gamma) == id);
  CHECK(extractLambda(e, gamma) == lambda);
}

TEST_CASE("equivariant pairs with zero witness on the split extension") {
  const NonAbelianCocycle c = NonAbelianCocycle::split(adjointAction(fx::sl2(true)));
  const Matrix theta = fx::chevalley();
  CHECK(checkInducibleWitness(c, AutPair{theta, theta}, Matrix(3, 3)).empty());
  const ViolationList v = checkInducibleWitness(c, AutPair{theta, Matrix::identity(3)}, Matrix(3, 3));
  REQUIRE_FALSE(v.empty());
  CHECK(v.items().front().axiom == Axiom::InducibleI);
}

TEST_CASE("inverse of buildGamma") {
  const ExtensionPresentation e = buildExtension(fx::omegaFixture());
  for (long a : {1L, -1L, 2L, 3L}) {
    const AutPair p{fx::scalar(a * a), fx::scalar(a)};
    const Matrix lambda = fx::scalar(5);
    const Matrix gamma = buildGamma(e, p, lambda);
    const AutPair q = p.inverse();
    const Matrix back = buildGamma(e, q, Rational(-1) * q.beta * lambda * q.alpha);
    CHECK(gamma * back == Matrix::identity(2));
    CHECK(*inverse(gamma) == back);
  }
}

TEST_CASE("transforming by a pair and back is the identity") {
  std::mt19937 rng(8);
  const NonAbelianCocycle c = fx::omegaFixture();
  const NonAbelianCocycle s = NonAbelianCocycle::split(adjointAction(fx::sl2(true)));
  const AutPair theta{fx::chevalley(), fx::chevalley()};
  CHECK(transformCocycle(transformCocycle(s, theta), theta.inverse()) == s);
  for (int t = 0; t < 10; ++t) {
    Rational b = fx::smallRational(rng, 1, 5), a = fx::smallRational(rng, -3, -1);
    const AutPair p{fx::scalar(b), fx::scalar(a)};
    CHECK(transformCocycle(transformCocycle(c, p), p.inverse()) == c);
  }
}

TEST_CASE("Wells obstruction on the omega fixture") {
  const ActionData r = fx::trivialRep(Algebra::null(1), 1);
  const NonAbelianCocycle c = fx::omegaFixture();
  const AutPair p21{fx::scalar(2), fx::scalar(1)};
  CHECK(transformCocycle(c, p21).omega(0, 0, 0) == Rational(2));
  const WellsResult w = wellsObstructionAbelian(r, Vector{1}, p21);
  CHECK(w.classCoords == Vector{1});
  CHECK_FALSE(w.vanishes());
  CHECK_FALSE(w.lambda.has_value());

  const AutPair p42{fx::scalar(4), fx::scalar(2)};
  CHECK(transformCocycle(c, p42).omega(0, 0, 0) == Rational(1));
  const WellsResult v = wellsObstructionAbelian(r, Vector{1}, p42);
  CHECK(v.vanishes());
  REQUIRE(v.lambda.has_value());
  CHECK(checkInducibleWitness(c, p42, *v.lambda).empty());
  const ExtensionPresentation e = buildExtension(c);
  CHECK(inducedPair(e, buildGamma(e, p42, *v.lambda)) == p42);
}

TEST_CASE("buildGamma rejects invalid witnesses and pairs") {
  const ExtensionPresentation e = buildExtension(fx::omegaFixture());
  CHECK_THROWS_AS(buildGamma(e, AutPair{fx::scalar(2), fx::scalar(1)}, fx::scalar(0)), WitnessInvalidError);
  CHECK_THROWS_AS(buildGamma(e, AutPair{fx::scalar(0), fx::scalar(1)}, fx::scalar(0)), NotAutomorphismError);
  CHECK_THROWS_AS(buildGamma(e, AutPair::identity(1, 1), Matrix(2, 1)), InputShapeError);
}

TEST_CASE("inducedPair needs an H-preserving automorphism") {
  const ExtensionPresentation e = buildExtension(NonAbelianCocycle::split(fx::trivialRep(Algebra::null(1), 1)));
  CHECK_THROWS_AS(inducedPair(e, Matrix{{0, 1}, {1, 0}}), NotHPreservingError);
  CHECK_THROWS_AS(inducedPair(e, Matrix{{1, 0}, {0, 0}}), NotAutomorphismError);
}

TEST_CASE("Wells needs a certified and compatible pair") {
  const ActionData r = phiIdentityRep();
  CHECK_THROWS_AS(wellsObstructionAbelian(r, Vector{0}, AutPair{fx::scalar(1), fx::scalar(2)}),
                  IncompatiblePairError);
  CHECK_THROWS_AS(wellsObstructionAbelian(r, Vector{0}, AutPair{fx::scalar(0), fx::scalar(1)}),
                  NotAutomorphismError);
  CHECK_FALSE(checkCompatibility(r, AutPair{fx::scalar(1), fx::scalar(2)}).empty());
  CHECK(checkCompatibility(r, AutPair{fx::scalar(3), fx::scalar(1)}).empty());
}

TEST_CASE("hand-built Chevalley automorphism on the split zero-product sl2 extension") {
  const ExtensionPresentation e = sl2SplitExtension(false);
  const Matrix theta = fx::chevalley();
  const AutPair p{theta, theta};
  CHECK(certifyAutPair(e.space, e.acting, p).empty());
  const Matrix gamma = buildGamma(e, p, Matrix(3, 3));
  CHECK(gamma == diag(theta, theta));
  CHECK(wellsMapVanishesOnImage(e, gamma));
}

TEST_CASE("random scalar pairs: vanishing class exactly when a witness exists") {
  std::mt19937 rng(31);
  const ActionData r = fx::trivialRep(Algebra::null(1), 1);
  const ExtensionPresentation e = buildExtension(fx::omegaFixture());
  for (int t = 0; t < 40; ++t) {
    Rational a = fx::smallRational(rng, -3, 3);
    if (a.isZero()) a = Rational(1);
    const Rational b = t % 2 ? a * a : Rational(fx::smallRational(rng, 1, 9));
    const AutPair p{fx::scalar(b), fx::scalar(a)};
    const WellsResult w = wellsObstructionAbelian(r, Vector{1}, p);
    CHECK(w.vanishes() == (b == a * a));
    CHECK(w.lambda.has_value() == w.vanishes());
    if (w.lambda) CHECK(inducedPair(e, buildGamma(e, p, *w.lambda)) == p);
  }
}
