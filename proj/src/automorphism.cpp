#include "postlie/automorphism.hpp"

#include <stdexcept>
#include <string>

#include "postlie/errors.hpp"

namespace postlie {

namespace {

void requireSquare(const Matrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw InputShapeError(std::string(what) + " must be " + std::to_string(n) + "x" + std::to_string(n));
}

Matrix invertOrThrow(const Matrix& m, const char* what) {
  auto inv = inverse(m);
  if (!inv) throw NotAutomorphismError(std::string(what) + " is singular");
  return *inv;
}

// Coordinates adapted to E = s(A) + i(H): frame = [s | i] and its inverse.
struct Frame {
  std::size_t m, n;
  Matrix basis;
  Matrix inv;

  explicit Frame(const ExtensionPresentation& e) : m(e.acting.dim), n(e.space.dim) {
    e.validateShape();
    if (!(e.proj * e.section == Matrix::identity(m))) throw SectionError("p o s is not the identity on A");
    basis = classificationIso(e);
    auto i = inverse(basis);
    if (!i) throw UncertifiedInputError("s(A) and i(H) do not span the total algebra");
    inv = *i;
  }
  /// H-coordinates of vectors of E, i.e. the lower block of the inverse.
  Matrix hPart() const { return inv.sub(m, 0, n, m + n); }
};

void requireAutomorphism(const Algebra& total, const Matrix& gamma) {
  requireSquare(gamma, total.dim, "gamma");
  if (!certifyMorphism(total, total, gamma).empty()) throw NotAutomorphismError("gamma is not a morphism");
  if (!inverse(gamma)) throw NotAutomorphismError("gamma is singular");
}

void requireHPreserving(const ExtensionPresentation& e, const Matrix& gamma) {
  if (!(e.proj * gamma * e.inj).isZero()) throw NotHPreservingError("gamma does not map i(H) into i(H)");
}

}  // namespace

AutPair AutPair::inverse() const {
  return AutPair{invertOrThrow(beta, "beta"), invertOrThrow(alpha, "alpha")};
}

ViolationList certifyAutPair(const Algebra& space, const Algebra& acting, const AutPair& pair) {
  requireSquare(pair.beta, space.dim, "beta");
  requireSquare(pair.alpha, acting.dim, "alpha");
  ViolationList out;
  const ViolationList betaLaws = certifyMorphism(space, space, pair.beta);
  for (const auto& v : betaLaws.items())
    out.add(Violation{Axiom::AutBeta, v.basis, v.discrepancy});
  const ViolationList alphaLaws = certifyMorphism(acting, acting, pair.alpha);
  for (const auto& v : alphaLaws.items())
    out.add(Violation{Axiom::AutAlpha, v.basis, v.discrepancy});
  if (const std::size_t r = rank(pair.beta); r != space.dim)
    out.add(Violation{Axiom::AutBeta, {}, {Rational(static_cast<long>(space.dim - r))}});
  if (const std::size_t r = rank(pair.alpha); r != acting.dim)
    out.add(Violation{Axiom::AutAlpha, {}, {Rational(static_cast<long>(acting.dim - r))}});
  return out;
}

AutPair inducedPair(const ExtensionPresentation& e, const Matrix& gamma) {
  const Frame f(e);
  requireAutomorphism(e.total, gamma);
  requireHPreserving(e, gamma);
  AutPair out{f.hPart() * gamma * e.inj, e.proj * gamma * e.section};
  if (f.m > 0 && f.n > 0) {
    Matrix shift(f.n, f.m);
    shift(0, 0) = Rational(1);
    const Matrix other = e.section + e.inj * shift;
    if (!(e.proj * gamma * other == out.alpha)) throw std::logic_error("p gamma s depends on the section");
  }
  return out;
}

ViolationList checkInducibleWitness(const NonAbelianCocycle& c, const AutPair& pair, const Matrix& lambda) {
  c.validateShape();
  const Algebra& A = c.acting;
  const Algebra& H = c.space;
  const TripleMaps& t = c.maps;
  requireSquare(pair.beta, H.dim, "beta");
  requireSquare(pair.alpha, A.dim, "alpha");
  if (lambda.rows() != H.dim || lambda.cols() != A.dim)
    throw InputShapeError("lambda must be " + std::to_string(H.dim) + "x" + std::to_string(A.dim));
  const Matrix& beta = pair.beta;
  const Matrix& alpha = pair.alpha;
  ViolationList out;
  for (std::size_t a = 0; a < A.dim; ++a) {
    const Vector la = lambda.column(a), aa = alpha.column(a);
    const Matrix rhoA = t.rhoOf(aa), psiA = t.psiOf(aa), phiA = t.phiOf(aa);
    for (std::size_t x = 0; x < H.dim; ++x) {
      const Vector X = H.unit(x), bx = beta.column(x);
      out.expectEqual(Axiom::InducibleI, {a, x}, H.br(la, bx), beta * (t.rho[a] * X) - rhoA * bx);
      out.expectEqual(Axiom::InducibleII, {a, x}, H.mul(bx, la), beta * (t.psi[a] * X) - psiA * bx);
      out.expectEqual(Axiom::InducibleIII, {a, x}, H.mul(la, bx), beta * (t.phi[a] * X) - phiA * bx);
    }
  }
  for (std::size_t a1 = 0; a1 < A.dim; ++a1)
    for (std::size_t a2 = 0; a2 < A.dim; ++a2) {
      const Vector l1 = lambda.column(a1), l2 = lambda.column(a2);
      const Vector x1 = alpha.column(a1), x2 = alpha.column(a2);
      out.expectEqual(Axiom::InducibleIV, {a1, a2}, beta * c.sigma.at(a1, a2) - c.sigma.apply(x1, x2),
                      t.rhoOf(x1) * l2 - t.rhoOf(x2) * l1 + H.br(l1, l2) - lambda * A.bracket.at(a1, a2));
      out.expectEqual(Axiom::InducibleV, {a1, a2}, beta * c.omega.at(a1, a2) - c.omega.apply(x1, x2),
                      t.psiOf(x2) * l1 + t.phiOf(x1) * l2 + H.mul(l1, l2) - lambda * A.product.at(a1, a2));
    }
  return out;
}

Matrix buildGamma(const ExtensionPresentation& e, const AutPair& pair, const Matrix& lambda) {
  const Frame f(e);
  const NonAbelianCocycle c = extractCocycle(e);
  if (!certifyAutPair(e.space, e.acting, pair).empty()) throw NotAutomorphismError("pair is not in Aut(H) x Aut(A)");
  const ViolationList bad = checkInducibleWitness(c, pair, lambda);
  if (!bad.empty())
    throw WitnessInvalidError("witness fails condition " + std::string(axiomName(bad.items().front().axiom)));
  const Matrix local = Matrix::block(pair.alpha, Matrix(f.m, f.n), lambda, pair.beta);
  Matrix gamma = f.basis * local * f.inv;
  if (!certifyMorphism(e.total, e.total, gamma).empty()) throw std::logic_error("buildGamma produced a non-morphism");
  return gamma;
}

Matrix extractLambda(const ExtensionPresentation& e, const Matrix& gamma) {
  const Frame f(e);
  requireSquare(gamma, e.total.dim, "gamma");
  requireHPreserving(e, gamma);
  const Matrix alpha = e.proj * gamma * e.section;
  return f.hPart() * (gamma * e.section - e.section * alpha);
}

NonAbelianCocycle transformCocycle(const NonAbelianCocycle& c, const AutPair& pair) {
  c.validateShape();
  const std::size_t m = c.acting.dim, n = c.space.dim;
  requireSquare(pair.beta, n, "beta");
  requireSquare(pair.alpha, m, "alpha");
  const AutPair inv = pair.inverse();
  const Matrix& beta = pair.beta;
  NonAbelianCocycle out{c.acting, c.space, TripleMaps::zero(m, n), Tensor3(m, m, n), Tensor3(m, m, n)};
  for (std::size_t a = 0; a < m; ++a) {
    const Vector pre = inv.alpha.column(a);
    out.maps.rho[a] = beta * c.maps.rhoOf(pre) * inv.beta;
    out.maps.psi[a] = beta * c.maps.psiOf(pre) * inv.beta;
    out.maps.phi[a] = beta * c.maps.phiOf(pre) * inv.beta;
    for (std::size_t b = 0; b < m; ++b) {
      const Vector preB = inv.alpha.column(b);
      out.sigma.set(a, b, beta * c.sigma.apply(pre, preB));
      out.omega.set(a, b, beta * c.omega.apply(pre, preB));
    }
  }
  return out;
}

ViolationList checkCompatibility(const ActionData& rep, const AutPair& pair) {
  rep.validateShape();
  requireSquare(pair.beta, rep.space.dim, "beta");
  requireSquare(pair.alpha, rep.acting.dim, "alpha");
  const TripleMaps& t = rep.maps;
  ViolationList out;
  for (std::size_t a = 0; a < rep.acting.dim; ++a) {
    const Vector aa = pair.alpha.column(a);
    const Matrix r = pair.beta * t.rho[a] - t.rhoOf(aa) * pair.beta;
    const Matrix s = pair.beta * t.psi[a] - t.psiOf(aa) * pair.beta;
    const Matrix f = pair.beta * t.phi[a] - t.phiOf(aa) * pair.beta;
    for (std::size_t x = 0; x < rep.space.dim; ++x) {
      out.expectZero(Axiom::CompatRho, {a, x}, r.column(x));
      out.expectZero(Axiom::CompatPsi, {a, x}, s.column(x));
      out.expectZero(Axiom::CompatPhi, {a, x}, f.column(x));
    }
  }
  return out;
}

WellsResult wellsObstructionAbelian(const ActionData& rep, const Vector& coords, const AutPair& pair) {
  const H2 h = h2Abelian(rep);
  if (!certifyAutPair(rep.space, rep.acting, pair).empty()) throw NotAutomorphismError("pair is not in Aut(V) x Aut(A)");
  if (!checkCompatibility(rep, pair).empty()) throw IncompatiblePairError("pair is not compatible with the action");
  classOf(coords, rep, h);

  const AbelianLayout L{rep.acting.dim, rep.space.dim};
  const NonAbelianCocycle c = abelianCocycle(rep, coords);
  const NonAbelianCocycle t = transformCocycle(c, pair);
  WellsResult out;
  out.classCoords = classOf(L.flatten(t.sigma, t.omega) - coords, rep, h);

  // lambda entries in (a, k) order; one column per unknown
  const Algebra& A = rep.acting;
  const std::size_t m = L.m, n = L.n;
  auto image = [&](const Matrix& lambda) {
    Vector v;
    for (std::size_t a1 = 0; a1 < m; ++a1)
      for (std::size_t a2 = 0; a2 < m; ++a2) {
        const Vector l1 = lambda.column(a1), l2 = lambda.column(a2);
        const Vector x1 = pair.alpha.column(a1), x2 = pair.alpha.column(a2);
        const Vector s = rep.maps.rhoOf(x1) * l2 - rep.maps.rhoOf(x2) * l1 - lambda * A.bracket.at(a1, a2);
        const Vector w = rep.maps.psiOf(x2) * l1 + rep.maps.phiOf(x1) * l2 - lambda * A.product.at(a1, a2);
        v.insert(v.end(), s.begin(), s.end());
        v.insert(v.end(), w.begin(), w.end());
      }
    return v;
  };
  std::vector<Vector> columns;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t k = 0; k < n; ++k) {
      Matrix unit(n, m);
      unit(k, a) = Rational(1);
      columns.push_back(image(unit));
    }
  Vector target;
  for (std::size_t a1 = 0; a1 < m; ++a1)
    for (std::size_t a2 = 0; a2 < m; ++a2) {
      const Vector x1 = pair.alpha.column(a1), x2 = pair.alpha.column(a2);
      const Vector s = pair.beta * c.sigma.at(a1, a2) - c.sigma.apply(x1, x2);
      const Vector w = pair.beta * c.omega.at(a1, a2) - c.omega.apply(x1, x2);
      target.insert(target.end(), s.begin(), s.end());
      target.insert(target.end(), w.begin(), w.end());
    }
  const LinearSolution sol = solveLinear(Matrix::fromColumns(target.size(), columns), target);
  if (sol.particular) {
    Matrix lambda(n, m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t k = 0; k < n; ++k) lambda(k, a) = (*sol.particular)[a * n + k];
    if (!checkInducibleWitness(c, pair, lambda).empty()) throw std::logic_error("solved witness fails (I)-(V)");
    out.lambda = std::move(lambda);
  }
  if (out.vanishes() != out.lambda.has_value())
    throw std::logic_error("Wells class and witness solvability disagree");
  return out;
}

WellsResult wellsObstructionAbelian(const ExtensionPresentation& e, const AutPair& pair) {
  const NonAbelianCocycle c = extractCocycle(e);
  const AbelianLayout L{c.acting.dim, c.space.dim};
  return wellsObstructionAbelian(c.action(), L.flatten(c.sigma, c.omega), pair);
}

bool wellsMapVanishesOnImage(const ExtensionPresentation& e, const Matrix& gamma) {
  const AutPair pair = inducedPair(e, gamma);
  const Matrix lambda = extractLambda(e, gamma);
  return checkInducibleWitness(extractCocycle(e), pair, lambda).empty();
}

}  // namespace postlie
