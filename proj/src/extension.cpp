#include "postlie/extension.hpp"

#include <stdexcept>
#include <string>

#include "postlie/errors.hpp"

namespace postlie {

namespace {

std::string dims(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

void requireShape(const Matrix& m, std::size_t r, std::size_t c, const char* what) {
  if (m.rows() != r || m.cols() != c)
    throw InputShapeError(std::string(what) + " must be " + dims(r, c) + ", got " + dims(m.rows(), m.cols()));
}

void requireTensor(const Tensor3& t, std::size_t m, std::size_t n, const char* what) {
  if (t.extent(0) != m || t.extent(1) != m || t.extent(2) != n)
    throw InputShapeError(std::string(what) + " must be " + std::to_string(m) + "x" + std::to_string(m) + "x" +
                          std::to_string(n));
}

// Evaluates the cocycle identities on basis elements. Each method returns
// lhs - rhs so the same code serves certification and the linear engine.
struct Evaluator {
  const NonAbelianCocycle& c;
  const Algebra& A = c.acting;
  const Algebra& H = c.space;
  const TripleMaps& m = c.maps;

  Vector hx(std::size_t x) const { return H.unit(x); }
  Vector sig(const Vector& a, const Vector& b) const { return c.sigma.apply(a, b); }
  Vector om(const Vector& a, const Vector& b) const { return c.omega.apply(a, b); }

  Vector a1(std::size_t b, std::size_t x, std::size_t z) const {
    const Vector X = hx(x), Z = hx(z);
    return m.phi[b] * H.mul(X, Z) -
           (H.mul(m.phi[b] * X, Z) + H.mul(m.rho[b] * X, Z) - H.mul(m.psi[b] * X, Z) + H.mul(X, m.phi[b] * Z));
  }
  Vector a2(std::size_t cc, std::size_t x, std::size_t y) const {
    const Vector X = hx(x), Y = hx(y);
    const Matrix& p = m.psi[cc];
    return p * H.br(X, Y) - (p * H.mul(Y, X) - H.mul(Y, p * X) - p * H.mul(X, Y) + H.mul(X, p * Y));
  }
  Vector a3(std::size_t b, std::size_t cc, std::size_t x) const {
    const Vector X = hx(x);
    const Matrix& pc = m.psi[cc];
    return m.psiOf(A.product.at(b, cc)) * X - (pc * (m.psi[b] * X) - pc * (m.rho[b] * X) - pc * (m.phi[b] * X) +
                                               m.phi[b] * (pc * X) - H.mul(X, c.omega.at(b, cc)));
  }
  Vector a4(std::size_t a, std::size_t b, std::size_t z) const {
    const Vector Z = hx(z);
    const Vector lhs = m.phiOf(A.bracket.at(a, b)) * Z + H.mul(c.sigma.at(a, b), Z);
    const Vector rhs = m.phiOf(A.product.at(b, a)) * Z - m.phi[b] * (m.phi[a] * Z) - m.phiOf(A.product.at(a, b)) * Z +
                       m.phi[a] * (m.phi[b] * Z) + H.mul(c.omega.at(b, a), Z) - H.mul(c.omega.at(a, b), Z);
    return lhs - rhs;
  }
  Vector a5(std::size_t a, std::size_t b, std::size_t cc) const {
    const Vector ea = A.unit(a), eb = A.unit(b), ec = A.unit(cc);
    const Matrix& pc = m.psi[cc];
    const Vector lhs = pc * c.sigma.at(a, b) + om(A.bracket.at(a, b), ec);
    const Vector rhs = pc * c.omega.at(b, a) + om(A.product.at(b, a), ec) - m.phi[b] * c.omega.at(a, cc) -
                       om(eb, A.product.at(a, cc)) - pc * c.omega.at(a, b) - om(A.product.at(a, b), ec) +
                       m.phi[a] * c.omega.at(b, cc) + om(ea, A.product.at(b, cc));
    return lhs - rhs;
  }
  Vector a6(std::size_t cc, std::size_t x, std::size_t y) const {
    const Vector X = hx(x), Y = hx(y);
    return m.rho[cc] * H.mul(X, Y) - (H.mul(X, m.rho[cc] * Y) + H.br(Y, m.psi[cc] * X));
  }
  Vector a7(std::size_t a, std::size_t y, std::size_t z) const {
    const Vector Y = hx(y), Z = hx(z);
    const Matrix& f = m.phi[a];
    return f * H.br(Y, Z) - (H.br(f * Y, Z) + H.br(Y, f * Z));
  }
  Vector a8(std::size_t b, std::size_t cc, std::size_t x) const {
    const Vector X = hx(x);
    return m.psiOf(A.bracket.at(b, cc)) * X -
           (m.rho[b] * (m.psi[cc] * X) - m.rho[cc] * (m.psi[b] * X) - H.mul(X, c.sigma.at(b, cc)));
  }
  Vector a9(std::size_t a, std::size_t cc, std::size_t y) const {
    const Vector Y = hx(y);
    return m.rhoOf(A.product.at(a, cc)) * Y -
           (m.phi[a] * (m.rho[cc] * Y) - m.rho[cc] * (m.phi[a] * Y) + H.br(Y, c.omega.at(a, cc)));
  }
  Vector a10(std::size_t a, std::size_t b, std::size_t cc) const {
    const Vector ea = A.unit(a), eb = A.unit(b), ec = A.unit(cc);
    const Vector lhs = m.phi[a] * c.sigma.at(b, cc) + om(ea, A.bracket.at(b, cc));
    const Vector rhs = m.rho[b] * c.omega.at(a, cc) - m.rho[cc] * c.omega.at(a, b) + sig(A.product.at(a, b), ec) +
                       sig(eb, A.product.at(a, cc));
    return lhs - rhs;
  }
  Vector rhoDerivation(std::size_t a, std::size_t x, std::size_t y) const {
    const Vector X = hx(x), Y = hx(y);
    const Matrix& r = m.rho[a];
    return r * H.br(X, Y) - (H.br(r * X, Y) + H.br(X, r * Y));
  }
  Vector twistedRep(std::size_t a, std::size_t b, std::size_t x) const {
    const Vector X = hx(x);
    return m.rho[a] * (m.rho[b] * X) - m.rho[b] * (m.rho[a] * X) -
           (m.rhoOf(A.bracket.at(a, b)) * X + H.br(c.sigma.at(a, b), X));
  }
  Vector sigmaJacobi(std::size_t a, std::size_t b, std::size_t cc) const {
    const Vector ea = A.unit(a), eb = A.unit(b), ec = A.unit(cc);
    return m.rho[a] * c.sigma.at(b, cc) + sig(ea, A.bracket.at(b, cc)) + m.rho[b] * c.sigma.at(cc, a) +
           sig(eb, A.bracket.at(cc, a)) + m.rho[cc] * c.sigma.at(a, b) + sig(ec, A.bracket.at(a, b));
  }
};

ViolationList explicitConditions(const NonAbelianCocycle& c) {
  const Evaluator ev{c};
  const std::size_t m = c.acting.dim, n = c.space.dim;
  ViolationList out;
  // A-index with two H-indices
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        out.expectZero(Axiom::A1, {a, x, y}, ev.a1(a, x, y));
        out.expectZero(Axiom::A2, {a, x, y}, ev.a2(a, x, y));
        out.expectZero(Axiom::A6, {a, x, y}, ev.a6(a, x, y));
        out.expectZero(Axiom::A7, {a, x, y}, ev.a7(a, x, y));
        out.expectZero(Axiom::RhoDerivation, {a, x, y}, ev.rhoDerivation(a, x, y));
      }
  // two A-indices with one H-index
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t x = 0; x < n; ++x) {
        out.expectZero(Axiom::A3, {a, b, x}, ev.a3(a, b, x));
        out.expectZero(Axiom::A4, {a, b, x}, ev.a4(a, b, x));
        out.expectZero(Axiom::A8, {a, b, x}, ev.a8(a, b, x));
        out.expectZero(Axiom::A9, {a, b, x}, ev.a9(a, b, x));
        out.expectZero(Axiom::RhoTwistedRep, {a, b, x}, ev.twistedRep(a, b, x));
      }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b)
      out.expectZero(Axiom::SigmaAntisymmetry, {a, b}, c.sigma.at(a, b) + c.sigma.at(b, a));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t cc = 0; cc < m; ++cc) {
        out.expectZero(Axiom::A5, {a, b, cc}, ev.a5(a, b, cc));
        out.expectZero(Axiom::A10, {a, b, cc}, ev.a10(a, b, cc));
        if (a < b && b < cc) out.expectZero(Axiom::SigmaJacobi, {a, b, cc}, ev.sigmaJacobi(a, b, cc));
      }
  return out;
}

std::string totalLabel(const Algebra& a, const Algebra& h) {
  return (a.label.empty() ? "A" : a.label) + " x|_(sigma,omega) " + (h.label.empty() ? "H" : h.label);
}

}  // namespace

NonAbelianCocycle NonAbelianCocycle::split(const ActionData& r) {
  r.validateShape();
  return NonAbelianCocycle{r.acting, r.space, r.maps, Tensor3(r.acting.dim, r.acting.dim, r.space.dim),
                           Tensor3(r.acting.dim, r.acting.dim, r.space.dim)};
}

void NonAbelianCocycle::validateShape() const {
  action().validateShape();
  requireTensor(sigma, acting.dim, space.dim, "sigma");
  requireTensor(omega, acting.dim, space.dim, "omega");
}

void ExtensionPresentation::validateShape() const {
  acting.validateShape();
  space.validateShape();
  total.validateShape();
  requireShape(inj, total.dim, space.dim, "inj");
  requireShape(proj, acting.dim, total.dim, "proj");
  requireShape(section, total.dim, acting.dim, "section");
}

ViolationList certifyExtension(const ExtensionPresentation& e) {
  e.validateShape();
  requirePostLie(e.total, "extension total algebra");
  ViolationList out;
  const Matrix pi = e.proj * e.inj;
  for (std::size_t x = 0; x < e.space.dim; ++x) out.expectZero(Axiom::ExtProjInj, {x}, pi.column(x));
  const Matrix ps = e.proj * e.section;
  for (std::size_t a = 0; a < e.acting.dim; ++a)
    out.expectEqual(Axiom::ExtProjSection, {a}, ps.column(a), e.acting.unit(a));
  const std::size_t ri = rank(e.inj), rp = rank(e.proj);
  if (ri != e.space.dim) out.add(Violation{Axiom::ExtInjective, {}, {Rational(static_cast<long>(e.space.dim - ri))}});
  if (rp != e.acting.dim)
    out.add(Violation{Axiom::ExtSurjective, {}, {Rational(static_cast<long>(e.acting.dim - rp))}});
  // im i = ker p once p i = 0: compare dimensions.
  const std::size_t kp = e.total.dim - rp;
  if (ri != kp)
    out.add(Violation{Axiom::ExtExactness, {}, {Rational(static_cast<long>(kp)) - Rational(static_cast<long>(ri))}});
  const ViolationList injLaws = certifyMorphism(e.space, e.total, e.inj);
  for (const auto& v : injLaws.items())
    out.add(Violation{Axiom::ExtInjMorphism, v.basis, v.discrepancy});
  const ViolationList projLaws = certifyMorphism(e.total, e.acting, e.proj);
  for (const auto& v : projLaws.items())
    out.add(Violation{Axiom::ExtProjMorphism, v.basis, v.discrepancy});
  return out;
}

NonAbelianCocycle extractCocycle(const ExtensionPresentation& e) {
  e.validateShape();
  if (!(e.proj * e.section == Matrix::identity(e.acting.dim))) throw SectionError("p o s is not the identity on A");
  if (rank(e.inj) != e.space.dim) throw UncertifiedInputError("inj is not injective");
  const SubspaceBasis image(e.total.dim, [&] {
    std::vector<Vector> cols;
    for (std::size_t x = 0; x < e.space.dim; ++x) cols.push_back(e.inj.column(x));
    return cols;
  }());
  const std::size_t m = e.acting.dim, n = e.space.dim;
  auto inH = [&](const Vector& v, const char* what, std::size_t i, std::size_t j) {
    auto coords = memberOf(v, image);
    if (!coords)
      throw CoordinateError(std::string(what) + "(" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not in the image of inj");
    return *coords;
  };

  const Algebra& E = e.total;
  NonAbelianCocycle c{e.acting, e.space, TripleMaps::zero(m, n), Tensor3(m, m, n), Tensor3(m, m, n)};
  for (std::size_t a = 0; a < m; ++a) {
    const Vector sa = e.section.column(a);
    for (std::size_t x = 0; x < n; ++x) {
      const Vector ix = e.inj.column(x);
      c.maps.rho[a].setColumn(x, inH(E.br(sa, ix), "rho", a, x));
      c.maps.psi[a].setColumn(x, inH(E.mul(ix, sa), "psi", a, x));
      c.maps.phi[a].setColumn(x, inH(E.mul(sa, ix), "phi", a, x));
    }
    for (std::size_t b = 0; b < m; ++b) {
      const Vector sb = e.section.column(b);
      c.sigma.set(a, b, inH(E.br(sa, sb) - e.section * e.acting.bracket.at(a, b), "sigma", a, b));
      c.omega.set(a, b, inH(E.mul(sa, sb) - e.section * e.acting.product.at(a, b), "omega", a, b));
    }
  }
  if (!certifyExtension(e).empty()) throw UncertifiedInputError("extension does not certify");
  return c;
}

ViolationList certifyCocycle(const NonAbelianCocycle& c) {
  c.validateShape();
  requirePostLie(c.acting, "cocycle acting algebra");
  requirePostLie(c.space, "cocycle space algebra");
  ViolationList out = explicitConditions(c);
  const Algebra built = detail::blockAlgebra(c.acting, c.space, c.maps, &c.sigma, &c.omega, true, {});
  if (out.empty() != isPostLie(built))
    throw std::logic_error("cocycle conditions disagree with the post-Lie check of the built algebra");
  return out;
}

ExtensionPresentation buildExtension(const NonAbelianCocycle& c) {
  if (!certifyCocycle(c).empty()) throw UncertifiedInputError("buildExtension: cocycle does not certify");
  const std::size_t m = c.acting.dim, n = c.space.dim;
  ExtensionPresentation e;
  e.acting = c.acting;
  e.space = c.space;
  e.total = detail::blockAlgebra(c.acting, c.space, c.maps, &c.sigma, &c.omega, true,
                                 totalLabel(c.acting, c.space));
  e.inj = Matrix(m + n, n);
  e.proj = Matrix(m, m + n);
  e.section = Matrix(m + n, m);
  for (std::size_t x = 0; x < n; ++x) e.inj(m + x, x) = Rational(1);
  for (std::size_t a = 0; a < m; ++a) {
    e.proj(a, a) = Rational(1);
    e.section(a, a) = Rational(1);
  }
  return e;
}

ViolationList checkEquivalenceWitness(const NonAbelianCocycle& c, const NonAbelianCocycle& cp, const Matrix& phi) {
  c.validateShape();
  cp.validateShape();
  if (!(c.acting == cp.acting) || !(c.space == cp.space))
    throw InputShapeError("cocycles are over different algebras");
  const Algebra& A = c.acting;
  const Algebra& H = c.space;
  requireShape(phi, H.dim, A.dim, "phi");
  ViolationList out;
  for (std::size_t a = 0; a < A.dim; ++a) {
    const Vector pa = phi.column(a);
    for (std::size_t x = 0; x < H.dim; ++x) {
      const Vector X = H.unit(x);
      out.expectEqual(Axiom::EquivRho, {a, x}, c.maps.rho[a] * X - cp.maps.rho[a] * X, H.br(pa, X));
      out.expectEqual(Axiom::EquivPsi, {a, x}, c.maps.psi[a] * X - cp.maps.psi[a] * X, H.mul(X, pa));
      out.expectEqual(Axiom::EquivPhi, {a, x}, c.maps.phi[a] * X - cp.maps.phi[a] * X, H.mul(pa, X));
    }
  }
  for (std::size_t a = 0; a < A.dim; ++a)
    for (std::size_t b = 0; b < A.dim; ++b) {
      const Vector pa = phi.column(a), pb = phi.column(b);
      out.expectEqual(Axiom::EquivSigma, {a, b}, c.sigma.at(a, b) - cp.sigma.at(a, b),
                      cp.maps.rho[a] * pb - cp.maps.rho[b] * pa - phi * A.bracket.at(a, b) + H.br(pa, pb));
      out.expectEqual(Axiom::EquivOmega, {a, b}, c.omega.at(a, b) - cp.omega.at(a, b),
                      cp.maps.phi[a] * pb + cp.maps.psi[b] * pa - phi * A.product.at(a, b) + H.mul(pa, pb));
    }
  return out;
}

ViolationList checkExtensionEquivalence(const ExtensionPresentation& e, const ExtensionPresentation& ep,
                                        const Matrix& theta) {
  e.validateShape();
  ep.validateShape();
  if (!(e.acting == ep.acting) || !(e.space == ep.space))
    throw InputShapeError("extensions are over different algebras");
  requireShape(theta, ep.total.dim, e.total.dim, "theta");
  ViolationList out = certifyMorphism(e.total, ep.total, theta);
  const Matrix ti = theta * e.inj;
  for (std::size_t x = 0; x < e.space.dim; ++x) out.expectEqual(Axiom::DiagramInj, {x}, ti.column(x), ep.inj.column(x));
  const Matrix pt = ep.proj * theta;
  for (std::size_t j = 0; j < e.total.dim; ++j) out.expectEqual(Axiom::DiagramProj, {j}, pt.column(j), e.proj.column(j));
  return out;
}

Matrix classificationIso(const ExtensionPresentation& e) {
  e.validateShape();
  const std::size_t m = e.acting.dim, n = e.space.dim;
  Matrix out(e.total.dim, m + n);
  for (std::size_t a = 0; a < m; ++a) out.setColumn(a, e.section.column(a));
  for (std::size_t x = 0; x < n; ++x) out.setColumn(m + x, e.inj.column(x));
  return out;
}

namespace detail {

Vector abelianResidual(const NonAbelianCocycle& c) {
  const Evaluator ev{c};
  const std::size_t m = c.acting.dim;
  Vector out;
  auto push = [&](const Vector& v) { out.insert(out.end(), v.begin(), v.end()); };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t cc = 0; cc < m; ++cc) push(ev.a5(a, b, cc));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t cc = 0; cc < m; ++cc) push(ev.a10(a, b, cc));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t cc = b + 1; cc < m; ++cc) push(ev.sigmaJacobi(a, b, cc));
  return out;
}

}  // namespace detail

}  // namespace postlie
