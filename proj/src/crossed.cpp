#include "postlie/crossed.hpp"

#include <algorithm>
#include <string>

#include "postlie/errors.hpp"

namespace postlie {

namespace {

void validate(const CrossedModule& x) {
  x.action.validateShape();
  if (x.boundary.rows() != x.base().dim || x.boundary.cols() != x.top().dim)
    throw InputShapeError("boundary must be " + std::to_string(x.base().dim) + "x" + std::to_string(x.top().dim));
}

void remap(ViolationList& out, const ViolationList& in, Axiom bracketTag, Axiom productTag) {
  for (const auto& v : in.items())
    out.add(Violation{v.axiom == Axiom::MorphismBracket ? bracketTag : productTag, v.basis, v.discrepancy});
}

// Discrepancy is the rank deficit, max(rows, cols) - rank.
void expectBijective(ViolationList& out, std::vector<std::size_t> tag, const Matrix& m) {
  const std::size_t r = rank(m), full = std::max(m.rows(), m.cols());
  if (r != full) out.add(Violation{Axiom::Bijective, std::move(tag), {Rational(static_cast<long>(full - r))}});
}

}  // namespace

ViolationList certifyCrossedModule(const CrossedModule& x) {
  validate(x);
  requirePostLie(x.base(), "crossed module base");
  requirePostLie(x.top(), "crossed module top");
  if (!certifyAction(x.action).empty()) throw UncertifiedInputError("crossed module action does not certify");

  const Algebra& A = x.base();
  const Algebra& H = x.top();
  const TripleMaps& m = x.action.maps;
  const Matrix& d = x.boundary;
  ViolationList out = certifyMorphism(H, A, d);
  for (std::size_t a = 0; a < A.dim; ++a)
    for (std::size_t i = 0; i < H.dim; ++i) {
      const Vector ea = A.unit(a), ex = H.unit(i), dx = d * ex;
      out.expectEqual(Axiom::EquivarianceBracket, {a, i}, d * (m.rho[a] * ex), A.br(ea, dx));
      out.expectEqual(Axiom::EquivarianceRight, {a, i}, d * (m.psi[a] * ex), A.mul(dx, ea));
      out.expectEqual(Axiom::EquivarianceLeft, {a, i}, d * (m.phi[a] * ex), A.mul(ea, dx));
    }
  for (std::size_t i = 0; i < H.dim; ++i)
    for (std::size_t j = 0; j < H.dim; ++j) {
      const Vector ex = H.unit(i), ey = H.unit(j);
      // rho_{d x} y = [x,y];  psi_{d y} x = x.y;  phi_{d x} y = x.y
      out.expectEqual(Axiom::PeifferBracket, {i, j}, m.rhoOf(d * ex) * ey, H.bracket.at(i, j));
      out.expectEqual(Axiom::PeifferRight, {i, j}, m.psiOf(d * ey) * ex, H.product.at(i, j));
      out.expectEqual(Axiom::PeifferLeft, {i, j}, m.phiOf(d * ex) * ey, H.product.at(i, j));
    }
  return out;
}

ViolationList certifyCrossedModuleViaSemidirect(const CrossedModule& x) {
  validate(x);
  const std::size_t m = x.base().dim, n = x.top().dim;
  const Algebra hh = semidirectAction(adjointAction(x.top()));
  const Algebra ah = semidirectAction(x.action);
  const Algebra aa = semidirectAction(adjointAction(x.base()));
  const Matrix left = Matrix::block(x.boundary, Matrix(m, n), Matrix(n, n), Matrix::identity(n));
  const Matrix right = Matrix::block(Matrix::identity(m), Matrix(m, n), Matrix(m, m), x.boundary);
  ViolationList out = certifyMorphism(hh, ah, left);
  out.append(certifyMorphism(ah, aa, right));
  return out;
}

Cat1Algebra crossedToCat1(const CrossedModule& x) {
  if (!certifyCrossedModule(x).empty()) throw UncertifiedInputError("crossedToCat1: input is not a crossed module");
  const std::size_t m = x.base().dim, n = x.top().dim;
  Cat1Algebra c;
  c.total = semidirectAction(x.action);
  std::vector<Vector> sub;
  for (std::size_t i = 0; i < m; ++i) sub.push_back(unitVector(m + n, i));
  c.sub = SubspaceBasis(m + n, std::move(sub));
  c.sigma = Matrix::block(Matrix::identity(m), Matrix(m, n), Matrix(n, m), Matrix(n, n));
  c.tau = Matrix::block(Matrix::identity(m), x.boundary, Matrix(n, m), Matrix(n, n));
  return c;
}

ViolationList certifyCat1(const Cat1Algebra& c) {
  c.total.validateShape();
  const std::size_t d = c.total.dim;
  if (c.sub.ambientDim() != d || c.sigma.rows() != d || c.sigma.cols() != d || c.tau.rows() != d ||
      c.tau.cols() != d)
    throw InputShapeError("cat1 data does not match the total dimension " + std::to_string(d));
  requirePostLie(c.total, "cat1 total algebra");

  ViolationList out;
  const Algebra& T = c.total;
  const SubspaceReducer sub(c.sub);
  for (std::size_t i = 0; i < c.sub.dim(); ++i)
    for (std::size_t j = 0; j < c.sub.dim(); ++j) {
      out.expectZero(Axiom::SubalgebraClosure, {i, j}, sub.residual(T.br(c.sub[i], c.sub[j])));
      out.expectZero(Axiom::SubalgebraClosure, {i, j}, sub.residual(T.mul(c.sub[i], c.sub[j])));
    }
  remap(out, certifyMorphism(T, T, c.sigma), Axiom::StructuralSigma, Axiom::StructuralSigma);
  remap(out, certifyMorphism(T, T, c.tau), Axiom::StructuralTau, Axiom::StructuralTau);
  for (std::size_t j = 0; j < d; ++j) {
    out.expectZero(Axiom::ImageSigma, {j}, sub.residual(c.sigma.column(j)));
    out.expectZero(Axiom::ImageTau, {j}, sub.residual(c.tau.column(j)));
  }
  for (std::size_t i = 0; i < c.sub.dim(); ++i) {
    out.expectEqual(Axiom::IdentitySigma, {i}, c.sigma * c.sub[i], c.sub[i]);
    out.expectEqual(Axiom::IdentityTau, {i}, c.tau * c.sub[i], c.sub[i]);
  }
  const SubspaceBasis ks = kernelBasis(c.sigma);
  const SubspaceBasis kt = kernelBasis(c.tau);
  for (std::size_t i = 0; i < ks.dim(); ++i)
    for (std::size_t j = 0; j < kt.dim(); ++j) {
      out.expectZero(Axiom::KernelBracketST, {i, j}, T.br(ks[i], kt[j]));
      out.expectZero(Axiom::KernelBracketTS, {j, i}, T.br(kt[j], ks[i]));
      out.expectZero(Axiom::KernelProductST, {i, j}, T.mul(ks[i], kt[j]));
      out.expectZero(Axiom::KernelProductTS, {j, i}, T.mul(kt[j], ks[i]));
    }
  return out;
}

CrossedModule cat1ToCrossed(const Cat1Algebra& c) {
  if (!certifyCat1(c).empty()) throw UncertifiedInputError("cat1ToCrossed: input is not a cat1 algebra");
  const Algebra& T = c.total;
  const SubspaceBasis ker = kernelBasis(c.sigma);
  CrossedModule x;
  x.action.acting = inducedSubalgebra(T, c.sub, T.label.empty() ? "A0" : T.label + " / A0");
  x.action.space = inducedSubalgebra(T, ker, T.label.empty() ? "ker sigma" : T.label + " / ker sigma");
  const std::size_t m = c.sub.dim(), n = ker.dim();
  x.action.maps = TripleMaps::zero(m, n);

  auto inKernel = [&](const Vector& v, const char* what) {
    auto coords = memberOf(v, ker);
    if (!coords) throw NotClosedError(std::string("induced ") + what + " leaves ker sigma");
    return *coords;
  };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t k = 0; k < n; ++k) {
      x.action.maps.rho[a].setColumn(k, inKernel(T.br(c.sub[a], ker[k]), "rho"));
      x.action.maps.psi[a].setColumn(k, inKernel(T.mul(ker[k], c.sub[a]), "psi"));
      x.action.maps.phi[a].setColumn(k, inKernel(T.mul(c.sub[a], ker[k]), "phi"));
    }
  x.boundary = Matrix(m, n);
  for (std::size_t k = 0; k < n; ++k) {
    auto coords = memberOf(c.tau * ker[k], c.sub);
    if (!coords) throw NotClosedError("tau maps ker sigma outside the subalgebra");
    x.boundary.setColumn(k, *coords);
  }
  return x;
}

ViolationList certifyCrossedMorphism(const CrossedModule& from, const CrossedModule& to, const Matrix& f,
                                     const Matrix& g) {
  validate(from);
  validate(to);
  ViolationList out = certifyMorphism(from.base(), to.base(), f);
  out.append(certifyMorphism(from.top(), to.top(), g));
  const TripleMaps& m = from.action.maps;
  const TripleMaps& m2 = to.action.maps;
  for (std::size_t j = 0; j < from.top().dim; ++j)
    out.expectEqual(Axiom::CrossedBoundary, {j}, f * from.boundary.column(j), to.boundary * g.column(j));
  for (std::size_t a = 0; a < from.base().dim; ++a) {
    const Vector fa = f.column(a);
    for (std::size_t x = 0; x < from.top().dim; ++x) {
      const Vector gx = g.column(x);
      out.expectEqual(Axiom::CrossedRho, {a, x}, g * m.rho[a].column(x), m2.rhoOf(fa) * gx);
      out.expectEqual(Axiom::CrossedPsi, {a, x}, g * m.psi[a].column(x), m2.psiOf(fa) * gx);
      out.expectEqual(Axiom::CrossedPhi, {a, x}, g * m.phi[a].column(x), m2.phiOf(fa) * gx);
    }
  }
  return out;
}

ViolationList certifyCat1Morphism(const Cat1Algebra& from, const Cat1Algebra& to, const Matrix& h) {
  ViolationList out = certifyMorphism(from.total, to.total, h);
  const SubspaceReducer sub(to.sub);
  for (std::size_t i = 0; i < from.sub.dim(); ++i) out.expectZero(Axiom::Cat1Sub, {i}, sub.residual(h * from.sub[i]));
  out.expectEqual(Axiom::Cat1Sigma, {}, to.sigma * h, h * from.sigma);
  out.expectEqual(Axiom::Cat1Tau, {}, to.tau * h, h * from.tau);
  return out;
}

RoundTrip roundTripIso(const CrossedModule& x) {
  const Cat1Algebra c = crossedToCat1(x);
  CrossedModule y = cat1ToCrossed(c);
  const std::size_t m = x.base().dim, n = x.top().dim;
  const SubspaceBasis ker = kernelBasis(c.sigma);

  Matrix f(y.base().dim, m), g(y.top().dim, n);
  for (std::size_t a = 0; a < m; ++a) f.setColumn(a, *memberOf(unitVector(m + n, a), c.sub));
  for (std::size_t k = 0; k < n; ++k) {
    auto coords = memberOf(unitVector(m + n, m + k), ker);
    if (!coords) throw NotClosedError("H-block is not contained in ker sigma");
    g.setColumn(k, *coords);
  }
  ViolationList laws = certifyCrossedMorphism(x, y, f, g);
  expectBijective(laws, {0}, f);
  expectBijective(laws, {1}, g);
  return RoundTrip{y, AlgebraMorphism{x.base(), y.base(), f}, AlgebraMorphism{x.top(), y.top(), g},
                   std::move(laws)};
}

Cat1Splitting cat1SplittingIso(const Cat1Algebra& c) {
  const CrossedModule x = cat1ToCrossed(c);
  Cat1Splitting out;
  out.split = crossedToCat1(x);
  const SubspaceBasis ker = kernelBasis(c.sigma);
  std::vector<Vector> columns = c.sub.vectors();
  columns.insert(columns.end(), ker.vectors().begin(), ker.vectors().end());
  out.iso = Matrix::fromColumns(c.total.dim, columns);
  out.laws = certifyCat1Morphism(out.split, c, out.iso);
  expectBijective(out.laws, {}, out.iso);
  return out;
}

}  // namespace postlie
