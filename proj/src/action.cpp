#include "postlie/action.hpp"

#include <string>

#include "postlie/errors.hpp"

namespace postlie {

TripleMaps TripleMaps::zero(std::size_t actingDim, std::size_t spaceDim) {
  TripleMaps t;
  t.actingDim = actingDim;
  t.spaceDim = spaceDim;
  t.rho.assign(actingDim, Matrix(spaceDim, spaceDim));
  t.psi = t.rho;
  t.phi = t.rho;
  return t;
}

Matrix TripleMaps::combine(const std::vector<Matrix>& maps, const Vector& a) const {
  if (a.size() != actingDim) throw InputShapeError("acting vector has wrong length");
  Matrix m(spaceDim, spaceDim);
  for (std::size_t i = 0; i < actingDim; ++i)
    if (!a[i].isZero()) m += a[i] * maps[i];
  return m;
}

void TripleMaps::validateShape() const {
  for (const auto* family : {&rho, &psi, &phi}) {
    if (family->size() != actingDim)
      throw InputShapeError("expected " + std::to_string(actingDim) + " matrices per map family, got " +
                            std::to_string(family->size()));
    for (const auto& m : *family)
      if (m.rows() != spaceDim || m.cols() != spaceDim)
        throw InputShapeError("map matrix is not " + std::to_string(spaceDim) + "x" + std::to_string(spaceDim));
  }
}

void ActionData::validateShape() const {
  acting.validateShape();
  space.validateShape();
  maps.validateShape();
  if (maps.actingDim != acting.dim || maps.spaceDim != space.dim)
    throw InputShapeError("map dimensions do not match the acting/space algebras");
}

ActionData adjointAction(const Algebra& a) {
  ActionData r{a, a, TripleMaps::zero(a.dim, a.dim)};
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t x = 0; x < a.dim; ++x) {
      r.maps.rho[i].setColumn(x, a.bracket.at(i, x));
      r.maps.psi[i].setColumn(x, a.product.at(x, i));
      r.maps.phi[i].setColumn(x, a.product.at(i, x));
    }
  return r;
}

namespace {

void expectColumns(ViolationList& out, Axiom axiom, std::size_t a, std::size_t b, const Matrix& lhs,
                   const Matrix& rhs) {
  for (std::size_t x = 0; x < lhs.cols(); ++x) out.expectEqual(axiom, {a, b, x}, lhs.column(x), rhs.column(x));
}

}  // namespace

ViolationList certifyRepresentation(const ActionData& r) {
  r.validateShape();
  requirePostLie(r.acting, "acting algebra");
  const Algebra& A = r.acting;
  const TripleMaps& m = r.maps;
  ViolationList out;
  for (std::size_t a = 0; a < A.dim; ++a)
    for (std::size_t b = 0; b < A.dim; ++b) {
      const Matrix& rhoA = m.rho[a];
      const Matrix& rhoB = m.rho[b];
      const Matrix& psiA = m.psi[a];
      const Matrix& psiB = m.psi[b];
      const Matrix& phiA = m.phi[a];
      const Matrix& phiB = m.phi[b];
      const Vector ab = A.product.at(a, b);
      const Vector ba = A.product.at(b, a);
      const Vector brk = A.bracket.at(a, b);
      expectColumns(out, Axiom::RepLie, a, b, m.rhoOf(brk), rhoA * rhoB - rhoB * rhoA);
      expectColumns(out, Axiom::Rep1, a, b, m.rhoOf(ab), phiA * rhoB - rhoB * phiA);
      expectColumns(out, Axiom::Rep2, a, b, m.psiOf(brk), rhoA * psiB - rhoB * psiA);
      expectColumns(out, Axiom::Rep3, a, b, m.psiOf(ab), psiB * psiA - psiB * rhoA - psiB * phiA + phiA * psiB);
      expectColumns(out, Axiom::Rep4, a, b, m.phiOf(brk),
                    phiA * phiB - m.phiOf(ab) - phiB * phiA + m.phiOf(ba));
    }
  return out;
}

ViolationList certifyAction(const ActionData& r) {
  if (!certifyRepresentation(r).empty()) throw UncertifiedInputError("maps do not form a representation");
  requirePostLie(r.space, "space algebra");
  const Algebra& H = r.space;
  const TripleMaps& m = r.maps;
  ViolationList out;
  for (std::size_t a = 0; a < r.acting.dim; ++a) {
    const Matrix& rho = m.rho[a];
    const Matrix& psi = m.psi[a];
    const Matrix& phi = m.phi[a];
    for (std::size_t i = 0; i < H.dim; ++i)
      for (std::size_t j = 0; j < H.dim; ++j) {
        const Vector x = H.unit(i), y = H.unit(j);
        const Vector xy = H.product.at(i, j), yx = H.product.at(j, i), br = H.bracket.at(i, j);
        const Vector rx = rho * x, ry = rho * y, sx = psi * x, sy = psi * y, fx = phi * x, fy = phi * y;
        out.expectEqual(Axiom::Act1, {a, i, j}, rho * br, H.br(rx, y) + H.br(x, ry));
        out.expectEqual(Axiom::Act2, {a, i, j}, rho * xy, H.mul(x, ry) + H.br(y, sx));
        out.expectEqual(Axiom::Act3, {a, i, j}, phi * br, H.br(fx, y) + H.br(x, fy));
        out.expectEqual(Axiom::Act4, {a, i, j}, psi * br, H.mul(x, sy) - psi * xy - H.mul(y, sx) + psi * yx);
        out.expectEqual(Axiom::Act5, {a, i, j}, phi * xy, H.mul(rx, y) - H.mul(sx, y) + H.mul(x, fy) + H.mul(fx, y));
      }
  }
  return out;
}

namespace detail {

Algebra blockAlgebra(const Algebra& acting, const Algebra& space, const TripleMaps& maps, const Tensor3* sigma,
                     const Tensor3* omega, bool includeSpace, std::string label) {
  const std::size_t m = acting.dim, n = space.dim;
  Algebra out = Algebra::null(m + n, std::move(label));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        out.bracket(i, j, k) = acting.bracket(i, j, k);
        out.product(i, j, k) = acting.product(i, j, k);
      }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (sigma) out.bracket(i, j, m + k) = (*sigma)(i, j, k);
        if (omega) out.product(i, j, m + k) = (*omega)(i, j, k);
      }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t k = 0; k < n; ++k) {
        out.bracket(a, m + x, m + k) = maps.rho[a](k, x);
        out.bracket(m + x, a, m + k) = -maps.rho[a](k, x);
        out.product(a, m + x, m + k) = maps.phi[a](k, x);
        out.product(m + x, a, m + k) = maps.psi[a](k, x);
      }
  if (includeSpace)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t k = 0; k < n; ++k) {
          out.bracket(m + x, m + y, m + k) = space.bracket(x, y, k);
          out.product(m + x, m + y, m + k) = space.product(x, y, k);
        }
  return out;
}

}  // namespace detail

static std::string semidirectLabel(const ActionData& r) {
  return (r.acting.label.empty() ? "A" : r.acting.label) + " x| " + (r.space.label.empty() ? "H" : r.space.label);
}

Algebra semidirectRep(const ActionData& r) {
  if (!certifyRepresentation(r).empty()) throw UncertifiedInputError("semidirectRep: maps do not form a representation");
  return detail::blockAlgebra(r.acting, r.space, r.maps, nullptr, nullptr, false, semidirectLabel(r));
}

Algebra semidirectAction(const ActionData& r) {
  if (!certifyAction(r).empty()) throw UncertifiedInputError("semidirectAction: maps do not form an action");
  return detail::blockAlgebra(r.acting, r.space, r.maps, nullptr, nullptr, true, semidirectLabel(r));
}

}  // namespace postlie
