#include "postlie/abelian.hpp"

#include <stdexcept>
#include <string>

#include "postlie/errors.hpp"

namespace postlie {

Vector AbelianLayout::flatten(const Tensor3& sigma, const Tensor3& omega) const {
  if (sigma.extent(0) != m || sigma.extent(1) != m || sigma.extent(2) != n || omega.extent(0) != m ||
      omega.extent(1) != m || omega.extent(2) != n)
    throw InputShapeError("sigma and omega must be " + std::to_string(m) + "x" + std::to_string(m) + "x" +
                          std::to_string(n));
  Vector out;
  out.reserve(size());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k)
      if (!sigma(i, i, k).isZero()) throw NotACocycleError("sigma is not antisymmetric");
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (sigma(i, j, k) != -sigma(j, i, k)) throw NotACocycleError("sigma is not antisymmetric");
        out.push_back(sigma(i, j, k));
      }
  }
  out.insert(out.end(), omega.entries().begin(), omega.entries().end());
  return out;
}

std::pair<Tensor3, Tensor3> AbelianLayout::unflatten(const Vector& coords) const {
  if (coords.size() != size())
    throw InputShapeError("expected " + std::to_string(size()) + " cocycle coordinates, got " +
                          std::to_string(coords.size()));
  Tensor3 sigma(m, m, n), omega(m, m, n);
  std::size_t p = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k, ++p) {
        sigma(i, j, k) = coords[p];
        sigma(j, i, k) = -coords[p];
      }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k, ++p) omega(i, j, k) = coords[p];
  return {std::move(sigma), std::move(omega)};
}

namespace {

void requireAbelianRep(const ActionData& rep) {
  rep.validateShape();
  if (!rep.space.isAbelian()) throw UncertifiedInputError("the space must have zero bracket and product");
  if (!certifyRepresentation(rep).empty()) throw UncertifiedInputError("maps do not form a representation");
}

AbelianLayout layoutOf(const ActionData& rep) { return AbelianLayout{rep.acting.dim, rep.space.dim}; }

}  // namespace

NonAbelianCocycle abelianCocycle(const ActionData& rep, const Vector& coords) {
  auto [sigma, omega] = layoutOf(rep).unflatten(coords);
  return NonAbelianCocycle{rep.acting, rep.space, rep.maps, std::move(sigma), std::move(omega)};
}

SubspaceBasis abelianCocycleSpace(const ActionData& rep) {
  requireAbelianRep(rep);
  const AbelianLayout L = layoutOf(rep);
  std::vector<Vector> columns;
  for (std::size_t p = 0; p < L.size(); ++p)
    columns.push_back(detail::abelianResidual(abelianCocycle(rep, unitVector(L.size(), p))));
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  return kernelBasis(Matrix::fromColumns(rows, columns));
}

SubspaceBasis coboundarySpace(const ActionData& rep) {
  requireAbelianRep(rep);
  const AbelianLayout L = layoutOf(rep);
  const Algebra& A = rep.acting;
  const TripleMaps& t = rep.maps;
  std::vector<Vector> images;
  // phi ranges over the unit maps e_a |-> v_k, in (a, k) order
  for (std::size_t a0 = 0; a0 < L.m; ++a0)
    for (std::size_t k0 = 0; k0 < L.n; ++k0) {
      Matrix phi(L.n, L.m);
      phi(k0, a0) = Rational(1);
      Tensor3 ds(L.m, L.m, L.n), dw(L.m, L.m, L.n);
      for (std::size_t a = 0; a < L.m; ++a)
        for (std::size_t b = 0; b < L.m; ++b) {
          const Vector pa = phi.column(a), pb = phi.column(b);
          ds.set(a, b, t.rho[a] * pb - t.rho[b] * pa - phi * A.bracket.at(a, b));
          dw.set(a, b, t.phi[a] * pb + t.psi[b] * pa - phi * A.product.at(a, b));
        }
      images.push_back(L.flatten(ds, dw));
    }
  return spanOf(L.size(), images);
}

H2 h2Abelian(const ActionData& rep) {
  H2 h;
  h.cocycles = abelianCocycleSpace(rep);
  h.coboundaries = coboundarySpace(rep);
  h.dimension = quotientDimension(h.cocycles, h.coboundaries);
  const SubspaceReducer reducer(h.coboundaries);
  std::vector<Vector> reduced;
  for (const auto& z : h.cocycles.vectors()) reduced.push_back(reducer.residual(z));
  h.complement = spanOf(layoutOf(rep).size(), reduced);
  return h;
}

Vector classOf(const Vector& coords, const ActionData& rep, const H2& h) {
  const AbelianLayout L = layoutOf(rep);
  if (coords.size() != L.size())
    throw InputShapeError("expected " + std::to_string(L.size()) + " cocycle coordinates, got " +
                          std::to_string(coords.size()));
  if (!isZero(detail::abelianResidual(abelianCocycle(rep, coords))))
    throw NotACocycleError("(sigma, omega) does not satisfy the abelian cocycle conditions");
  const Vector r = SubspaceReducer(h.coboundaries).residual(coords);
  auto c = memberOf(r, h.complement);
  if (!c) throw std::logic_error("reduced cocycle outside the complement");
  return *c;
}

Vector classOf(const Vector& coords, const ActionData& rep) { return classOf(coords, rep, h2Abelian(rep)); }

}  // namespace postlie
