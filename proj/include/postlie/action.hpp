#pragma once

// Representations and actions of one post-Lie algebra on another, and the
// two semidirect products built from them.
//
// Convention, used everywhere: psi_a(x) = x . a and phi_a(x) = a . x.

#include <cstddef>
#include <vector>

#include "postlie/algebra.hpp"

namespace postlie {

/// rho, psi, phi as one spaceDim x spaceDim matrix per acting basis element.
struct TripleMaps {
  std::size_t actingDim = 0;
  std::size_t spaceDim = 0;
  std::vector<Matrix> rho;
  std::vector<Matrix> psi;
  std::vector<Matrix> phi;

  static TripleMaps zero(std::size_t actingDim, std::size_t spaceDim);

  /// rho_a = sum_i a_i rho_{e_i}; likewise for psi and phi.
  Matrix rhoOf(const Vector& a) const { return combine(rho, a); }
  Matrix psiOf(const Vector& a) const { return combine(psi, a); }
  Matrix phiOf(const Vector& a) const { return combine(phi, a); }
  void validateShape() const;

  friend bool operator==(const TripleMaps&, const TripleMaps&) = default;

 private:
  Matrix combine(const std::vector<Matrix>& maps, const Vector& a) const;
};

struct ActionData {
  Algebra acting;  ///< A
  Algebra space;   ///< H
  TripleMaps maps;

  void validateShape() const;
};

/// rho_a = [a, -], psi_a = - . a, phi_a = a . -
ActionData adjointAction(const Algebra& a);

/// The four representation identities plus rho_{[a,b]} = [rho_a, rho_b].
/// UncertifiedInputError unless the acting algebra is post-Lie.
ViolationList certifyRepresentation(const ActionData& r);

/// The five action identities. UncertifiedInputError unless r is a
/// representation and the space is post-Lie.
ViolationList certifyAction(const ActionData& r);

/// A (+) H with the space's own operations ignored.
Algebra semidirectRep(const ActionData& r);

/// A (+) H including the space's operations.
Algebra semidirectAction(const ActionData& r);

namespace detail {

/// Block structure on A (+) H:
///   (a,x).(b,y) = (a.b, [x.y] + phi_a y + psi_b x + omega(a,b))
///   [(a,x),(b,y)] = ([a,b], [[x,y]] + rho_a y - rho_b x + sigma(a,b))
/// with the bracketed H-terms present only when includeSpace is set and the
/// twisting tensors optional.
Algebra blockAlgebra(const Algebra& acting, const Algebra& space, const TripleMaps& maps, const Tensor3* sigma,
                     const Tensor3* omega, bool includeSpace, std::string label);

}  // namespace detail

}  // namespace postlie
