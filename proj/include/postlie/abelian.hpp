#pragma once

// Abelian 2-cocycles, coboundaries and H^2 for a representation on a vector
// space V with zero operations.
//
// Coordinates of a pair (sigma, omega): sigma(e_i, e_j)_k for i < j in
// lexicographic (i, j, k) order, then omega(e_i, e_j)_k for all (i, j, k) in
// lexicographic order. kFlatteningOrder names this layout in reports.

#include <string_view>

#include "postlie/extension.hpp"

namespace postlie {

inline constexpr std::string_view kFlatteningOrder = "sigma[i<j][k] then omega[i][j][k], lexicographic";

struct AbelianLayout {
  std::size_t m = 0;  ///< dim A
  std::size_t n = 0;  ///< dim V

  std::size_t sigmaCount() const { return m * (m > 0 ? m - 1 : 0) / 2 * n; }
  std::size_t omegaCount() const { return m * m * n; }
  std::size_t size() const { return sigmaCount() + omegaCount(); }

  /// NotACocycleError if sigma is not antisymmetric.
  Vector flatten(const Tensor3& sigma, const Tensor3& omega) const;
  std::pair<Tensor3, Tensor3> unflatten(const Vector& coords) const;
};

/// The cocycle with the representation's maps and the given (sigma, omega).
NonAbelianCocycle abelianCocycle(const ActionData& rep, const Vector& coords);

/// Kernel of the linear conditions on (sigma, omega). UncertifiedInputError
/// unless rep is a representation on a space with zero operations.
SubspaceBasis abelianCocycleSpace(const ActionData& rep);

/// Image of phi |-> (delta_sigma phi, delta_omega phi) with
///   delta_sigma phi(a,b) = rho_a phi(b) - rho_b phi(a) - phi([a,b])
///   delta_omega phi(a,b) = phi_a phi(b) + psi_b phi(a) - phi(a.b)
SubspaceBasis coboundarySpace(const ActionData& rep);

struct H2 {
  std::size_t dimension = 0;
  SubspaceBasis cocycles{0};
  SubspaceBasis coboundaries{0};
  /// RREF basis of the cocycle space reduced modulo coboundaries; class
  /// coordinates are taken in this basis.
  SubspaceBasis complement{0};
};

H2 h2Abelian(const ActionData& rep);

/// Coordinates of the class of (sigma, omega) in h.complement.
/// NotACocycleError unless the pair is a cocycle.
Vector classOf(const Vector& coords, const ActionData& rep, const H2& h);
Vector classOf(const Vector& coords, const ActionData& rep);

}  // namespace postlie
