#pragma once

// Automorphism pairs (beta, alpha) in Aut(H) x Aut(A), inducibility, the
// transformed cocycle and the Wells map.

#include <optional>

#include "postlie/abelian.hpp"
#include "postlie/extension.hpp"

namespace postlie {

struct AutPair {
  Matrix beta;   ///< H -> H
  Matrix alpha;  ///< A -> A

  static AutPair identity(std::size_t hDim, std::size_t aDim) {
    return AutPair{Matrix::identity(hDim), Matrix::identity(aDim)};
  }
  /// Componentwise product: (this o other).
  AutPair compose(const AutPair& other) const { return AutPair{beta * other.beta, alpha * other.alpha}; }
  /// NotAutomorphismError if either matrix is singular.
  AutPair inverse() const;

  friend bool operator==(const AutPair&, const AutPair&) = default;
};

/// beta an automorphism of H and alpha of A: morphism laws plus bijectivity,
/// reported as AutBeta / AutAlpha.
ViolationList certifyAutPair(const Algebra& space, const Algebra& acting, const AutPair& pair);

/// (gamma restricted to H, p gamma s). NotAutomorphismError unless gamma is
/// an automorphism of the total algebra; NotHPreservingError unless it maps
/// i(H) into i(H).
AutPair inducedPair(const ExtensionPresentation& e, const Matrix& gamma);

/// Conditions (I)..(V) for lambda : A -> H (hDim x aDim).
ViolationList checkInducibleWitness(const NonAbelianCocycle& c, const AutPair& pair, const Matrix& lambda);

/// gamma(i x + s a) = i(beta x + lambda a) + s(alpha a). WitnessInvalidError
/// when the witness fails for the cocycle of e.
Matrix buildGamma(const ExtensionPresentation& e, const AutPair& pair, const Matrix& lambda);

/// lambda = i^-1 (gamma s - s alpha), alpha = p gamma s.
Matrix extractLambda(const ExtensionPresentation& e, const Matrix& gamma);

/// rho_a -> beta rho_{alpha^-1 a} beta^-1 (likewise psi, phi) and
/// sigma(a,b) -> beta sigma(alpha^-1 a, alpha^-1 b) (likewise omega).
NonAbelianCocycle transformCocycle(const NonAbelianCocycle& c, const AutPair& pair);

/// beta rho_a = rho_{alpha a} beta, likewise for psi and phi.
ViolationList checkCompatibility(const ActionData& rep, const AutPair& pair);

struct WellsResult {
  Vector classCoords;             ///< class of transformed - original in H^2
  std::optional<Matrix> lambda;   ///< present iff the class vanishes
  bool vanishes() const { return isZero(classCoords); }
};

/// Abelian Wells map. IncompatiblePairError for an incompatible pair,
/// NotACocycleError if coords is not a cocycle.
WellsResult wellsObstructionAbelian(const ActionData& rep, const Vector& coords, const AutPair& pair);
/// Same, with (sigma, omega) extracted from an abelian extension through its
/// stored section.
WellsResult wellsObstructionAbelian(const ExtensionPresentation& e, const AutPair& pair);

/// Exactness at Aut(H) x Aut(A): the pair induced by gamma satisfies (I)..(V)
/// with lambda = extractLambda(e, gamma).
bool wellsMapVanishesOnImage(const ExtensionPresentation& e, const Matrix& gamma);

}  // namespace postlie
