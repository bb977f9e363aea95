#pragma once

// Non-abelian extensions 0 -> H -> E -> A -> 0, the cocycle attached to a
// section, and the extension built from a cocycle.

#include "postlie/action.hpp"

namespace postlie {

/// (rho, psi, phi, sigma, omega). sigma and omega are A x A -> H, stored as
/// aDim x aDim x hDim tensors.
struct NonAbelianCocycle {
  Algebra acting;  ///< A
  Algebra space;   ///< H
  TripleMaps maps;
  Tensor3 sigma;
  Tensor3 omega;

  /// Zero sigma and omega over the given maps.
  static NonAbelianCocycle split(const ActionData& r);
  ActionData action() const { return ActionData{acting, space, maps}; }
  void validateShape() const;

  friend bool operator==(const NonAbelianCocycle& a, const NonAbelianCocycle& b) {
    return a.acting == b.acting && a.space == b.space && a.maps == b.maps && a.sigma == b.sigma &&
           a.omega == b.omega;
  }
};

struct ExtensionPresentation {
  Algebra acting;  ///< A
  Algebra space;   ///< H
  Algebra total;   ///< E
  Matrix inj;      ///< i : H -> E
  Matrix proj;     ///< p : E -> A
  Matrix section;  ///< s : A -> E, p s = id

  void validateShape() const;
};

/// p i = 0, p s = id, i injective, p surjective, im i = ker p, and i, p
/// morphisms. Total is required to be post-Lie.
ViolationList certifyExtension(const ExtensionPresentation& e);

/// rho_a x = [s a, x], psi_a x = x . s a, phi_a x = s a . x,
/// sigma(a,b) = [s a, s b] - s[a,b], omega(a,b) = s a . s b - s(a.b),
/// read back into H through i.
NonAbelianCocycle extractCocycle(const ExtensionPresentation& e);

/// The ten compatibility conditions (A1)..(A10) together with the Lie-side
/// conditions: sigma antisymmetric, rho by derivations, the twisted
/// representation law and the Jacobi law for sigma.
ViolationList certifyCocycle(const NonAbelianCocycle& c);

/// A (+) H with
///   (a,x).(b,y) = (a.b, x.y + phi_a y + psi_b x + omega(a,b))
///   [(a,x),(b,y)] = ([a,b], [x,y] + rho_a y - rho_b x + sigma(a,b))
/// and the block injection, projection and section.
ExtensionPresentation buildExtension(const NonAbelianCocycle& c);

/// The five equivalence laws, c - c' expressed through phi : A -> H
/// (hDim x aDim) and the maps of c'.
ViolationList checkEquivalenceWitness(const NonAbelianCocycle& c, const NonAbelianCocycle& cPrime, const Matrix& phi);

/// theta : E -> E' is a morphism with theta i = i' and p' theta = p.
ViolationList checkExtensionEquivalence(const ExtensionPresentation& e, const ExtensionPresentation& ePrime,
                                        const Matrix& theta);

/// (a, x) |-> s(a) + i(x), from buildExtension(extractCocycle(e)).total to
/// e.total.
Matrix classificationIso(const ExtensionPresentation& e);

namespace detail {

/// Residuals of the conditions linear in (sigma, omega) once H is abelian:
/// (A5), (A10) and the Jacobi law for sigma, concatenated in a fixed order.
Vector abelianResidual(const NonAbelianCocycle& c);

}  // namespace detail

}  // namespace postlie
