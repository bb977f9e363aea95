#pragma once

// Crossed modules of post-Lie algebras, cat1-post-Lie algebras, and the two
// constructions relating them.

#include "postlie/action.hpp"

namespace postlie {

/// boundary : H -> A together with an action of A on H.
struct CrossedModule {
  ActionData action;
  Matrix boundary;  ///< base.dim x top.dim

  const Algebra& base() const { return action.acting; }
  const Algebra& top() const { return action.space; }
};

/// A post-Lie algebra with a subalgebra (given by a basis) and two
/// endomorphisms sigma, tau of the total algebra with image in the subalgebra.
struct Cat1Algebra {
  Algebra total;
  SubspaceBasis sub{0};
  Matrix sigma;
  Matrix tau;
};

/// boundary is a morphism; equivariance and Peiffer identities on basis
/// elements. UncertifiedInputError unless base, top and the action certify.
ViolationList certifyCrossedModule(const CrossedModule& x);

/// The same property via the two semidirect-product morphisms
/// (boundary, id) : H x| H -> A x| H and (id, boundary) : A x| H -> A x| A.
ViolationList certifyCrossedModuleViaSemidirect(const CrossedModule& x);

/// (A x| H, A, sigma(a,x) = a, tau(a,x) = a + boundary(x)).
Cat1Algebra crossedToCat1(const CrossedModule& x);

ViolationList certifyCat1(const Cat1Algebra& c);

/// (sub, ker sigma, tau restricted to ker sigma), with the action induced by
/// the operations of the total algebra.
CrossedModule cat1ToCrossed(const Cat1Algebra& c);

/// Morphism of crossed modules: onBase : A -> A', onTop : H -> H'.
ViolationList certifyCrossedMorphism(const CrossedModule& from, const CrossedModule& to, const Matrix& onBase,
                                     const Matrix& onTop);

/// Morphism of cat1 algebras: h maps sub into sub' and commutes with sigma, tau.
ViolationList certifyCat1Morphism(const Cat1Algebra& from, const Cat1Algebra& to, const Matrix& h);

struct RoundTrip {
  CrossedModule recovered;  ///< cat1ToCrossed(crossedToCat1(x))
  AlgebraMorphism onBase;
  AlgebraMorphism onTop;
  ViolationList laws;       ///< morphism laws plus bijectivity of both maps
};

RoundTrip roundTripIso(const CrossedModule& x);

/// (a, k) |-> a + k from sub x| ker sigma to the total algebra, as a morphism
/// of cat1 algebras crossedToCat1(cat1ToCrossed(c)) -> c.
struct Cat1Splitting {
  Cat1Algebra split;
  Matrix iso;
  ViolationList laws;
};

Cat1Splitting cat1SplittingIso(const Cat1Algebra& c);

}  // namespace postlie
