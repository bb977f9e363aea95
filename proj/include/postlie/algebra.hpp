#pragma once

// Post-Lie algebras presented by structure constants over Q.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "postlie/linalg.hpp"

namespace postlie {

/// Rank-3 tensor T[i][j][k]; read as a bilinear map (e_i, e_j) -> sum_k T[i][j][k] f_k.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t n0, std::size_t n1, std::size_t n2) : n0_(n0), n1_(n1), n2_(n2), data_(n0 * n1 * n2) {}

  std::size_t extent(int axis) const { return axis == 0 ? n0_ : (axis == 1 ? n1_ : n2_); }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n1_ + j) * n2_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n1_ + j) * n2_ + k];
  }
  std::span<const Rational> entries() const { return data_; }

  /// T(e_i, e_j) as a vector of length extent(2).
  Vector at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Vector& v);
  /// T(u, v) for arbitrary coordinate vectors.
  Vector apply(const Vector& u, const Vector& v) const;
  bool isZero() const { return postlie::isZero(data_); }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t n0_ = 0, n1_ = 0, n2_ = 0;
  std::vector<Rational> data_;
};

/// A finite-dimensional algebra with a bracket [e_i,e_j] = sum_k C[i][j][k] e_k
/// and a product e_i . e_j = sum_k D[i][j][k] e_k.
struct Algebra {
  std::size_t dim = 0;
  Tensor3 bracket;
  Tensor3 product;
  std::string label;

  /// The dim-dimensional algebra with both operations zero.
  static Algebra null(std::size_t dim, std::string label = {});

  Vector br(const Vector& a, const Vector& b) const { return bracket.apply(a, b); }
  Vector mul(const Vector& a, const Vector& b) const { return product.apply(a, b); }
  Vector unit(std::size_t i) const { return unitVector(dim, i); }
  bool isAbelian() const { return bracket.isZero() && product.isZero(); }
  /// InputShapeError unless both tensors are dim x dim x dim.
  void validateShape() const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim == b.dim && a.bracket == b.bracket && a.product == b.product;
  }
};

enum class Axiom {
  Antisymmetry,
  Jacobi,
  PL3,
  PL4,
  MorphismBracket,
  MorphismProduct,
  RepLie,
  Rep1,
  Rep2,
  Rep3,
  Rep4,
  Act1,
  Act2,
  Act3,
  Act4,
  Act5,
  EquivarianceBracket,
  EquivarianceRight,
  EquivarianceLeft,
  PeifferBracket,
  PeifferRight,
  PeifferLeft,
  SubalgebraClosure,
  StructuralSigma,
  StructuralTau,
  ImageSigma,
  ImageTau,
  IdentitySigma,
  IdentityTau,
  KernelBracketST,
  KernelBracketTS,
  KernelProductST,
  KernelProductTS,
  CrossedBoundary,
  CrossedRho,
  CrossedPsi,
  CrossedPhi,
  Cat1Sub,
  Cat1Sigma,
  Cat1Tau,
  Bijective,
  A1,
  A2,
  A3,
  A4,
  A5,
  A6,
  A7,
  A8,
  A9,
  A10,
  SigmaAntisymmetry,
  RhoDerivation,
  RhoTwistedRep,
  SigmaJacobi,
  EquivRho,
  EquivPsi,
  EquivPhi,
  EquivSigma,
  EquivOmega,
  ExtProjInj,
  ExtProjSection,
  ExtInjective,
  ExtSurjective,
  ExtExactness,
  ExtInjMorphism,
  ExtProjMorphism,
  DiagramInj,
  DiagramProj,
  InducibleI,
  InducibleII,
  InducibleIII,
  InducibleIV,
  InducibleV,
  AutBeta,
  AutAlpha,
  CompatRho,
  CompatPsi,
  CompatPhi,
};

std::string_view axiomName(Axiom a);

/// One failed identity: LHS - RHS evaluated on basis elements.
struct Violation {
  Axiom axiom;
  std::vector<std::size_t> basis;
  Vector discrepancy;
};

/// Ordered list of violations. Keeps the first kLimit, counts the rest.
class ViolationList {
 public:
  static constexpr std::size_t kLimit = 100;

  bool empty() const { return total_ == 0; }
  std::size_t total() const { return total_; }
  std::size_t truncated() const { return total_ - items_.size(); }
  const std::vector<Violation>& items() const { return items_; }

  void add(Violation v);
  void append(const ViolationList& other);
  /// Records a violation when lhs != rhs.
  void expectEqual(Axiom axiom, std::vector<std::size_t> basis, const Vector& lhs, const Vector& rhs);
  void expectZero(Axiom axiom, std::vector<std::size_t> basis, const Vector& value);
  void expectEqual(Axiom axiom, std::vector<std::size_t> basis, const Matrix& lhs, const Matrix& rhs);

 private:
  std::vector<Violation> items_;
  std::size_t total_ = 0;
};

/// Antisymmetry, Jacobi and both post-Lie compatibilities on every basis triple.
ViolationList certifyPostLie(const Algebra& p);
/// Antisymmetry and Jacobi only.
ViolationList certifyLie(const Algebra& p);
bool isPostLie(const Algebra& p);

/// Bracket {a,b} = [a,b] + a.b - b.a, zero product. UncertifiedInputError
/// unless p is post-Lie.
Algebra associatedLie(const Algebra& p);

/// {a,b}.c == a.(b.c) - b.(a.c) on all basis triples. UncertifiedInputError
/// unless p is post-Lie.
bool certifyLeftModule(const Algebra& p);

/// Linear map between presentations, matrix of shape target.dim x source.dim.
struct AlgebraMorphism {
  Algebra source;
  Algebra target;
  Matrix matrix;
};

ViolationList certifyMorphism(const Algebra& source, const Algebra& target, const Matrix& f);
ViolationList certifyMorphism(const AlgebraMorphism& m);

/// Structure constants of span(basis) inside `ambient`, computed by coordinate
/// projection. NotClosedError if the span is not closed under both operations.
Algebra inducedSubalgebra(const Algebra& ambient, const SubspaceBasis& basis, std::string label = {});

/// Throws UncertifiedInputError naming `what` unless p is post-Lie.
void requirePostLie(const Algebra& p, std::string_view what);

}  // namespace postlie
