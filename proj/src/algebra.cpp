#include "postlie/algebra.hpp"

#include <array>
#include <string>

#include "postlie/errors.hpp"

namespace postlie {

Vector Tensor3::at(std::size_t i, std::size_t j) const {
  const auto base = static_cast<std::ptrdiff_t>((i * n1_ + j) * n2_);
  return Vector(data_.begin() + base, data_.begin() + base + static_cast<std::ptrdiff_t>(n2_));
}

void Tensor3::set(std::size_t i, std::size_t j, const Vector& v) {
  if (v.size() != n2_) throw InputShapeError("tensor slice length mismatch");
  for (std::size_t k = 0; k < n2_; ++k) (*this)(i, j, k) = v[k];
}

Vector Tensor3::apply(const Vector& u, const Vector& v) const {
  if (u.size() != n0_ || v.size() != n1_) throw InputShapeError("bilinear map argument length mismatch");
  Vector out(n2_);
  for (std::size_t i = 0; i < n0_; ++i) {
    if (u[i].isZero()) continue;
    for (std::size_t j = 0; j < n1_; ++j) {
      if (v[j].isZero()) continue;
      const Rational c = u[i] * v[j];
      for (std::size_t k = 0; k < n2_; ++k) {
        const Rational& t = (*this)(i, j, k);
        if (!t.isZero()) out[k] += c * t;
      }
    }
  }
  return out;
}

Algebra Algebra::null(std::size_t dim, std::string label) {
  return Algebra{dim, Tensor3(dim, dim, dim), Tensor3(dim, dim, dim), std::move(label)};
}

void Algebra::validateShape() const {
  for (const Tensor3* t : {&bracket, &product})
    if (t->extent(0) != dim || t->extent(1) != dim || t->extent(2) != dim)
      throw InputShapeError("structure tensor of \"" + label + "\" is not " + std::to_string(dim) + "^3");
}

std::string_view axiomName(Axiom a) {
  switch (a) {
    case Axiom::Antisymmetry: return "Antisymmetry";
    case Axiom::Jacobi: return "Jacobi";
    case Axiom::PL3: return "PL3";
    case Axiom::PL4: return "PL4";
    case Axiom::MorphismBracket: return "MorphismBracket";
    case Axiom::MorphismProduct: return "MorphismProduct";
    case Axiom::RepLie: return "RepLie";
    case Axiom::Rep1: return "Rep1";
    case Axiom::Rep2: return "Rep2";
    case Axiom::Rep3: return "Rep3";
    case Axiom::Rep4: return "Rep4";
    case Axiom::Act1: return "Act1";
    case Axiom::Act2: return "Act2";
    case Axiom::Act3: return "Act3";
    case Axiom::Act4: return "Act4";
    case Axiom::Act5: return "Act5";
    case Axiom::EquivarianceBracket: return "EquivarianceBracket";
    case Axiom::EquivarianceRight: return "EquivarianceRight";
    case Axiom::EquivarianceLeft: return "EquivarianceLeft";
    case Axiom::PeifferBracket: return "PeifferBracket";
    case Axiom::PeifferRight: return "PeifferRight";
    case Axiom::PeifferLeft: return "PeifferLeft";
    case Axiom::SubalgebraClosure: return "SubalgebraClosure";
    case Axiom::StructuralSigma: return "StructuralSigma";
    case Axiom::StructuralTau: return "StructuralTau";
    case Axiom::ImageSigma: return "ImageSigma";
    case Axiom::ImageTau: return "ImageTau";
    case Axiom::IdentitySigma: return "IdentitySigma";
    case Axiom::IdentityTau: return "IdentityTau";
    case Axiom::KernelBracketST: return "KernelBracketST";
    case Axiom::KernelBracketTS: return "KernelBracketTS";
    case Axiom::KernelProductST: return "KernelProductST";
    case Axiom::KernelProductTS: return "KernelProductTS";
    case Axiom::CrossedBoundary: return "CrossedBoundary";
    case Axiom::CrossedRho: return "CrossedRho";
    case Axiom::CrossedPsi: return "CrossedPsi";
    case Axiom::CrossedPhi: return "CrossedPhi";
    case Axiom::Cat1Sub: return "Cat1Sub";
    case Axiom::Cat1Sigma: return "Cat1Sigma";
    case Axiom::Cat1Tau: return "Cat1Tau";
    case Axiom::Bijective: return "Bijective";
    case Axiom::A1: return "A1";
    case Axiom::A2: return "A2";
    case Axiom::A3: return "A3";
    case Axiom::A4: return "A4";
    case Axiom::A5: return "A5";
    case Axiom::A6: return "A6";
    case Axiom::A7: return "A7";
    case Axiom::A8: return "A8";
    case Axiom::A9: return "A9";
    case Axiom::A10: return "A10";
    case Axiom::SigmaAntisymmetry: return "SigmaAntisymmetry";
    case Axiom::RhoDerivation: return "RhoDerivation";
    case Axiom::RhoTwistedRep: return "RhoTwistedRep";
    case Axiom::SigmaJacobi: return "SigmaJacobi";
    case Axiom::EquivRho: return "EquivRho";
    case Axiom::EquivPsi: return "EquivPsi";
    case Axiom::EquivPhi: return "EquivPhi";
    case Axiom::EquivSigma: return "EquivSigma";
    case Axiom::EquivOmega: return "EquivOmega";
    case Axiom::ExtProjInj: return "ExtProjInj";
    case Axiom::ExtProjSection: return "ExtProjSection";
    case Axiom::ExtInjective: return "ExtInjective";
    case Axiom::ExtSurjective: return "ExtSurjective";
    case Axiom::ExtExactness: return "ExtExactness";
    case Axiom::ExtInjMorphism: return "ExtInjMorphism";
    case Axiom::ExtProjMorphism: return "ExtProjMorphism";
    case Axiom::DiagramInj: return "DiagramInj";
    case Axiom::DiagramProj: return "DiagramProj";
    case Axiom::InducibleI: return "InducibleI";
    case Axiom::InducibleII: return "InducibleII";
    case Axiom::InducibleIII: return "InducibleIII";
    case Axiom::InducibleIV: return "InducibleIV";
    case Axiom::InducibleV: return "InducibleV";
    case Axiom::AutBeta: return "AutBeta";
    case Axiom::AutAlpha: return "AutAlpha";
    case Axiom::CompatRho: return "CompatRho";
    case Axiom::CompatPsi: return "CompatPsi";
    case Axiom::CompatPhi: return "CompatPhi";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------

void ViolationList::add(Violation v) {
  ++total_;
  if (items_.size() < kLimit) items_.push_back(std::move(v));
}

void ViolationList::append(const ViolationList& other) {
  for (const auto& v : other.items_) add(v);
  total_ += other.truncated();
}

void ViolationList::expectEqual(Axiom axiom, std::vector<std::size_t> basis, const Vector& lhs, const Vector& rhs) {
  expectZero(axiom, std::move(basis), lhs - rhs);
}

void ViolationList::expectZero(Axiom axiom, std::vector<std::size_t> basis, const Vector& value) {
  if (!isZero(value)) add(Violation{axiom, std::move(basis), value});
}

void ViolationList::expectEqual(Axiom axiom, std::vector<std::size_t> basis, const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) throw InputShapeError("matrix identity shape mismatch");
  const Matrix d = lhs - rhs;
  if (!d.isZero()) add(Violation{axiom, std::move(basis), Vector(d.entries().begin(), d.entries().end())});
}

// ---------------------------------------------------------------------------

namespace {

void checkLieLaws(const Algebra& p, ViolationList& out) {
  const std::size_t n = p.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector s = p.bracket.at(i, j) + p.bracket.at(j, i);
      out.expectZero(Axiom::Antisymmetry, {i, j}, s);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = p.unit(i), ej = p.unit(j), ek = p.unit(k);
        Vector cyc = p.br(ei, p.bracket.at(j, k));
        cyc += p.br(ej, p.bracket.at(k, i));
        cyc += p.br(ek, p.bracket.at(i, j));
        out.expectZero(Axiom::Jacobi, {i, j, k}, cyc);
      }
}

}  // namespace

ViolationList certifyLie(const Algebra& p) {
  p.validateShape();
  ViolationList out;
  checkLieLaws(p, out);
  return out;
}

ViolationList certifyPostLie(const Algebra& p) {
  p.validateShape();
  ViolationList out;
  checkLieLaws(p, out);
  const std::size_t n = p.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector a = p.unit(i), b = p.unit(j), c = p.unit(k);
        // [a,b].c = a.(b.c) - (a.b).c - b.(a.c) + (b.a).c
        Vector lhs = p.mul(p.bracket.at(i, j), c);
        Vector rhs = p.mul(a, p.product.at(j, k));
        rhs -= p.mul(p.product.at(i, j), c);
        rhs -= p.mul(b, p.product.at(i, k));
        rhs += p.mul(p.product.at(j, i), c);
        out.expectEqual(Axiom::PL3, {i, j, k}, lhs, rhs);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector b = p.unit(j), c = p.unit(k);
        // a.[b,c] = [a.b, c] + [b, a.c]
        Vector lhs = p.mul(p.unit(i), p.bracket.at(j, k));
        Vector rhs = p.br(p.product.at(i, j), c) + p.br(b, p.product.at(i, k));
        out.expectEqual(Axiom::PL4, {i, j, k}, lhs, rhs);
      }
  return out;
}

bool isPostLie(const Algebra& p) { return certifyPostLie(p).empty(); }

void requirePostLie(const Algebra& p, std::string_view what) {
  const auto report = certifyPostLie(p);
  if (!report.empty()) {
    const auto& v = report.items().front();
    std::string where;
    for (auto b : v.basis) where += (where.empty() ? "" : ",") + std::to_string(b);
    throw UncertifiedInputError(std::string(what) + " is not a post-Lie algebra (" + std::string(axiomName(v.axiom)) +
                                " fails at (" + where + "), " + std::to_string(report.total()) + " violation(s))");
  }
}

Algebra associatedLie(const Algebra& p) {
  requirePostLie(p, "associatedLie input");
  Algebra out = Algebra::null(p.dim, p.label.empty() ? std::string{} : p.label + " (associated Lie)");
  for (std::size_t i = 0; i < p.dim; ++i)
    for (std::size_t j = 0; j < p.dim; ++j)
      out.bracket.set(i, j, p.bracket.at(i, j) + p.product.at(i, j) - p.product.at(j, i));
  return out;
}

bool certifyLeftModule(const Algebra& p) {
  const Algebra lie = associatedLie(p);
  for (std::size_t i = 0; i < p.dim; ++i)
    for (std::size_t j = 0; j < p.dim; ++j)
      for (std::size_t k = 0; k < p.dim; ++k) {
        Vector lhs = p.mul(lie.bracket.at(i, j), p.unit(k));
        Vector rhs = p.mul(p.unit(i), p.product.at(j, k)) - p.mul(p.unit(j), p.product.at(i, k));
        if (lhs != rhs) return false;
      }
  return true;
}

ViolationList certifyMorphism(const Algebra& source, const Algebra& target, const Matrix& f) {
  source.validateShape();
  target.validateShape();
  if (f.rows() != target.dim || f.cols() != source.dim)
    throw InputShapeError("morphism matrix is " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                          ", expected " + std::to_string(target.dim) + "x" + std::to_string(source.dim));
  ViolationList out;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < source.dim; ++i) images.push_back(f.column(i));
  for (std::size_t i = 0; i < source.dim; ++i)
    for (std::size_t j = 0; j < source.dim; ++j)
      out.expectEqual(Axiom::MorphismBracket, {i, j}, f * source.bracket.at(i, j), target.br(images[i], images[j]));
  for (std::size_t i = 0; i < source.dim; ++i)
    for (std::size_t j = 0; j < source.dim; ++j)
      out.expectEqual(Axiom::MorphismProduct, {i, j}, f * source.product.at(i, j), target.mul(images[i], images[j]));
  return out;
}

ViolationList certifyMorphism(const AlgebraMorphism& m) { return certifyMorphism(m.source, m.target, m.matrix); }

Algebra inducedSubalgebra(const Algebra& ambient, const SubspaceBasis& basis, std::string label) {
  if (basis.ambientDim() != ambient.dim) throw InputShapeError("subspace lives in the wrong ambient dimension");
  const std::size_t d = basis.dim();
  Algebra out = Algebra::null(d, std::move(label));
  auto coords = [&](const Vector& v, const char* op, std::size_t i, std::size_t j) {
    auto c = memberOf(v, basis);
    if (!c)
      throw NotClosedError(std::string("subspace is not closed under the ") + op + " (basis pair " +
                           std::to_string(i) + "," + std::to_string(j) + ")");
    return *c;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      out.bracket.set(i, j, coords(ambient.br(basis[i], basis[j]), "bracket", i, j));
      out.product.set(i, j, coords(ambient.mul(basis[i], basis[j]), "product", i, j));
    }
  return out;
}

}  // namespace postlie
