#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "postlie/automorphism.hpp"
#include "postlie/crossed.hpp"
#include "postlie/errors.hpp"
#include "postlie/io.hpp"

namespace fx {

using namespace postlie;

inline void bracketEntry(Algebra& a, std::size_t i, std::size_t j, std::size_t k, long v) {
  a.bracket(i, j, k) += Rational(v);
  a.bracket(j, i, k) -= Rational(v);
}

/// sl2 in the basis e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
/// negProduct sets a.b = -[a,b].
inline Algebra sl2(bool negProduct = false) {
  Algebra a = Algebra::null(3, "sl2");
  bracketEntry(a, 0, 1, 2, 1);
  bracketEntry(a, 2, 0, 0, 2);
  bracketEntry(a, 2, 1, 1, -2);
  if (negProduct)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) a.product(i, j, k) = -a.bracket(i, j, k);
  return a;
}

/// [e1,e2] = e2.
inline Algebra r2(bool negProduct = false) {
  Algebra a = Algebra::null(2, "r2");
  bracketEntry(a, 0, 1, 1, 1);
  if (negProduct) {
    a.product(0, 1, 1) = Rational(-1);
    a.product(1, 0, 1) = Rational(1);
  }
  return a;
}

/// [x,y] = z.
inline Algebra heisenberg() {
  Algebra a = Algebra::null(3, "heisenberg");
  bracketEntry(a, 0, 1, 2, 1);
  return a;
}

/// Q[t]/t^2 as a pre-Lie algebra with zero bracket.
inline Algebra dualNumbers() {
  Algebra a = Algebra::null(2, "dual numbers");
  a.product(0, 0, 0) = Rational(1);
  a.product(0, 1, 1) = Rational(1);
  a.product(1, 0, 1) = Rational(1);
  return a;
}

/// e <-> f, h -> -h; an automorphism of sl2 with either product above.
inline Matrix chevalley() { return Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}; }

inline Matrix scalar(long v) { return Matrix{{Rational(v)}}; }
inline Matrix scalar(const Rational& v) { return Matrix{{v}}; }

/// 1-dim null A, 1-dim V, omega(e,e) = 1, everything else zero.
inline NonAbelianCocycle omegaFixture() {
  ActionData r{Algebra::null(1, "a1"), Algebra::null(1, "V"), TripleMaps::zero(1, 1)};
  NonAbelianCocycle c = NonAbelianCocycle::split(r);
  c.omega(0, 0, 0) = Rational(1);
  return c;
}

inline ActionData trivialRep(const Algebra& acting, std::size_t dimV) {
  return ActionData{acting, Algebra::null(dimV, "V"), TripleMaps::zero(acting.dim, dimV)};
}

/// Every corpus algebra named by the acceptance list.
inline std::vector<Algebra> postLieAlgebras() {
  return {Algebra::null(1, "a1"), Algebra::null(2, "abelian2"), sl2(), sl2(true), r2(), r2(true),
          heisenberg(), dualNumbers()};
}

inline std::filesystem::path corpusDir() { return POSTLIE_CORPUS_DIR; }

inline io::Document corpus(const std::string& name) { return io::readDocument(corpusDir() / (name + ".json")); }

inline Rational smallRational(std::mt19937& rng, long lo = -2, long hi = 2) {
  std::uniform_int_distribution<long> d(lo, hi);
  return Rational(d(rng));
}

inline Matrix randomMatrix(std::mt19937& rng, std::size_t r, std::size_t c, long lo = -2, long hi = 2) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = smallRational(rng, lo, hi);
  return m;
}

/// E with the section moved by i . ell.
inline ExtensionPresentation shiftSection(const ExtensionPresentation& e, const Matrix& ell) {
  ExtensionPresentation out = e;
  out.section = e.section + e.inj * ell;
  return out;
}

}  // namespace fx
