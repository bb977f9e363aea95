#pragma once

// Exact linear algebra over Q. Every routine is a pure function of its
// arguments; results are canonical so that identical inputs give identical
// bases, byte for byte.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "postlie/rational.hpp"

namespace postlie {

using Vector = std::vector<Rational>;

Vector zeroVector(std::size_t n);
Vector unitVector(std::size_t n, std::size_t i);
bool isZero(std::span<const Rational> v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);
Vector& operator-=(Vector& a, const Vector& b);
/// a += s * b
void axpy(Vector& a, const Rational& s, const Vector& b);

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix fromColumns(std::size_t rows, std::span<const Vector> columns);
  static Matrix fromRows(std::size_t cols, std::span<const Vector> rows);
  /// Block matrix [[a, b], [c, d]]; blocks must agree in shape.
  static Matrix block(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool isSquare() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Rational> entries() const { return data_; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void setColumn(std::size_t c, const Vector& v);
  Matrix transpose() const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix sub(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  bool isZero() const;

  Vector operator*(const Vector& v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  Matrix& operator+=(const Matrix& o);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Linearly independent vectors in Q^ambientDim. Independence is verified on
/// construction (InputShapeError otherwise).
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambientDim) : ambient_(ambientDim) {}
  SubspaceBasis(std::size_t ambientDim, std::vector<Vector> vectors);

  std::size_t ambientDim() const { return ambient_; }
  std::size_t dim() const { return vectors_.size(); }
  const std::vector<Vector>& vectors() const { return vectors_; }
  const Vector& operator[](std::size_t i) const { return vectors_[i]; }
  /// The basis vectors as the columns of an ambientDim x dim matrix.
  Matrix asColumns() const;

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  struct Trusted {};
  SubspaceBasis(Trusted, std::size_t ambientDim, std::vector<Vector> vectors)
      : ambient_(ambientDim), vectors_(std::move(vectors)) {}
  friend SubspaceBasis trustedBasis(std::size_t, std::vector<Vector>);

  std::size_t ambient_;
  std::vector<Vector> vectors_;
};

/// Reduced row echelon form: nonzero rows only, pivots normalized to 1.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Fraction-free (Bareiss) forward elimination on an integer-scaled copy,
/// followed by exact back-substitution.
Echelon rowReduce(const Matrix& a);

std::size_t rank(const Matrix& a);

struct LinearSolution {
  std::optional<Vector> particular;  ///< absent when A x = b is inconsistent
  SubspaceBasis kernel;
};

/// Particular solution with every free variable set to 0, plus the canonical
/// kernel basis of A.
LinearSolution solveLinear(const Matrix& a, const Vector& b);

/// Canonical basis of ker A: one vector per free column f, with a 1 at f and
/// zeros at every other free column.
SubspaceBasis kernelBasis(const Matrix& a);

/// Canonical basis of span(vectors): the nonzero rows of their RREF.
SubspaceBasis spanOf(std::size_t ambientDim, std::span<const Vector> vectors);

/// Coordinates of v in S when v lies in span(S).
std::optional<Vector> memberOf(const Vector& v, const SubspaceBasis& s);

/// dim(big) - dim(small); NotASubspaceError unless span(small) ⊆ span(big).
std::size_t quotientDimension(const SubspaceBasis& big, const SubspaceBasis& small);

std::optional<Matrix> inverse(const Matrix& a);

/// Normal form modulo a subspace: subtracts the unique combination of the
/// subspace's RREF rows that clears their pivot columns. The residual is zero
/// iff v lies in the subspace, and equal for vectors in the same coset.
class SubspaceReducer {
 public:
  explicit SubspaceReducer(const SubspaceBasis& s);
  Vector residual(const Vector& v) const;
  bool contains(const Vector& v) const { return isZero(residual(v)); }
  const SubspaceBasis& canonicalBasis() const { return rref_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  SubspaceBasis rref_;
  std::vector<std::size_t> pivots_;
};

}  // namespace postlie
