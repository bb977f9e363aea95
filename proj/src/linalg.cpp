#include "postlie/linalg.hpp"

#include <cassert>
#include <string>
#include <utility>

#include "postlie/errors.hpp"

namespace postlie {

Vector zeroVector(std::size_t n) { return Vector(n); }

Vector unitVector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool isZero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (!x.isZero()) return false;
  return true;
}

static void requireSameLength(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw InputShapeError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
}

Vector& operator+=(Vector& a, const Vector& b) {
  requireSameLength(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vector& operator-=(Vector& a, const Vector& b) {
  requireSameLength(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  return r += b;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  return r -= b;
}

Vector operator-(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

void axpy(Vector& a, const Rational& s, const Vector& b) {
  requireSameLength(a, b);
  if (s.isZero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].isZero()) a[i] += s * b[i];
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw InputShapeError("matrix entry count " + std::to_string(data_.size()) + " != " +
                          std::to_string(rows_) + "x" + std::to_string(cols_));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputShapeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::fromColumns(std::size_t rows, std::span<const Vector> columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.setColumn(c, columns[c]);
  return m;
}

Matrix Matrix::fromRows(std::size_t cols, std::span<const Vector> rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputShapeError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::block(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
    throw InputShapeError("block matrix shapes disagree");
  Matrix m(a.rows() + c.rows(), a.cols() + b.cols());
  auto put = [&m](const Matrix& blk, std::size_t r0, std::size_t c0) {
    for (std::size_t r = 0; r < blk.rows(); ++r)
      for (std::size_t col = 0; col < blk.cols(); ++col) m(r0 + r, c0 + col) = blk(r, col);
  };
  put(a, 0, 0);
  put(b, 0, a.cols());
  put(c, a.rows(), 0);
  put(d, a.rows(), a.cols());
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::setColumn(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw InputShapeError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::sub(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InputShapeError("submatrix out of range");
  Matrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

bool Matrix::isZero() const { return postlie::isZero(data_); }

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_)
    throw InputShapeError("matrix-vector shape mismatch: " + std::to_string(cols_) + " vs " +
                          std::to_string(v.size()));
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].isZero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& x = (*this)(r, c);
      if (!x.isZero()) out[r] += x * v[c];
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw InputShapeError("matrix product shape mismatch: " + std::to_string(a.cols()) + " vs " +
                          std::to_string(b.rows()));
  Matrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (x.isZero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).isZero()) m(i, j) += x * b(k, j);
    }
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputShapeError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix m = a;
  return m += b;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  return a + Rational(-1) * b;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.data_) x *= s;
  return r;
}

// ---------------------------------------------------------------------------
// Elimination

Echelon rowReduce(const Matrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  // Clear denominators row by row; row scaling preserves the row space.
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).raw().get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = a(r, c).raw();
      m[r][c] = q.get_num() * (l / q.get_den());
    }
  }

  // Bareiss forward pass. Every entry stays an integer minor of the input, so
  // the division by the previous pivot is exact.
  std::vector<std::size_t> pivots;
  mpz_class previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        assert(mpz_divisible_p(t.get_mpz_t(), previous.get_mpz_t()));
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      m[i][c] = 0;
    }
    previous = m[r][c];
    pivots.push_back(c);
    ++r;
  }

  // Back-substitution to the reduced form over Q.
  const std::size_t rk = pivots.size();
  Matrix out(rk, cols);
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = Rational(mpq_class(m[i][j]));
  for (std::size_t ii = rk; ii-- > 0;) {
    const Rational pivot = out(ii, pivots[ii]);
    for (std::size_t j = pivots[ii]; j < cols; ++j) out(ii, j) /= pivot;
    for (std::size_t k = 0; k < ii; ++k) {
      const Rational f = out(k, pivots[ii]);
      if (f.isZero()) continue;
      for (std::size_t j = pivots[ii]; j < cols; ++j) out(k, j) -= f * out(ii, j);
    }
  }
  return Echelon{std::move(out), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rowReduce(a).rank(); }

SubspaceBasis trustedBasis(std::size_t ambientDim, std::vector<Vector> vectors) {
  return SubspaceBasis(SubspaceBasis::Trusted{}, ambientDim, std::move(vectors));
}

SubspaceBasis::SubspaceBasis(std::size_t ambientDim, std::vector<Vector> vectors)
    : ambient_(ambientDim), vectors_(std::move(vectors)) {
  for (const auto& v : vectors_)
    if (v.size() != ambient_) throw InputShapeError("basis vector has wrong length");
  if (rank(Matrix::fromRows(ambient_, vectors_)) != vectors_.size())
    throw InputShapeError("basis vectors are linearly dependent");
}

Matrix SubspaceBasis::asColumns() const { return Matrix::fromColumns(ambient_, vectors_); }

static SubspaceBasis kernelFromEchelon(const Echelon& e, std::size_t cols) {
  std::vector<bool> isPivot(cols, false);
  for (auto p : e.pivots) isPivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (isPivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return trustedBasis(cols, std::move(basis));
}

SubspaceBasis kernelBasis(const Matrix& a) {
  const Echelon e = rowReduce(a);
  return kernelFromEchelon(e, a.cols());
}

LinearSolution solveLinear(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows())
    throw InputShapeError("solveLinear: " + std::to_string(a.rows()) + " equations but right-hand side of length " +
                          std::to_string(b.size()));
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const Echelon e = rowReduce(aug);
  LinearSolution out{std::nullopt, kernelBasis(a)};
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return out;  // 0 = 1 row
  Vector x(a.cols());
  for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  out.particular = std::move(x);
  return out;
}

SubspaceBasis spanOf(std::size_t ambientDim, std::span<const Vector> vectors) {
  const Echelon e = rowReduce(Matrix::fromRows(ambientDim, vectors));
  std::vector<Vector> rows;
  rows.reserve(e.rank());
  for (std::size_t i = 0; i < e.rank(); ++i) rows.push_back(e.reduced.row(i));
  return trustedBasis(ambientDim, std::move(rows));
}

std::optional<Vector> memberOf(const Vector& v, const SubspaceBasis& s) {
  if (v.size() != s.ambientDim())
    throw InputShapeError("memberOf: vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                          std::to_string(s.ambientDim()));
  auto sol = solveLinear(s.asColumns(), v);
  return std::move(sol.particular);
}

std::size_t quotientDimension(const SubspaceBasis& big, const SubspaceBasis& small) {
  if (big.ambientDim() != small.ambientDim()) throw InputShapeError("quotientDimension: ambient dimensions differ");
  for (std::size_t i = 0; i < small.dim(); ++i)
    if (!memberOf(small[i], big))
      throw NotASubspaceError("vector " + std::to_string(i) + " of the smaller basis is outside the larger span");
  return big.dim() - small.dim();
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.isSquare()) return std::nullopt;
  const std::size_t n = a.rows();
  const Echelon e = rowReduce(Matrix::block(a, Matrix::identity(n), Matrix(0, n), Matrix(0, n)));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.sub(0, n, n, n);
}

SubspaceReducer::SubspaceReducer(const SubspaceBasis& s) : rref_(s.ambientDim()) {
  const Echelon e = rowReduce(Matrix::fromRows(s.ambientDim(), s.vectors()));
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < e.rank(); ++i) rows.push_back(e.reduced.row(i));
  rref_ = trustedBasis(s.ambientDim(), std::move(rows));
  pivots_ = e.pivots;
}

Vector SubspaceReducer::residual(const Vector& v) const {
  if (v.size() != rref_.ambientDim()) throw InputShapeError("residual: vector has wrong length");
  Vector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational c = r[pivots_[i]];
    if (!c.isZero()) axpy(r, -c, rref_[i]);
  }
  return r;
}

}  // namespace postlie
