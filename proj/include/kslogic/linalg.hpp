#pragma once

// Dense exact linear algebra over Q(i).
//
// Elimination always takes the first nonzero entry of a column as pivot;
// arithmetic is exact, so no magnitude pivoting is needed and results are
// identical on every platform.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "kslogic/scalar.hpp"

namespace kslogic {

class ExactVector {
 public:
  ExactVector() = default;
  explicit ExactVector(std::size_t dim);
  explicit ExactVector(std::vector<GaussianRational> entries);
  ExactVector(std::initializer_list<GaussianRational> entries);

  std::size_t dim() const noexcept { return entries_.size(); }
  const GaussianRational& operator[](std::size_t i) const { return entries_[i]; }
  GaussianRational& operator[](std::size_t i) { return entries_[i]; }
  std::span<const GaussianRational> entries() const noexcept { return entries_; }

  bool is_zero() const noexcept;

  ExactVector& operator+=(const ExactVector& rhs);
  ExactVector& operator-=(const ExactVector& rhs);
  ExactVector& operator*=(const GaussianRational& s);

  friend ExactVector operator+(ExactVector a, const ExactVector& b) { return a += b; }
  friend ExactVector operator-(ExactVector a, const ExactVector& b) { return a -= b; }
  friend ExactVector operator*(const GaussianRational& s, ExactVector v) { return v *= s; }
  friend bool operator==(const ExactVector&, const ExactVector&) = default;

 private:
  std::vector<GaussianRational> entries_;
};

/// <x|y> = sum conj(x_k) y_k.
GaussianRational inner(const ExactVector& x, const ExactVector& y);
/// <x|x>; always a nonnegative rational.
Rational norm_sq(const ExactVector& x);
/// Kronecker product of two vectors.
ExactVector tensor(const ExactVector& a, const ExactVector& b);

class ExactMatrix {
 public:
  /// rows x cols zero matrix. Both dimensions must be positive.
  ExactMatrix(std::size_t rows, std::size_t cols);
  /// Row-major entries; entries.size() must equal rows * cols.
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);
  ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix zero(std::size_t n) { return ExactMatrix(n, n); }
  /// Matrix whose columns are the given vectors (all of equal dimension).
  static ExactMatrix from_columns(std::span<const ExactVector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::span<const GaussianRational> entries() const noexcept { return entries_; }

  ExactVector row(std::size_t r) const;
  ExactVector column(std::size_t c) const;
  bool is_zero() const noexcept;

  ExactMatrix& operator+=(const ExactMatrix& rhs);
  ExactMatrix& operator-=(const ExactMatrix& rhs);
  ExactMatrix& operator*=(const GaussianRational& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix m) { return m *= s; }
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GaussianRational> entries_;
};

/// Exact product; throws DimensionMismatch when a.cols() != b.rows().
ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactVector apply(const ExactMatrix& m, const ExactVector& x);
ExactMatrix adjoint(const ExactMatrix& m);
/// Kronecker product: (A (x) B)[i*B.rows + k, j*B.cols + l] = A[i,j] * B[k,l].
ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b);
/// x y^dagger.
ExactMatrix outer(const ExactVector& x, const ExactVector& y);
ExactMatrix sum(std::span<const ExactMatrix> terms);

std::size_t rank(const ExactMatrix& m);
/// Throws InvalidOperand for singular or non-square input.
ExactMatrix inverse(const ExactMatrix& m);
/// A*A == A and A^dagger == A, decided exactly. False for non-square input.
bool is_projector(const ExactMatrix& m);
bool commute(const ExactMatrix& a, const ExactMatrix& b);

/// A subspace of C^n given by a canonical basis: the nonzero rows of the
/// reduced row-echelon form of any spanning set. Equal subspaces therefore
/// have identical bases, and operator== is subspace equality.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient_dim);
  /// Canonical basis of span(vectors); dependent or zero vectors are fine.
  static SubspaceBasis span(std::size_t ambient_dim, std::span<const ExactVector> vectors);
  static SubspaceBasis whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dimension() const noexcept { return vectors_.size(); }
  bool empty() const noexcept { return vectors_.empty(); }
  std::span<const ExactVector> vectors() const noexcept { return vectors_; }

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<ExactVector> vectors_;
  std::vector<std::size_t> pivots_;

  friend bool member(const ExactVector& x, const SubspaceBasis& s);
};

/// Basis of {x : Ax = 0}; dimension is cols - rank.
SubspaceBasis kernel_basis(const ExactMatrix& a);
/// Basis of the column space of A.
SubspaceBasis range_basis(const ExactMatrix& a);
/// True iff x lies in span(s). Throws DimensionMismatch on ambient mismatch.
bool member(const ExactVector& x, const SubspaceBasis& s);
bool is_subspace(const SubspaceBasis& inner, const SubspaceBasis& outer);
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);
/// span(a u b).
SubspaceBasis join(const SubspaceBasis& a, const SubspaceBasis& b);

/// Orthogonal projector onto the ray of a nonzero vector: v v^dagger / (v^dagger v).
ExactMatrix ray_projector(const ExactVector& v);
/// Orthogonal projector onto span(s), B (B^dagger B)^-1 B^dagger with the
/// basis vectors as the columns of B.
ExactMatrix subspace_projector(const SubspaceBasis& s);

}  // namespace kslogic
