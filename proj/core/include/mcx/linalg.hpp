#pragma once

// Square matrices over M_n, computed slice by slice.
//
// A = Σ_p ε_p A_p with complex slices A_p. Products, determinants and inverses
// act on each slice independently, which sidesteps zero-divisor pivots
// entirely: elimination only ever runs on the complex slices.

#include <cstddef>
#include <vector>

#include "mcx/idempotent.hpp"

namespace mcx {

/// Dense row-major complex matrix; the projection A_p of a multicomplex
/// matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  static ComplexMatrix identity(std::size_t m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> data() const noexcept { return data_; }

  double frobenius_norm() const noexcept;
  /// Largest entry modulus.
  double max_abs() const noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Complex> operator*(const ComplexMatrix& a, std::span<const Complex> v);
ComplexMatrix conjugate_transpose(const ComplexMatrix& a);
/// Largest entrywise |a - b|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// LU factorization with partial pivoting (largest modulus in the column).
struct ComplexLU {
  ComplexMatrix lu;              // unit-lower L below the diagonal, U on and above
  std::vector<std::size_t> perm; // row i of LU is row perm[i] of the input
  int parity = 1;                // sign of the permutation
  bool singular = false;         // an exactly zero pivot column was met
};

ComplexLU lu_decompose(const ComplexMatrix& a);
Complex determinant(const ComplexMatrix& a);
/// Inverse from the LU factors; throws SingularMatrixError on a zero pivot.
ComplexMatrix inverse(const ComplexMatrix& a);

/// m×m matrix over M_n with entries in the idempotent representation.
class McMatrix {
 public:
  /// Zero matrix.
  McMatrix(int level, std::size_t m);
  /// Row-major entries.
  McMatrix(int level, std::size_t m, std::vector<IdempotentRep> entries);

  static McMatrix identity(int level, std::size_t m);
  static McMatrix diagonal(const std::vector<IdempotentRep>& diag);
  /// Reassembles Σ_p ε_p slices[p]; one m×m slice per component.
  static McMatrix from_slices(int level, const std::vector<ComplexMatrix>& slices);

  int level() const noexcept { return level_; }
  std::size_t dim() const noexcept { return m_; }
  const IdempotentRep& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * m_ + j); }
  std::span<const IdempotentRep> entries() const noexcept { return entries_; }

  friend bool operator==(const McMatrix&, const McMatrix&) = default;

 private:
  int level_;
  std::size_t m_;
  std::vector<IdempotentRep> entries_;
};

/// A_p: entrywise projection onto component p.
ComplexMatrix project_matrix(const McMatrix& a, std::size_t p);
std::vector<ComplexMatrix> slices(const McMatrix& a);

/// det A = Σ_p ε_p det A_p.
IdempotentRep det(const McMatrix& a);

/// Indices p whose slice determinant is <= tol (1 + ‖A_p‖_F)^m in modulus.
std::vector<std::size_t> singular_components(const McMatrix& a, double tol = 1e-10);
bool is_singular(const McMatrix& a, double tol = 1e-10);

/// A^{-1} = Σ_p ε_p A_p^{-1}. Throws SingularMatrixError naming the null-cone
/// components of det A.
McMatrix invert_matrix(const McMatrix& a, double tol = 1e-10);

McMatrix matmul(const McMatrix& a, const McMatrix& b);
McMatrix matadd(const McMatrix& a, const McMatrix& b);
/// Slicewise conjugate transpose A* = Σ_p ε_p A_p^H.
McMatrix adjoint_matrix(const McMatrix& a);

/// Entrywise max |a - b| over all components.
double max_abs_diff(const McMatrix& a, const McMatrix& b);

}  // namespace mcx
