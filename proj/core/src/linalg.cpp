#include "mcx/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mcx {

namespace {

void require_square_match(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw MismatchError(std::string(op) + ": shape mismatch");
  }
}

void require_same_shape(const McMatrix& a, const McMatrix& b, const char* op) {
  detail::require_same_level(a.level(), b.level(), op);
  if (a.dim() != b.dim()) throw MismatchError(std::string(op) + ": dimension mismatch");
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw MismatchError("matrix data does not match its shape");
}

ComplexMatrix ComplexMatrix::identity(std::size_t m) {
  ComplexMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i) out(i, i) = 1.0;
  return out;
}

double ComplexMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw MismatchError("matrix product: inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square_match(a, b, "matrix sum");
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square_match(a, b, "matrix difference");
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

std::vector<Complex> operator*(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) throw MismatchError("matrix-vector product: dimension mismatch");
  std::vector<Complex> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

ComplexMatrix conjugate_transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square_match(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

ComplexLU lu_decompose(const ComplexMatrix& a) {
  if (!a.is_square()) throw MismatchError("LU needs a square matrix");
  const std::size_t m = a.rows();
  ComplexLU f{a, std::vector<std::size_t>(m), 1, false};
  for (std::size_t i = 0; i < m; ++i) f.perm[i] = i;
  ComplexMatrix& lu = f.lu;

  for (std::size_t k = 0; k < m; ++k) {
    std::size_t pivot = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < m; ++i) {
      if (std::abs(lu(i, k)) > best) {
        best = std::abs(lu(i, k));
        pivot = i;
      }
    }
    if (best == 0.0) {
      f.singular = true;
      continue;
    }
    if (pivot != k) {
      for (std::size_t j = 0; j < m; ++j) std::swap(lu(k, j), lu(pivot, j));
      std::swap(f.perm[k], f.perm[pivot]);
      f.parity = -f.parity;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      const Complex factor = lu(i, k) / lu(k, k);
      lu(i, k) = factor;
      for (std::size_t j = k + 1; j < m; ++j) lu(i, j) -= factor * lu(k, j);
    }
  }
  return f;
}

Complex determinant(const ComplexMatrix& a) {
  const ComplexLU f = lu_decompose(a);
  if (f.singular) return {};
  Complex d = static_cast<double>(f.parity);
  for (std::size_t i = 0; i < a.rows(); ++i) d *= f.lu(i, i);
  return d;
}

ComplexMatrix inverse(const ComplexMatrix& a) {
  const ComplexLU f = lu_decompose(a);
  if (f.singular) throw SingularMatrixError("complex matrix is singular", {});
  const std::size_t m = a.rows();
  ComplexMatrix out(m, m);
  std::vector<Complex> col(m);
  for (std::size_t c = 0; c < m; ++c) {
    // Solve L y = P e_c, then U x = y.
    for (std::size_t i = 0; i < m; ++i) col[i] = f.perm[i] == c ? 1.0 : 0.0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < i; ++j) col[i] -= f.lu(i, j) * col[j];
    for (std::size_t i = m; i-- > 0;) {
      for (std::size_t j = i + 1; j < m; ++j) col[i] -= f.lu(i, j) * col[j];
      col[i] /= f.lu(i, i);
    }
    for (std::size_t i = 0; i < m; ++i) out(i, c) = col[i];
  }
  return out;
}

McMatrix::McMatrix(int level, std::size_t m)
    : level_(level), m_(m), entries_(m * m, IdempotentRep(level)) {
  if (m == 0) throw MismatchError("matrix dimension must be positive");
}

McMatrix::McMatrix(int level, std::size_t m, std::vector<IdempotentRep> entries)
    : level_(level), m_(m), entries_(std::move(entries)) {
  check_idempotent_level(level);
  if (m == 0) throw MismatchError("matrix dimension must be positive");
  if (entries_.size() != m * m) throw MismatchError("matrix needs m*m entries");
  for (const IdempotentRep& e : entries_) detail::require_same_level(level, e.level(), "McMatrix");
}

McMatrix McMatrix::identity(int level, std::size_t m) {
  McMatrix out(level, m);
  for (std::size_t i = 0; i < m; ++i) out.entries_[i * m + i] = IdempotentRep::scalar(level, 1.0);
  return out;
}

McMatrix McMatrix::diagonal(const std::vector<IdempotentRep>& diag) {
  if (diag.empty()) throw MismatchError("diagonal needs at least one entry");
  McMatrix out(diag.front().level(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    detail::require_same_level(out.level_, diag[i].level(), "diagonal");
    out.entries_[i * diag.size() + i] = diag[i];
  }
  return out;
}

McMatrix McMatrix::from_slices(int level, const std::vector<ComplexMatrix>& slices) {
  check_idempotent_level(level);
  if (slices.size() != idempotent_size(level)) {
    throw MismatchError("need one slice per idempotent component");
  }
  const std::size_t m = slices.front().rows();
  std::vector<IdempotentRep> entries;
  entries.reserve(m * m);
  for (const ComplexMatrix& s : slices) {
    if (s.rows() != m || s.cols() != m) throw MismatchError("slices must share one square shape");
  }
  std::vector<Complex> comps(slices.size());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t p = 0; p < slices.size(); ++p) comps[p] = slices[p](i, j);
      entries.emplace_back(level, comps);
    }
  }
  return {level, m, std::move(entries)};
}

ComplexMatrix project_matrix(const McMatrix& a, std::size_t p) {
  if (p >= idempotent_size(a.level())) throw IndexError("slice index out of range");
  const std::size_t m = a.dim();
  ComplexMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = a(i, j)[p];
  return out;
}

std::vector<ComplexMatrix> slices(const McMatrix& a) {
  std::vector<ComplexMatrix> out;
  out.reserve(idempotent_size(a.level()));
  for (std::size_t p = 0; p < idempotent_size(a.level()); ++p) out.push_back(project_matrix(a, p));
  return out;
}

IdempotentRep det(const McMatrix& a) {
  std::vector<Complex> comps(idempotent_size(a.level()));
  for (std::size_t p = 0; p < comps.size(); ++p) comps[p] = determinant(project_matrix(a, p));
  return {a.level(), std::move(comps)};
}

std::vector<std::size_t> singular_components(const McMatrix& a, double tol) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < idempotent_size(a.level()); ++p) {
    const ComplexMatrix s = project_matrix(a, p);
    const double cut = tol * std::pow(1.0 + s.frobenius_norm(), static_cast<double>(a.dim()));
    if (std::abs(determinant(s)) <= cut) out.push_back(p);
  }
  return out;
}

bool is_singular(const McMatrix& a, double tol) { return !singular_components(a, tol).empty(); }

McMatrix invert_matrix(const McMatrix& a, double tol) {
  auto bad = singular_components(a, tol);
  if (!bad.empty()) {
    const std::string what =
        "matrix is singular: determinant vanishes in component(s) " + format_components(bad);
    throw SingularMatrixError(what, std::move(bad));
  }
  std::vector<ComplexMatrix> inv;
  for (const ComplexMatrix& s : slices(a)) inv.push_back(inverse(s));
  return McMatrix::from_slices(a.level(), inv);
}

McMatrix matmul(const McMatrix& a, const McMatrix& b) {
  require_same_shape(a, b, "matmul");
  std::vector<ComplexMatrix> prod;
  for (std::size_t p = 0; p < idempotent_size(a.level()); ++p) {
    prod.push_back(project_matrix(a, p) * project_matrix(b, p));
  }
  return McMatrix::from_slices(a.level(), prod);
}

McMatrix matadd(const McMatrix& a, const McMatrix& b) {
  require_same_shape(a, b, "matadd");
  std::vector<IdempotentRep> out;
  for (std::size_t k = 0; k < a.entries().size(); ++k) out.push_back(a.entries()[k] + b.entries()[k]);
  return {a.level(), a.dim(), std::move(out)};
}

McMatrix adjoint_matrix(const McMatrix& a) {
  std::vector<IdempotentRep> out;
  const std::size_t m = a.dim();
  out.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.push_back(lambda_conjugate(a(j, i)));
  return {a.level(), m, std::move(out)};
}

double max_abs_diff(const McMatrix& a, const McMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    for (std::size_t p = 0; p < a.entries()[k].size(); ++p) {
      m = std::max(m, std::abs(a.entries()[k][p] - b.entries()[k][p]));
    }
  }
  return m;
}

}  // namespace mcx
