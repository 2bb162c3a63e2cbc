#pragma once

// Kets of the free M_n-module W = ⊕_p ε_p V, the multicomplex scalar
// product, and the spectral decomposition of self-adjoint operators.

#include <cstddef>
#include <vector>

#include "mcx/linalg.hpp"

namespace mcx {

/// Coordinates of a ket in the fixed orthonormal working basis {e_l}.
class Ket {
 public:
  /// Zero ket of dimension m.
  Ket(int level, std::size_t m);
  explicit Ket(std::vector<IdempotentRep> entries);

  /// The working basis vector e_l (0-based).
  static Ket basis(int level, std::size_t m, std::size_t l);
  /// Reassembles Σ_p ε_p slices[p].
  static Ket from_slices(int level, const std::vector<std::vector<Complex>>& slices);

  int level() const noexcept { return level_; }
  std::size_t dim() const noexcept { return entries_.size(); }
  const IdempotentRep& operator[](std::size_t l) const { return entries_.at(l); }
  std::span<const IdempotentRep> entries() const noexcept { return entries_; }

  friend bool operator==(const Ket&, const Ket&) = default;

 private:
  int level_;
  std::vector<IdempotentRep> entries_;
};

Ket operator+(const Ket& a, const Ket& b);
Ket operator-(const Ket& a, const Ket& b);
/// Module action α|ψ⟩.
Ket operator*(const IdempotentRep& alpha, const Ket& v);

/// Entrywise max |a - b| over all components.
double max_abs_diff(const Ket& a, const Ket& b);

/// P_p|ψ⟩ ∈ V.
std::vector<Complex> ket_project(const Ket& v, std::size_t p);

/// 0-based components p whose slice norm is <= tol (1 + largest slice norm).
std::vector<std::size_t> null_cone_components(const Ket& v, double tol = kDefaultTol);
bool is_null_cone_ket(const Ket& v, double tol = kDefaultTol);

/// (u, v) = Σ_p ⟨u_p, v_p⟩ ε_p, conjugate-linear in u.
IdempotentRep scalar_product(const Ket& u, const Ket& v);

/// v scaled by Σ_p a_p^{-1/2} ε_p where (v, v) = Σ_p a_p ε_p. Throws
/// NullConeError when v is in the null cone.
Ket normalize(const Ket& v, double tol = kDefaultTol);

/// The unique ψ with f(φ) = (ψ, φ), where f is given by its values on e_l.
Ket riesz_vector(const std::vector<IdempotentRep>& f_values);

/// Evaluates the functional with basis values f_values at φ: Σ_l f(e_l) φ_l.
IdempotentRep apply_functional(const std::vector<IdempotentRep>& f_values, const Ket& phi);

/// A|ψ⟩ computed entrywise with the componentwise product.
Ket matvec(const McMatrix& a, const Ket& v);
/// A|ψ⟩ computed slice by slice: P_p(A v) = A_p v_p.
Ket apply_operator(const McMatrix& a, const Ket& v);
ComplexMatrix operator_project(const McMatrix& a, std::size_t p);

/// Every slice Hermitian, entrywise within tol (1 + max|a|).
bool is_self_adjoint(const McMatrix& a, double tol = 1e-10);

/// |u⟩⟨v|: the matrix sending χ to u (v, χ).
McMatrix outer_product(const Ket& u, const Ket& v);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column l pairs with values[l]
};

/// Cyclic complex Jacobi for one Hermitian slice. Eigenvectors are unit
/// length, phase-fixed so the first entry above tol is real positive, and
/// ties within tol are ordered lexicographically by entries.
HermitianEigen hermitian_eig_slice(const ComplexMatrix& h, double tol = 1e-12);

struct SpectralResult {
  std::vector<Multiperplex> eigenvalues;
  std::vector<Ket> eigenkets;
  /// Largest entrywise deviation of Σ λ_l |ψ_l⟩⟨ψ_l| from A.
  double residual = 0.0;
};

/// A = Σ_l λ_l |ψ_l⟩⟨ψ_l|, pairing slice eigenpairs by ascending rank.
/// Throws NotSelfAdjointError unless is_self_adjoint(a, tol).
SpectralResult spectral_decompose(const McMatrix& a, double tol = 1e-10);

/// Σ_l λ_l |ψ_l⟩⟨ψ_l| for given eigen data.
McMatrix reconstruct(const SpectralResult& s);

}  // namespace mcx
