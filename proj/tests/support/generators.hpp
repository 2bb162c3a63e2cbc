#pragma once

// Seeded random generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "mcx/hilbert.hpp"

namespace mcx::testing {

inline ComplexMatrix operator*(double r, const ComplexMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = r * a(i, j);
  return out;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double real(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  Complex complex() { return {real(), real()}; }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::uint64_t bits(std::uint64_t below) {
    return std::uniform_int_distribution<std::uint64_t>(0, below - 1)(rng_);
  }
  bool coin() { return integer(0, 1) == 1; }

  /// Dyadic rational k/8 with |k| <= 32: exact under the transforms.
  double dyadic() { return integer(-32, 32) / 8.0; }

  Multicomplex multicomplex(int level) {
    std::vector<double> x(basis_size(level));
    for (double& c : x) c = real();
    return {level, std::move(x)};
  }

  Multicomplex dyadic_multicomplex(int level) {
    std::vector<double> x(basis_size(level));
    for (double& c : x) c = dyadic();
    return {level, std::move(x)};
  }

  IdempotentRep idem(int level) {
    std::vector<Complex> z(idempotent_size(level));
    for (Complex& c : z) c = complex();
    return {level, std::move(z)};
  }

  /// Components bounded away from zero (|z| >= 0.25).
  IdempotentRep invertible_idem(int level) {
    std::vector<Complex> z(idempotent_size(level));
    for (Complex& c : z) {
      do c = complex(); while (std::abs(c) < 0.25);
    }
    return {level, std::move(z)};
  }

  IdempotentRep perplex(int level) {
    std::vector<Complex> z(idempotent_size(level));
    for (Complex& c : z) c = real();
    return {level, std::move(z)};
  }

  Ket ket(int level, std::size_t m) {
    std::vector<IdempotentRep> e;
    for (std::size_t l = 0; l < m; ++l) e.push_back(idem(level));
    return Ket(std::move(e));
  }

  ComplexMatrix complex_matrix(std::size_t m) {
    ComplexMatrix a(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) a(i, j) = complex();
    return a;
  }

  ComplexMatrix hermitian(std::size_t m) {
    const ComplexMatrix a = complex_matrix(m);
    return 0.5 * (a + conjugate_transpose(a));
  }

  McMatrix matrix(int level, std::size_t m) {
    std::vector<IdempotentRep> e;
    for (std::size_t k = 0; k < m * m; ++k) e.push_back(idem(level));
    return {level, m, std::move(e)};
  }

  /// Slices are random plus m on the diagonal, hence comfortably invertible.
  McMatrix nonsingular_matrix(int level, std::size_t m) {
    std::vector<ComplexMatrix> s;
    for (std::size_t p = 0; p < idempotent_size(level); ++p) {
      ComplexMatrix a = complex_matrix(m);
      for (std::size_t i = 0; i < m; ++i) a(i, i) += static_cast<double>(m);
      s.push_back(a);
    }
    return McMatrix::from_slices(level, s);
  }

  McMatrix self_adjoint(int level, std::size_t m) {
    std::vector<ComplexMatrix> s;
    for (std::size_t p = 0; p < idempotent_size(level); ++p) s.push_back(hermitian(m));
    return McMatrix::from_slices(level, s);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mcx::testing
