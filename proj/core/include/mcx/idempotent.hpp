#pragma once

// Canonical idempotent representation of M_n (n >= 2).
//
// A number is stored as 2^(n-1) complex components z_p over the orthogonal
// idempotents ε_p, with i_1 playing the role of the complex unit. Index p is
// 0-based; bit (j-2) of p picks γ_j (0) or γ'_j (1) in ε_p = Π_{j=2..n} γ_j^(·),
// so the most significant bit belongs to level n. Arithmetic in this basis is
// componentwise.

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mcx/core.hpp"

namespace mcx {

using Complex = std::complex<double>;

/// Number of canonical idempotent components at `level` (2^(level-1)).
constexpr std::size_t idempotent_size(int level) { return std::size_t{1} << (level - 1); }

/// Throws LevelError unless 2 <= level <= kMaxLevel.
void check_idempotent_level(int level);

class IdempotentRep {
 public:
  explicit IdempotentRep(int level);
  IdempotentRep(int level, std::vector<Complex> comps);

  /// z·1, i.e. z in every component.
  static IdempotentRep scalar(int level, Complex z);
  /// ε_p itself (component p is 1, all others 0).
  static IdempotentRep basis(int level, std::size_t p);

  int level() const noexcept { return level_; }
  std::size_t size() const noexcept { return comps_.size(); }
  std::span<const Complex> comps() const noexcept { return comps_; }
  const Complex& operator[](std::size_t p) const { return comps_.at(p); }

  /// Largest component modulus.
  double max_abs() const noexcept;

  friend bool operator==(const IdempotentRep&, const IdempotentRep&) = default;

 private:
  int level_;
  std::vector<Complex> comps_;
};

/// γ_j = ½(1 + i_{j-1} i_j), for 2 <= j <= level.
Multicomplex gamma(int level, int j);
/// γ'_j = ½(1 - i_{j-1} i_j).
Multicomplex gamma_prime(int level, int j);

/// ε_p in the standard basis, built directly as the product of the γ/γ'
/// factors selected by the bits of p.
Multicomplex epsilon(int level, std::size_t p);

/// Standard -> idempotent basis. O(n 2^n) in-place butterfly over the
/// recursive split η = (η1 - η2 i_{n-1}) γ_n + (η1 + η2 i_{n-1}) γ'_n.
IdempotentRep to_idempotent(const Multicomplex& a);

/// Exact inverse of to_idempotent.
Multicomplex from_idempotent(const IdempotentRep& r);

/// P_p: the p-th complex component.
Complex project(const IdempotentRep& r, std::size_t p);

IdempotentRep add_fast(const IdempotentRep& a, const IdempotentRep& b);
IdempotentRep sub_fast(const IdempotentRep& a, const IdempotentRep& b);
IdempotentRep mul_fast(const IdempotentRep& a, const IdempotentRep& b);
IdempotentRep scale(const IdempotentRep& a, Complex z);

inline IdempotentRep operator+(const IdempotentRep& a, const IdempotentRep& b) { return add_fast(a, b); }
inline IdempotentRep operator-(const IdempotentRep& a, const IdempotentRep& b) { return sub_fast(a, b); }
inline IdempotentRep operator*(const IdempotentRep& a, const IdempotentRep& b) { return mul_fast(a, b); }
inline IdempotentRep operator*(Complex z, const IdempotentRep& a) { return scale(a, z); }

/// max|a_p - b_p| <= tol * max(1, max|a|, max|b|).
bool approx_eq(const IdempotentRep& a, const IdempotentRep& b, double tol = kDefaultTol);

/// Cutoff below which a component counts as vanished:
/// tol * (1 + largest component modulus).
double null_cone_threshold(const IdempotentRep& r, double tol = kDefaultTol);

/// 0-based indices of the components with modulus <= null_cone_threshold.
std::vector<std::size_t> vanishing_components(const IdempotentRep& r, double tol = kDefaultTol);

/// True iff some component vanishes. Zero itself counts only when
/// `include_zero` is set (membership in M_n^{-1}).
bool is_zero_divisor(const IdempotentRep& r, double tol = kDefaultTol, bool include_zero = false);

/// Componentwise reciprocal. Throws NullConeError listing the vanished
/// components.
IdempotentRep invert(const IdempotentRep& r, double tol = kDefaultTol);

/// Λ_n = †_1...†_n, which is componentwise complex conjugation here.
IdempotentRep lambda_conjugate(const IdempotentRep& r);

/// Arbitrary composition of conjugations, computed through the standard basis.
IdempotentRep conjugate_idem(const IdempotentRep& r, const ConjugationMask& m);

/// All distinct conjugates of Γ_n = γ_2...γ_n, in order of first appearance
/// over masks 0..2^n-1.
std::vector<Multicomplex> conjugate_orbit_standard(int level);

/// The same orbit in the idempotent basis.
std::vector<IdempotentRep> enumerate_conjugate_orbit(int level);

/// A Λ-invariant number: real canonical components.
class Multiperplex {
 public:
  explicit Multiperplex(int level);
  Multiperplex(int level, std::vector<double> comps);

  /// Throws FlavorError when some |Im z_p| exceeds tol * (1 + max|z|).
  static Multiperplex from_rep(const IdempotentRep& r, double tol = kDefaultTol);

  int level() const noexcept { return level_; }
  std::size_t size() const noexcept { return comps_.size(); }
  std::span<const double> comps() const noexcept { return comps_; }
  double operator[](std::size_t p) const { return comps_.at(p); }

  IdempotentRep to_rep() const;
  /// Every component >= 0 (membership in D_n^+).
  bool is_nonnegative() const noexcept;

  friend bool operator==(const Multiperplex&, const Multiperplex&) = default;

 private:
  int level_;
  std::vector<double> comps_;
};

bool is_multiperplex(const IdempotentRep& r, double tol = kDefaultTol);

/// r = d1 + i d2 with d1, d2 multiperplex.
std::pair<Multiperplex, Multiperplex> split_perplex(const IdempotentRep& r);

/// Product order: a_p <= b_p for every p.
bool leq(const Multiperplex& a, const Multiperplex& b);

Multiperplex operator+(const Multiperplex& a, const Multiperplex& b);

/// Multiperplex-valued norm √(η^Λ η) = Σ |z_p| ε_p.
Multiperplex mnorm(const IdempotentRep& r);

}  // namespace mcx
