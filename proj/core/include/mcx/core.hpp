#pragma once

// Level-n multicomplex numbers in the standard basis {i_A : A ⊆ {1..n}}.
//
// Coefficient A lives at index A read as a bitmask: bit (k-1) set means the
// principal unit i_k is a factor of i_A. The empty mask is the real unit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mcx/error.hpp"

#ifndef MCX_MAX_LEVEL
#define MCX_MAX_LEVEL 16
#endif

namespace mcx {

inline constexpr int kMaxLevel = MCX_MAX_LEVEL;
static_assert(kMaxLevel >= 2 && kMaxLevel <= 30, "MCX_MAX_LEVEL out of range");

/// Default relative tolerance for approximate comparisons.
inline constexpr double kDefaultTol = 1e-12;

/// Throws LevelError unless 1 <= level <= kMaxLevel.
void check_level(int level);

/// Number of standard-basis coefficients at `level` (2^level).
constexpr std::size_t basis_size(int level) { return std::size_t{1} << level; }

/// Subset of {1..n} stored as a bitmask; bit (k-1) selects i_k.
struct UnitSet {
  std::uint32_t bits = 0;

  constexpr UnitSet() = default;
  constexpr explicit UnitSet(std::uint32_t b) : bits(b) {}

  /// Builds the set from 1-based unit numbers, e.g. {1, 3} for i_1 i_3.
  static UnitSet of(std::initializer_list<int> units);

  constexpr bool contains(int k) const { return (bits >> (k - 1)) & 1U; }
  constexpr int size() const { return __builtin_popcount(bits); }

  friend constexpr bool operator==(UnitSet, UnitSet) = default;
};

/// Sign of i_A * i_B relative to i_{A xor B}: (-1)^|A ∩ B|.
constexpr double unit_product_sign(UnitSet a, UnitSet b) {
  return (__builtin_popcount(a.bits & b.bits) & 1) ? -1.0 : 1.0;
}

class Multicomplex {
 public:
  /// The zero element of M_level.
  explicit Multicomplex(int level);

  /// Takes ownership of 2^level coefficients in bitmask order. Rejects
  /// non-finite entries.
  Multicomplex(int level, std::vector<double> coeffs);

  static Multicomplex unit(int level, UnitSet a);
  static Multicomplex real(int level, double x);
  /// x + y i_1, the embedding of a complex scalar.
  static Multicomplex complex(int level, double re, double im);

  int level() const noexcept { return level_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double operator[](UnitSet a) const { return coeffs_.at(a.bits); }
  double operator[](std::size_t a) const { return coeffs_.at(a); }

  /// Largest coefficient magnitude.
  double max_abs() const noexcept;
  bool is_zero() const noexcept;

  friend bool operator==(const Multicomplex&, const Multicomplex&) = default;

 private:
  struct Unchecked {};
  Multicomplex(int level, std::vector<double> coeffs, Unchecked)
      : level_(level), coeffs_(std::move(coeffs)) {}

  friend Multicomplex add(const Multicomplex&, const Multicomplex&);
  friend Multicomplex sub(const Multicomplex&, const Multicomplex&);
  friend Multicomplex scale(const Multicomplex&, double);
  friend Multicomplex mul_standard(const Multicomplex&, const Multicomplex&);
  friend Multicomplex conjugate(const Multicomplex&, const class ConjugationMask&);

  int level_;
  std::vector<double> coeffs_;
};

/// A composition of principal conjugations. Bit (k-1) set applies †_k; the
/// empty mask is †_0 (identity) and the full mask is Λ_n.
class ConjugationMask {
 public:
  ConjugationMask(int level, std::uint32_t mask);
  /// From 1-based unit numbers, e.g. of(3, {1, 3}) is †_1 †_3.
  static ConjugationMask of(int level, std::initializer_list<int> units);
  static ConjugationMask identity(int level) { return {level, 0}; }
  /// Λ_n = †_1 ∘ ... ∘ †_n.
  static ConjugationMask lambda(int level);

  int level() const noexcept { return level_; }
  std::uint32_t bits() const noexcept { return mask_; }

  friend bool operator==(const ConjugationMask&, const ConjugationMask&) = default;

 private:
  int level_;
  std::uint32_t mask_;
};

Multicomplex add(const Multicomplex& a, const Multicomplex& b);
Multicomplex sub(const Multicomplex& a, const Multicomplex& b);
Multicomplex scale(const Multicomplex& a, double r);

/// Reference product: the full O(4^n) convolution over unit pairs,
/// i_A i_B = (-1)^|A∩B| i_{A xor B}. Intentionally naive; it is the oracle the
/// idempotent fast path is validated against.
Multicomplex mul_standard(const Multicomplex& a, const Multicomplex& b);

Multicomplex conjugate(const Multicomplex& a, const ConjugationMask& m);

/// Group law of the conjugation masks (xor).
ConjugationMask compose_masks(const ConjugationMask& m1, const ConjugationMask& m2);

/// max|a - b| <= tol * max(1, max|a|, max|b|).
bool approx_eq(const Multicomplex& a, const Multicomplex& b, double tol = kDefaultTol);

inline Multicomplex operator+(const Multicomplex& a, const Multicomplex& b) { return add(a, b); }
inline Multicomplex operator-(const Multicomplex& a, const Multicomplex& b) { return sub(a, b); }
inline Multicomplex operator-(const Multicomplex& a) { return scale(a, -1.0); }
inline Multicomplex operator*(double r, const Multicomplex& a) { return scale(a, r); }
inline Multicomplex operator*(const Multicomplex& a, double r) { return scale(a, r); }

namespace detail {
void require_same_level(int a, int b, const char* op);
}  // namespace detail

}  // namespace mcx
