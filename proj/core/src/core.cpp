#include "mcx/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mcx {

void check_level(int level) {
  if (level < 1 || level > kMaxLevel) {
    throw LevelError("level " + std::to_string(level) + " outside [1, " +
                     std::to_string(kMaxLevel) + "]");
  }
}

namespace detail {
void require_same_level(int a, int b, const char* op) {
  if (a != b) {
    throw MismatchError(std::string(op) + ": level mismatch (" + std::to_string(a) + " vs " +
                        std::to_string(b) + ")");
  }
}
}  // namespace detail

UnitSet UnitSet::of(std::initializer_list<int> units) {
  UnitSet s;
  for (int k : units) {
    if (k < 1 || k > kMaxLevel) throw IndexError("unit i" + std::to_string(k) + " out of range");
    s.bits |= 1U << (k - 1);
  }
  return s;
}

Multicomplex::Multicomplex(int level) : level_(level) {
  check_level(level);
  coeffs_.assign(basis_size(level), 0.0);
}

Multicomplex::Multicomplex(int level, std::vector<double> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
  check_level(level);
  if (coeffs_.size() != basis_size(level)) {
    throw MismatchError("expected " + std::to_string(basis_size(level)) +
                        " coefficients, got " + std::to_string(coeffs_.size()));
  }
  if (!std::all_of(coeffs_.begin(), coeffs_.end(), [](double x) { return std::isfinite(x); })) {
    throw NonFiniteError("multicomplex coefficients must be finite");
  }
}

Multicomplex Multicomplex::unit(int level, UnitSet a) {
  Multicomplex out(level);
  if (a.bits >= out.size()) {
    throw IndexError("unit set exceeds level " + std::to_string(level));
  }
  out.coeffs_[a.bits] = 1.0;
  return out;
}

Multicomplex Multicomplex::real(int level, double x) {
  Multicomplex out(level);
  out.coeffs_[0] = x;
  return Multicomplex(level, std::move(out.coeffs_));
}

Multicomplex Multicomplex::complex(int level, double re, double im) {
  Multicomplex out(level);
  out.coeffs_[0] = re;
  out.coeffs_[1] = im;
  return Multicomplex(level, std::move(out.coeffs_));
}

double Multicomplex::max_abs() const noexcept {
  double m = 0.0;
  for (double x : coeffs_) m = std::max(m, std::abs(x));
  return m;
}

bool Multicomplex::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double x) { return x == 0.0; });
}

Multicomplex add(const Multicomplex& a, const Multicomplex& b) {
  detail::require_same_level(a.level_, b.level_, "add");
  std::vector<double> out(a.coeffs_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs_[i];
  return {a.level_, std::move(out), Multicomplex::Unchecked{}};
}

Multicomplex sub(const Multicomplex& a, const Multicomplex& b) {
  detail::require_same_level(a.level_, b.level_, "sub");
  std::vector<double> out(a.coeffs_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.coeffs_[i];
  return {a.level_, std::move(out), Multicomplex::Unchecked{}};
}

Multicomplex scale(const Multicomplex& a, double r) {
  std::vector<double> out(a.coeffs_);
  for (double& x : out) x *= r;
  return {a.level_, std::move(out), Multicomplex::Unchecked{}};
}

Multicomplex mul_standard(const Multicomplex& a, const Multicomplex& b) {
  detail::require_same_level(a.level_, b.level_, "mul_standard");
  const std::size_t size = a.coeffs_.size();
  std::vector<double> out(size, 0.0);
  for (std::uint32_t ia = 0; ia < size; ++ia) {
    const double xa = a.coeffs_[ia];
    if (xa == 0.0) continue;
    for (std::uint32_t ib = 0; ib < size; ++ib) {
      out[ia ^ ib] += unit_product_sign(UnitSet{ia}, UnitSet{ib}) * xa * b.coeffs_[ib];
    }
  }
  return {a.level_, std::move(out), Multicomplex::Unchecked{}};
}

ConjugationMask::ConjugationMask(int level, std::uint32_t mask) : level_(level), mask_(mask) {
  check_level(level);
  if (mask >= basis_size(level)) {
    throw IndexError("conjugation mask exceeds level " + std::to_string(level));
  }
}

ConjugationMask ConjugationMask::of(int level, std::initializer_list<int> units) {
  return {level, UnitSet::of(units).bits};
}

ConjugationMask ConjugationMask::lambda(int level) {
  check_level(level);
  return {level, static_cast<std::uint32_t>(basis_size(level) - 1)};
}

Multicomplex conjugate(const Multicomplex& a, const ConjugationMask& m) {
  detail::require_same_level(a.level_, m.level(), "conjugate");
  std::vector<double> out(a.coeffs_);
  for (std::uint32_t i = 0; i < out.size(); ++i) {
    if (__builtin_popcount(i & m.bits()) & 1) out[i] = -out[i];
  }
  return {a.level_, std::move(out), Multicomplex::Unchecked{}};
}

ConjugationMask compose_masks(const ConjugationMask& m1, const ConjugationMask& m2) {
  detail::require_same_level(m1.level(), m2.level(), "compose_masks");
  return {m1.level(), m1.bits() ^ m2.bits()};
}

bool approx_eq(const Multicomplex& a, const Multicomplex& b, double tol) {
  detail::require_same_level(a.level(), b.level(), "approx_eq");
  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
  return diff <= tol * std::max({1.0, a.max_abs(), b.max_abs()});
}

}  // namespace mcx
