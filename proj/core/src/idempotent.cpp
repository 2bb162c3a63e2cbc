#include "mcx/idempotent.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace mcx {

namespace {

void check_component_index(int level, std::size_t p) {
  if (p >= idempotent_size(level)) {
    throw IndexError("idempotent index " + std::to_string(p) + " out of range at level " +
                     std::to_string(level));
  }
}

// Multiplies x by ½(1 + sign·u) where u is a unit with u² = +1.
std::vector<double> mul_half_one_plus(const std::vector<double>& x, std::uint32_t u, double sign) {
  std::vector<double> out(x.size(), 0.0);
  for (std::uint32_t a = 0; a < x.size(); ++a) {
    if (x[a] == 0.0) continue;
    out[a] += 0.5 * x[a];
    out[a ^ u] += 0.5 * sign * unit_product_sign(UnitSet{a}, UnitSet{u}) * x[a];
  }
  return out;
}

std::uint32_t adjacent_pair_mask(int j) { return (1U << (j - 2)) | (1U << (j - 1)); }

// Stage k (1 <= k <= n-1) of the butterfly works on blocks of 2^(k+1) reals,
// splitting by bit k (the unit i_{k+1}) and multiplying the upper half by i_k.
void forward_butterfly(std::span<double> x, int level) {
  for (int k = level - 1; k >= 1; --k) {
    const std::size_t half = std::size_t{1} << k;
    const std::size_t low = std::size_t{1} << (k - 1);
    for (std::size_t base = 0; base < x.size(); base += 2 * half) {
      double* lo = x.data() + base;
      double* hi = lo + half;
      for (std::size_t blk = 0; blk < half; blk += 2 * low) {
        for (std::size_t a = blk; a < blk + low; ++a) {
          const std::size_t b = a + low;
          const double u0 = lo[a], u1 = lo[b], v0 = hi[a], v1 = hi[b];
          lo[a] = u0 + v1;
          lo[b] = u1 - v0;
          hi[a] = u0 - v1;
          hi[b] = u1 + v0;
        }
      }
    }
  }
}

void inverse_butterfly(std::span<double> x, int level) {
  for (int k = 1; k <= level - 1; ++k) {
    const std::size_t half = std::size_t{1} << k;
    const std::size_t low = std::size_t{1} << (k - 1);
    for (std::size_t base = 0; base < x.size(); base += 2 * half) {
      double* lo = x.data() + base;
      double* hi = lo + half;
      for (std::size_t blk = 0; blk < half; blk += 2 * low) {
        for (std::size_t a = blk; a < blk + low; ++a) {
          const std::size_t b = a + low;
          const double fa = lo[a], fb = lo[b], sa = hi[a], sb = hi[b];
          lo[a] = 0.5 * (fa + sa);
          lo[b] = 0.5 * (fb + sb);
          hi[a] = 0.5 * (sb - fb);
          hi[b] = 0.5 * (fa - sa);
        }
      }
    }
  }
}

template <class Op>
IdempotentRep zip(const IdempotentRep& a, const IdempotentRep& b, const char* name, Op op) {
  detail::require_same_level(a.level(), b.level(), name);
  std::vector<Complex> out(a.size());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = op(a[p], b[p]);
  return {a.level(), std::move(out)};
}

}  // namespace

void check_idempotent_level(int level) {
  check_level(level);
  if (level < 2) throw LevelError("the idempotent representation needs level >= 2");
}

IdempotentRep::IdempotentRep(int level) : level_(level) {
  check_idempotent_level(level);
  comps_.assign(idempotent_size(level), Complex{});
}

IdempotentRep::IdempotentRep(int level, std::vector<Complex> comps)
    : level_(level), comps_(std::move(comps)) {
  check_idempotent_level(level);
  if (comps_.size() != idempotent_size(level)) {
    throw MismatchError("expected " + std::to_string(idempotent_size(level)) +
                        " idempotent components, got " + std::to_string(comps_.size()));
  }
  for (const Complex& z : comps_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NonFiniteError("idempotent components must be finite");
    }
  }
}

IdempotentRep IdempotentRep::scalar(int level, Complex z) {
  check_idempotent_level(level);
  return {level, std::vector<Complex>(idempotent_size(level), z)};
}

IdempotentRep IdempotentRep::basis(int level, std::size_t p) {
  IdempotentRep out(level);
  check_component_index(level, p);
  out.comps_[p] = 1.0;
  return out;
}

double IdempotentRep::max_abs() const noexcept {
  double m = 0.0;
  for (const Complex& z : comps_) m = std::max(m, std::abs(z));
  return m;
}

Multicomplex gamma(int level, int j) {
  check_level(level);
  if (j < 2 || j > level) throw IndexError("gamma index " + std::to_string(j) + " out of range");
  std::vector<double> x(basis_size(level), 0.0);
  x[0] = 0.5;
  x[adjacent_pair_mask(j)] = 0.5;
  return {level, std::move(x)};
}

Multicomplex gamma_prime(int level, int j) {
  check_level(level);
  if (j < 2 || j > level) throw IndexError("gamma index " + std::to_string(j) + " out of range");
  std::vector<double> x(basis_size(level), 0.0);
  x[0] = 0.5;
  x[adjacent_pair_mask(j)] = -0.5;
  return {level, std::move(x)};
}

Multicomplex epsilon(int level, std::size_t p) {
  check_idempotent_level(level);
  check_component_index(level, p);
  std::vector<double> x(basis_size(level), 0.0);
  x[0] = 1.0;
  for (int j = 2; j <= level; ++j) {
    const double sign = ((p >> (j - 2)) & 1U) ? -1.0 : 1.0;
    x = mul_half_one_plus(x, adjacent_pair_mask(j), sign);
  }
  return {level, std::move(x)};
}

IdempotentRep to_idempotent(const Multicomplex& a) {
  check_idempotent_level(a.level());
  // The butterfly leaves (re, im) of component p in slots (2p, 2p+1), which is
  // exactly the array-of-complex layout, so it runs in the output buffer.
  std::vector<Complex> comps(idempotent_size(a.level()));
  const std::span<double> x(reinterpret_cast<double*>(comps.data()), a.size());
  std::copy(a.coeffs().begin(), a.coeffs().end(), x.begin());
  forward_butterfly(x, a.level());
  return {a.level(), std::move(comps)};
}

Multicomplex from_idempotent(const IdempotentRep& r) {
  std::vector<double> x(basis_size(r.level()));
  for (std::size_t p = 0; p < r.size(); ++p) {
    x[2 * p] = r[p].real();
    x[2 * p + 1] = r[p].imag();
  }
  inverse_butterfly(x, r.level());
  return {r.level(), std::move(x)};
}

Complex project(const IdempotentRep& r, std::size_t p) {
  check_component_index(r.level(), p);
  return r[p];
}

IdempotentRep add_fast(const IdempotentRep& a, const IdempotentRep& b) {
  return zip(a, b, "add_fast", std::plus<>{});
}

IdempotentRep sub_fast(const IdempotentRep& a, const IdempotentRep& b) {
  return zip(a, b, "sub_fast", std::minus<>{});
}

IdempotentRep mul_fast(const IdempotentRep& a, const IdempotentRep& b) {
  return zip(a, b, "mul_fast", std::multiplies<>{});
}

IdempotentRep scale(const IdempotentRep& a, Complex z) {
  std::vector<Complex> out(a.comps().begin(), a.comps().end());
  for (Complex& c : out) c *= z;
  return {a.level(), std::move(out)};
}

bool approx_eq(const IdempotentRep& a, const IdempotentRep& b, double tol) {
  detail::require_same_level(a.level(), b.level(), "approx_eq");
  double diff = 0.0;
  for (std::size_t p = 0; p < a.size(); ++p) diff = std::max(diff, std::abs(a[p] - b[p]));
  return diff <= tol * std::max({1.0, a.max_abs(), b.max_abs()});
}

double null_cone_threshold(const IdempotentRep& r, double tol) {
  return tol * (1.0 + r.max_abs());
}

std::vector<std::size_t> vanishing_components(const IdempotentRep& r, double tol) {
  const double cut = null_cone_threshold(r, tol);
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < r.size(); ++p) {
    if (std::abs(r[p]) <= cut) out.push_back(p);
  }
  return out;
}

bool is_zero_divisor(const IdempotentRep& r, double tol, bool include_zero) {
  const auto vanished = vanishing_components(r, tol);
  if (vanished.empty()) return false;
  if (vanished.size() == r.size()) return include_zero;
  return true;
}

IdempotentRep invert(const IdempotentRep& r, double tol) {
  auto vanished = vanishing_components(r, tol);
  if (!vanished.empty()) {
    const std::string what =
        "element is in the null cone: vanishing component(s) " + format_components(vanished);
    throw NullConeError(what, std::move(vanished));
  }
  std::vector<Complex> out(r.size());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = 1.0 / r[p];
  return {r.level(), std::move(out)};
}

IdempotentRep lambda_conjugate(const IdempotentRep& r) {
  std::vector<Complex> out(r.size());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = std::conj(r[p]);
  return {r.level(), std::move(out)};
}

IdempotentRep conjugate_idem(const IdempotentRep& r, const ConjugationMask& m) {
  detail::require_same_level(r.level(), m.level(), "conjugate_idem");
  return to_idempotent(conjugate(from_idempotent(r), m));
}

std::vector<Multicomplex> conjugate_orbit_standard(int level) {
  check_idempotent_level(level);
  Multicomplex big_gamma = gamma(level, 2);
  for (int j = 3; j <= level; ++j) big_gamma = mul_standard(big_gamma, gamma(level, j));

  std::vector<Multicomplex> orbit;
  std::set<std::vector<double>> seen;
  for (std::uint32_t mask = 0; mask < basis_size(level); ++mask) {
    Multicomplex c = conjugate(big_gamma, ConjugationMask(level, mask));
    if (seen.emplace(c.coeffs().begin(), c.coeffs().end()).second) orbit.push_back(std::move(c));
  }
  return orbit;
}

std::vector<IdempotentRep> enumerate_conjugate_orbit(int level) {
  std::vector<IdempotentRep> out;
  for (const Multicomplex& c : conjugate_orbit_standard(level)) out.push_back(to_idempotent(c));
  return out;
}

Multiperplex::Multiperplex(int level) : level_(level) {
  check_idempotent_level(level);
  comps_.assign(idempotent_size(level), 0.0);
}

Multiperplex::Multiperplex(int level, std::vector<double> comps)
    : level_(level), comps_(std::move(comps)) {
  check_idempotent_level(level);
  if (comps_.size() != idempotent_size(level)) {
    throw MismatchError("expected " + std::to_string(idempotent_size(level)) +
                        " multiperplex components, got " + std::to_string(comps_.size()));
  }
  if (!std::all_of(comps_.begin(), comps_.end(), [](double x) { return std::isfinite(x); })) {
    throw NonFiniteError("multiperplex components must be finite");
  }
}

Multiperplex Multiperplex::from_rep(const IdempotentRep& r, double tol) {
  if (!is_multiperplex(r, tol)) throw FlavorError("value is not multiperplex");
  std::vector<double> re(r.size());
  for (std::size_t p = 0; p < re.size(); ++p) re[p] = r[p].real();
  return {r.level(), std::move(re)};
}

IdempotentRep Multiperplex::to_rep() const {
  return {level_, std::vector<Complex>(comps_.begin(), comps_.end())};
}

bool Multiperplex::is_nonnegative() const noexcept {
  return std::all_of(comps_.begin(), comps_.end(), [](double x) { return x >= 0.0; });
}

bool is_multiperplex(const IdempotentRep& r, double tol) {
  const double cut = tol * (1.0 + r.max_abs());
  return std::all_of(r.comps().begin(), r.comps().end(),
                     [cut](const Complex& z) { return std::abs(z.imag()) <= cut; });
}

std::pair<Multiperplex, Multiperplex> split_perplex(const IdempotentRep& r) {
  std::vector<double> re(r.size()), im(r.size());
  for (std::size_t p = 0; p < r.size(); ++p) {
    re[p] = r[p].real();
    im[p] = r[p].imag();
  }
  return {Multiperplex(r.level(), std::move(re)), Multiperplex(r.level(), std::move(im))};
}

bool leq(const Multiperplex& a, const Multiperplex& b) {
  detail::require_same_level(a.level(), b.level(), "leq");
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (a[p] > b[p]) return false;
  }
  return true;
}

Multiperplex operator+(const Multiperplex& a, const Multiperplex& b) {
  detail::require_same_level(a.level(), b.level(), "multiperplex add");
  std::vector<double> out(a.size());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = a[p] + b[p];
  return {a.level(), std::move(out)};
}

Multiperplex mnorm(const IdempotentRep& r) {
  std::vector<double> out(r.size());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = std::abs(r[p]);
  return {r.level(), std::move(out)};
}

}  // namespace mcx
