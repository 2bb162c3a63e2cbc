#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "mcx/idempotent.hpp"
#include "support/generators.hpp"

using namespace mcx;
using mcx::testing::Gen;

namespace {

const Complex I{0.0, 1.0};

IdempotentRep rep(std::vector<Complex> z) {
  const int level = static_cast<int>(std::log2(z.size())) + 1;
  return {level, std::move(z)};
}

Multicomplex unit(int level, std::initializer_list<int> ks) { return Multicomplex::unit(level, UnitSet::of(ks)); }

// ε_p assembled from the sign rule alone: expand each ½(1 ± i_{j-1} i_j) as
// a sum of units and multiply term by term.
Multicomplex epsilon_by_expansion(int level, std::size_t p) {
  std::vector<double> acc(basis_size(level), 0.0);
  acc[0] = 1.0;
  for (int j = 2; j <= level; ++j) {
    const double sign = ((p >> (j - 2)) & 1U) ? -1.0 : 1.0;
    const std::uint32_t pair = (1U << (j - 2)) | (1U << (j - 1));
    std::vector<double> next(acc.size(), 0.0);
    for (std::uint32_t a = 0; a < acc.size(); ++a) {
      if (acc[a] == 0.0) continue;
      next[a] += 0.5 * acc[a];
      const int overlap = __builtin_popcount(a & pair);
      next[a ^ pair] += 0.5 * sign * acc[a] * ((overlap % 2) ? -1.0 : 1.0);
    }
    acc = next;
  }
  return {level, acc};
}

}  // namespace

TEST_CASE("epsilon matches gamma products") {
  CHECK(epsilon(2, 0) == Multicomplex(2, {0.5, 0, 0, 0.5}));
  CHECK(epsilon(2, 1) == Multicomplex(2, {0.5, 0, 0, -0.5}));
  CHECK(epsilon(2, 0) == gamma(2, 2));
  CHECK(epsilon(2, 1) == gamma_prime(2, 2));
  Multicomplex sum(3);
  for (std::size_t p = 0; p < 4; ++p) sum = sum + epsilon(3, p);
  CHECK(sum == Multicomplex::real(3, 1.0));
  for (int n = 2; n <= 6; ++n)
    for (std::size_t p = 0; p < idempotent_size(n); ++p) CHECK(epsilon(n, p) == epsilon_by_expansion(n, p));
  CHECK_THROWS_AS(epsilon(2, 2), IndexError);
  CHECK_THROWS_AS(gamma(3, 4), IndexError);
  CHECK_THROWS_AS(gamma(3, 1), IndexError);
}

TEST_CASE("to_idempotent on reference elements") {
  CHECK(to_idempotent(gamma(2, 2)) == rep({1, 0}));
  CHECK(to_idempotent(unit(2, {2})) == rep({-I, I}));
  CHECK(to_idempotent(unit(2, {1})) == rep({I, I}));
  CHECK_THROWS_AS(to_idempotent(Multicomplex::real(1, 1.0)), LevelError);
}

TEST_CASE("from_idempotent on reference elements") {
  CHECK(from_idempotent(rep({1, 1})) == Multicomplex::real(2, 1.0));
  CHECK(from_idempotent(rep({1, 0})) == gamma(2, 2));
}

TEST_CASE("transform maps epsilon to the basis vector exactly") {
  for (int n = 2; n <= 7; ++n) {
    for (std::size_t p = 0; p < idempotent_size(n); ++p) {
      CHECK(to_idempotent(epsilon(n, p)) == IdempotentRep::basis(n, p));
      CHECK(from_idempotent(IdempotentRep::basis(n, p)) == epsilon(n, p));
    }
  }
}

TEST_CASE("transform roundtrip") {
  Gen g(11);
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = g.multicomplex(n);
      CHECK(approx_eq(from_idempotent(to_idempotent(x)), x, 1e-12));
      const auto d = g.dyadic_multicomplex(n);
      CHECK(from_idempotent(to_idempotent(d)) == d);
    }
  }
}

TEST_CASE("transform agrees with sum of components times epsilon") {
  Gen g(12);
  for (int n = 2; n <= 5; ++n) {
    const auto r = g.idem(n);
    Multicomplex expected(n);
    const Multicomplex i1 = unit(n, {1});
    for (std::size_t p = 0; p < r.size(); ++p) {
      const Multicomplex z = Multicomplex::real(n, r[p].real()) + r[p].imag() * i1;
      expected = expected + mul_standard(z, epsilon(n, p));
    }
    CHECK(approx_eq(from_idempotent(r), expected, 1e-13));
  }
}

TEST_CASE("project extracts components") {
  const Complex z{0.3, -1.7};
  for (std::size_t p = 0; p < 4; ++p) CHECK(project(to_idempotent(Multicomplex::complex(3, z.real(), z.imag())), p) == z);
  const auto e1 = IdempotentRep::basis(2, 0);
  CHECK(project(e1, 0) == Complex(1));
  CHECK(project(e1, 1) == Complex(0));
  CHECK_THROWS_AS(project(e1, 2), IndexError);
}

TEST_CASE("componentwise arithmetic") {
  CHECK(mul_fast(rep({1, 0}), rep({0, 1})) == rep({0, 0}));
  CHECK(mul_fast(rep({2, I}), rep({0.5, -I})) == rep({1, 1}));
  CHECK(add_fast(rep({1, 2}), rep({3, I})) == rep({4, 2.0 + I}));
  CHECK(sub_fast(rep({1, 2}), rep({1, 2})) == IdempotentRep(2));
  CHECK(scale(rep({1, I}), 2.0 * I) == rep({2.0 * I, -2.0}));
  CHECK_THROWS_AS(mul_fast(IdempotentRep(2), IdempotentRep(3)), MismatchError);
}

TEST_CASE("mul_fast is mul_standard through the transform") {
  Gen g(13);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = g.multicomplex(n), b = g.multicomplex(n);
      CHECK(approx_eq(from_idempotent(to_idempotent(a) * to_idempotent(b)), mul_standard(a, b), 1e-10));
    }
  }
}

TEST_CASE("projections are ring homomorphisms") {
  Gen g(14);
  const auto a = g.multicomplex(4), b = g.multicomplex(4);
  const auto ra = to_idempotent(a), rb = to_idempotent(b);
  const auto rab = to_idempotent(mul_standard(a, b)), rsum = to_idempotent(a + b);
  for (std::size_t p = 0; p < ra.size(); ++p) {
    CHECK(std::abs(project(rab, p) - project(ra, p) * project(rb, p)) < 1e-12);
    CHECK(std::abs(project(rsum, p) - project(ra, p) - project(rb, p)) < 1e-12);
  }
}

TEST_CASE("zero divisors") {
  CHECK(is_zero_divisor(IdempotentRep::basis(2, 0)));
  CHECK_FALSE(is_zero_divisor(IdempotentRep::scalar(2, 1.0)));
  CHECK_FALSE(is_zero_divisor(rep({-I, I})));
  CHECK_FALSE(is_zero_divisor(IdempotentRep(2)));
  CHECK(is_zero_divisor(IdempotentRep(2), kDefaultTol, true));
  CHECK(is_zero_divisor(to_idempotent(gamma_prime(3, 3))));
  CHECK(vanishing_components(rep({1, 1e-13, 0, 5})) == std::vector<std::size_t>{1, 2});
  CHECK(vanishing_components(rep({1, 1e-11})).empty());
}

TEST_CASE("invert") {
  CHECK(invert(rep({2, I})) == rep({0.5, -I}));
  CHECK(invert(rep({1, 1})) == rep({1, 1}));
  try {
    invert(rep({1, 0}));
    FAIL("expected NullConeError");
  } catch (const NullConeError& e) {
    CHECK(e.components() == std::vector<std::size_t>{1});
    CHECK(std::string(e.what()).find("ε2") != std::string::npos);
  }
  Gen g(15);
  for (int n = 2; n <= 5; ++n) {
    const auto r = g.invertible_idem(n);
    CHECK(approx_eq(r * invert(r), IdempotentRep::scalar(n, 1.0), 1e-12));
  }
}

TEST_CASE("lambda conjugation") {
  CHECK(lambda_conjugate(rep({I, 2})) == rep({-I, 2}));
  Gen g(16);
  for (int n = 2; n <= 5; ++n) {
    for (std::size_t p = 0; p < idempotent_size(n); ++p)
      CHECK(lambda_conjugate(IdempotentRep::basis(n, p)) == IdempotentRep::basis(n, p));
    const auto x = g.multicomplex(n);
    const auto r = to_idempotent(x);
    CHECK(lambda_conjugate(lambda_conjugate(r)) == r);
    CHECK(approx_eq(lambda_conjugate(r), to_idempotent(conjugate(x, ConjugationMask::lambda(n))), 1e-12));
  }
}

TEST_CASE("conjugate_idem") {
  CHECK(conjugate_idem(IdempotentRep::basis(2, 0), ConjugationMask::of(2, {1})) == IdempotentRep::basis(2, 1));
  Gen g(17);
  const auto r = to_idempotent(g.dyadic_multicomplex(3));
  CHECK(conjugate_idem(r, ConjugationMask::identity(3)) == r);
}

TEST_CASE("conjugate orbit of Gamma_n is the canonical basis") {
  const auto two = enumerate_conjugate_orbit(2);
  REQUIRE(two.size() == 2);
  CHECK(from_idempotent(two[0]) == gamma(2, 2));
  CHECK(from_idempotent(two[1]) == gamma_prime(2, 2));
  for (int n = 3; n <= 5; ++n) {
    const auto orbit = conjugate_orbit_standard(n);
    CHECK(orbit.size() == idempotent_size(n));
    std::set<std::vector<double>> got, want;
    for (const auto& e : orbit) got.insert({e.coeffs().begin(), e.coeffs().end()});
    for (std::size_t p = 0; p < idempotent_size(n); ++p) {
      const auto e = epsilon(n, p);
      want.insert({e.coeffs().begin(), e.coeffs().end()});
    }
    CHECK(got == want);
  }
}

TEST_CASE("multiperplex split and predicates") {
  const auto [d1, d2] = split_perplex(rep({Complex(3, 4), 1}));
  CHECK(d1 == Multiperplex(2, {3, 1}));
  CHECK(d2 == Multiperplex(2, {4, 0}));
  for (std::size_t p = 0; p < 4; ++p) CHECK(is_multiperplex(IdempotentRep::basis(3, p)));
  CHECK_FALSE(is_multiperplex(IdempotentRep::scalar(3, I)));
  CHECK_THROWS_AS(Multiperplex::from_rep(IdempotentRep::scalar(2, I)), FlavorError);
  Gen g(18);
  const auto r = g.idem(3);
  const auto [a, b] = split_perplex(r);
  CHECK(approx_eq(a.to_rep() + I * b.to_rep(), r, 1e-15));
  // Λ-invariant standard numbers are exactly those with real components.
  const auto x = g.multicomplex(3);
  const auto sym = x + conjugate(x, ConjugationMask::lambda(3));
  CHECK(is_multiperplex(to_idempotent(sym)));
}

TEST_CASE("product order") {
  const Multiperplex zero(2);
  const Multiperplex e1(2, {1, 0}), e2(2, {0, 1});
  CHECK(leq(zero, e1));
  CHECK_FALSE(leq(e1, e2));
  CHECK_FALSE(leq(e2, e1));
  CHECK(leq(e1, e1));
  CHECK(e1.is_nonnegative());
  CHECK_FALSE(Multiperplex(2, {1, -1}).is_nonnegative());
}

TEST_CASE("multiperplex norm") {
  CHECK(mnorm(rep({3, 4.0 * I})) == Multiperplex(2, {3, 4}));
  CHECK(mnorm(IdempotentRep::basis(2, 0)) == Multiperplex(2, {1, 0}));
  Gen g(19);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = g.idem(n), b = g.idem(n);
      CHECK(mnorm(a).is_nonnegative());
      const auto lhs = mnorm(a + b), rhs = mnorm(a) + mnorm(b);
      // slack for rounding in the moduli
      CHECK(leq(lhs, rhs + Multiperplex(n, std::vector<double>(a.size(), 1e-14))));
      const auto sq = mnorm(lambda_conjugate(a) * a);
      const auto na = mnorm(a);
      for (std::size_t p = 0; p < a.size(); ++p) CHECK(std::abs(sq[p] - na[p] * na[p]) <= 1e-10);
    }
  }
}

TEST_CASE("zero products come from disjoint supports") {
  Gen g(20);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Complex> za(idempotent_size(n)), zb(idempotent_size(n));
      for (std::size_t p = 0; p < za.size(); ++p) {
        if (g.coin()) za[p] = g.complex();
        if (g.coin()) zb[p] = g.complex();
      }
      const IdempotentRep a(n, za), b(n, zb);
      bool disjoint = true;
      for (std::size_t p = 0; p < za.size(); ++p) disjoint = disjoint && (za[p] == 0.0 || zb[p] == 0.0);
      const auto ab = a * b;
      CHECK((ab == IdempotentRep(n)) == disjoint);
      // a component of ab vanishes exactly where a or b vanishes
      for (std::size_t p = 0; p < za.size(); ++p) CHECK((ab[p] == 0.0) == (za[p] == 0.0 || zb[p] == 0.0));
      CHECK(is_zero_divisor(ab, kDefaultTol, true) == (is_zero_divisor(a, kDefaultTol, true) ||
                                                         is_zero_divisor(b, kDefaultTol, true)));
    }
  }
}
