#pragma once

// Ideals of the multiperplex ring D_n and the multicomplex ring M_n.
//
// Every ideal of either ring is principal and determined by the set J of
// canonical components its members may occupy: ⊕_{p∈J} Rε_p in D_n and
// ⊕_{p∈J} Cε_p in M_n. Both flavors share the same J; complexification and
// realization only toggle the flavor. Ideals are therefore stored
// intensionally as index sets (0-based).

#include <cstddef>
#include <vector>

#include "mcx/idempotent.hpp"

namespace mcx {

enum class Flavor { multiperplex, multicomplex };

class IdealSpec {
 public:
  /// Ideal with component set `indices` (duplicates ignored).
  IdealSpec(int level, const std::vector<std::size_t>& indices, Flavor flavor);

  static IdealSpec zero(int level, Flavor flavor) { return {level, {}, flavor}; }
  static IdealSpec whole(int level, Flavor flavor);
  /// The minimal ideal Rε_p (or Cε_p).
  static IdealSpec minimal(int level, std::size_t p, Flavor flavor);
  /// The index set encoded by the low 2^(n-1) bits of `bits` (n <= 7).
  static IdealSpec from_bits(int level, std::uint64_t bits, Flavor flavor);

  int level() const noexcept { return level_; }
  Flavor flavor() const noexcept { return flavor_; }
  /// Component count 2^(n-1).
  std::size_t universe() const noexcept { return members_.size(); }
  bool has(std::size_t p) const { return members_.at(p); }
  std::vector<std::size_t> indices() const;
  /// Indices of J^∁.
  std::vector<std::size_t> complement_indices() const;
  std::size_t cardinality() const noexcept;

  bool is_zero() const noexcept { return cardinality() == 0; }
  bool is_whole() const noexcept { return cardinality() == universe(); }

  friend bool operator==(const IdealSpec&, const IdealSpec&) = default;

 private:
  struct Members {};
  IdealSpec(Members, int level, std::vector<bool> members, Flavor flavor)
      : level_(level), flavor_(flavor), members_(std::move(members)) {}

  friend IdealSpec meet(const IdealSpec&, const IdealSpec&);
  friend IdealSpec join(const IdealSpec&, const IdealSpec&);
  friend IdealSpec with_flavor(const IdealSpec&, Flavor);

  int level_;
  Flavor flavor_;
  std::vector<bool> members_;
};

/// The maximal ideal H_p: every component except p.
IdealSpec hyperplane(int level, std::size_t p, Flavor flavor = Flavor::multiperplex);

/// Σ_{p∈J} ε_p, an idempotent generator.
IdempotentRep generator(const IdealSpec& ideal);
Multicomplex generator_standard(const IdealSpec& ideal);

/// Membership: components outside J vanish (threshold as in
/// vanishing_components). For the multiperplex flavor, a value with a
/// non-real component is not a member.
bool contains(const IdealSpec& ideal, const IdempotentRep& x, double tol = kDefaultTol);
bool contains(const IdealSpec& ideal, const Multicomplex& x, double tol = kDefaultTol);

IdealSpec meet(const IdealSpec& a, const IdealSpec& b);
IdealSpec join(const IdealSpec& a, const IdealSpec& b);

/// Inclusion of index sets (same level and flavor).
bool is_subideal(const IdealSpec& a, const IdealSpec& b);

/// Proper nonzero ideal with a single component.
bool is_minimal(const IdealSpec& ideal);
/// Proper ideal missing exactly one component.
bool is_maximal(const IdealSpec& ideal);

/// I_D -> I_D ⊕ i I_D. Throws FlavorError unless multiperplex.
IdealSpec complexify(const IdealSpec& ideal);
/// I_M -> R(I_M). Throws FlavorError unless multicomplex.
IdealSpec realize(const IdealSpec& ideal);

/// Canonical coset representative of x in M_n / I: Σ_{p∉J} P_p(x) ε_p.
IdempotentRep quotient_rep(const IdempotentRep& x, const IdealSpec& ideal);
Multicomplex quotient_rep(const Multicomplex& x, const IdealSpec& ideal);

const char* flavor_name(Flavor f);

}  // namespace mcx
