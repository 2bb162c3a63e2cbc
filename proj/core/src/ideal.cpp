#include "mcx/ideal.hpp"

#include <algorithm>
#include <string>

namespace mcx {

namespace {

void require_compatible(const IdealSpec& a, const IdealSpec& b, const char* op) {
  detail::require_same_level(a.level(), b.level(), op);
  if (a.flavor() != b.flavor()) {
    throw FlavorError(std::string(op) + ": " + flavor_name(a.flavor()) + " vs " +
                      flavor_name(b.flavor()) + " ideal");
  }
}

}  // namespace

const char* flavor_name(Flavor f) {
  return f == Flavor::multiperplex ? "multiperplex" : "multicomplex";
}

IdealSpec::IdealSpec(int level, const std::vector<std::size_t>& indices, Flavor flavor)
    : level_(level), flavor_(flavor) {
  check_idempotent_level(level);
  members_.assign(idempotent_size(level), false);
  for (std::size_t p : indices) {
    if (p >= members_.size()) {
      throw IndexError("ideal index " + std::to_string(p) + " out of range at level " +
                       std::to_string(level));
    }
    members_[p] = true;
  }
}

IdealSpec IdealSpec::whole(int level, Flavor flavor) {
  check_idempotent_level(level);
  return {Members{}, level, std::vector<bool>(idempotent_size(level), true), flavor};
}

IdealSpec IdealSpec::minimal(int level, std::size_t p, Flavor flavor) {
  return {level, std::vector<std::size_t>{p}, flavor};
}

IdealSpec IdealSpec::from_bits(int level, std::uint64_t bits, Flavor flavor) {
  check_idempotent_level(level);
  if (idempotent_size(level) > 64) throw LevelError("from_bits supports at most 64 components");
  std::vector<bool> members(idempotent_size(level));
  for (std::size_t p = 0; p < members.size(); ++p) members[p] = (bits >> p) & 1U;
  return {Members{}, level, std::move(members), flavor};
}

std::vector<std::size_t> IdealSpec::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < members_.size(); ++p) {
    if (members_[p]) out.push_back(p);
  }
  return out;
}

std::vector<std::size_t> IdealSpec::complement_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < members_.size(); ++p) {
    if (!members_[p]) out.push_back(p);
  }
  return out;
}

std::size_t IdealSpec::cardinality() const noexcept {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

IdealSpec hyperplane(int level, std::size_t p, Flavor flavor) {
  IdealSpec whole = IdealSpec::whole(level, flavor);
  std::vector<std::size_t> indices;
  for (std::size_t q = 0; q < whole.universe(); ++q) {
    if (q != p) indices.push_back(q);
  }
  if (p >= whole.universe()) throw IndexError("hyperplane index out of range");
  return {level, indices, flavor};
}

IdempotentRep generator(const IdealSpec& ideal) {
  std::vector<Complex> comps(ideal.universe());
  for (std::size_t p = 0; p < comps.size(); ++p) comps[p] = ideal.has(p) ? 1.0 : 0.0;
  return {ideal.level(), std::move(comps)};
}

Multicomplex generator_standard(const IdealSpec& ideal) {
  return from_idempotent(generator(ideal));
}

bool contains(const IdealSpec& ideal, const IdempotentRep& x, double tol) {
  detail::require_same_level(ideal.level(), x.level(), "contains");
  if (ideal.flavor() == Flavor::multiperplex && !is_multiperplex(x, tol)) return false;
  const double cut = null_cone_threshold(x, tol);
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (!ideal.has(p) && std::abs(x[p]) > cut) return false;
  }
  return true;
}

bool contains(const IdealSpec& ideal, const Multicomplex& x, double tol) {
  return contains(ideal, to_idempotent(x), tol);
}

IdealSpec meet(const IdealSpec& a, const IdealSpec& b) {
  require_compatible(a, b, "meet");
  std::vector<bool> out(a.members_.size());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = a.members_[p] && b.members_[p];
  return {IdealSpec::Members{}, a.level_, std::move(out), a.flavor_};
}

IdealSpec join(const IdealSpec& a, const IdealSpec& b) {
  require_compatible(a, b, "join");
  std::vector<bool> out(a.members_.size());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = a.members_[p] || b.members_[p];
  return {IdealSpec::Members{}, a.level_, std::move(out), a.flavor_};
}

bool is_subideal(const IdealSpec& a, const IdealSpec& b) {
  require_compatible(a, b, "is_subideal");
  for (std::size_t p = 0; p < a.universe(); ++p) {
    if (a.has(p) && !b.has(p)) return false;
  }
  return true;
}

bool is_minimal(const IdealSpec& ideal) {
  return ideal.cardinality() == 1 && !ideal.is_whole();
}

bool is_maximal(const IdealSpec& ideal) {
  return ideal.cardinality() + 1 == ideal.universe() && !ideal.is_zero();
}

IdealSpec with_flavor(const IdealSpec& ideal, Flavor flavor) {
  return {IdealSpec::Members{}, ideal.level_, ideal.members_, flavor};
}

IdealSpec complexify(const IdealSpec& ideal) {
  if (ideal.flavor() != Flavor::multiperplex) {
    throw FlavorError("complexify expects a multiperplex ideal");
  }
  return with_flavor(ideal, Flavor::multicomplex);
}

IdealSpec realize(const IdealSpec& ideal) {
  if (ideal.flavor() != Flavor::multicomplex) {
    throw FlavorError("realize expects a multicomplex ideal");
  }
  return with_flavor(ideal, Flavor::multiperplex);
}

IdempotentRep quotient_rep(const IdempotentRep& x, const IdealSpec& ideal) {
  detail::require_same_level(x.level(), ideal.level(), "quotient_rep");
  std::vector<Complex> out(x.size());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = ideal.has(p) ? Complex{} : x[p];
  return {x.level(), std::move(out)};
}

Multicomplex quotient_rep(const Multicomplex& x, const IdealSpec& ideal) {
  return from_idempotent(quotient_rep(to_idempotent(x), ideal));
}

}  // namespace mcx
