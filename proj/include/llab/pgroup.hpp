#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "llab/group.hpp"

namespace llab {

// subgroups of a group of order <= 64, as bit masks over element ordinals
using SubMask = std::uint64_t;

inline int mask_order(SubMask m) { return std::popcount(m); }
inline bool mask_le(SubMask a, SubMask b) { return (a & ~b) == 0; }

// size descending, then mask ascending
inline bool canonical_less(SubMask a, SubMask b) {
  int oa = mask_order(a), ob = mask_order(b);
  if (oa != ob) return oa > ob;
  return a < b;
}

/// A finite p-group together with its full subgroup lattice.
class PGroup {
 public:
  PGroup(FiniteGroup g, int p);

  const FiniteGroup& group() const { return g_; }
  int p() const { return p_; }
  std::size_t order() const { return g_.order(); }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return static_cast<std::uint8_t>(g_.mul(a, b)); }
  std::uint8_t inv(std::uint8_t a) const { return static_cast<std::uint8_t>(g_.inv(a)); }

  SubMask all() const { return all_; }
  static constexpr SubMask trivial() { return 1; }

  const std::vector<SubMask>& subgroups() const { return subs_; }
  std::vector<SubMask> subgroups_of(SubMask base) const;
  bool is_subgroup(SubMask m) const { return index_.count(m) != 0; }
  std::size_t index(SubMask m) const;

  SubMask generated(SubMask gens) const;
  SubMask join(SubMask a, SubMask b) const { return generated(a | b); }
  SubMask normalizer(SubMask within, SubMask P) const;
  SubMask centralizer(SubMask within, SubMask P) const;
  SubMask center(SubMask P) const { return centralizer(P, P); }
  SubMask conjugate(SubMask P, std::uint8_t g) const;
  std::vector<std::uint8_t> generators(SubMask P) const;
  std::string describe(SubMask P) const;

 private:
  FiniteGroup g_;
  int p_;
  SubMask all_;
  std::vector<SubMask> subs_;
  std::unordered_map<SubMask, std::size_t> index_;
};

}  // namespace llab
