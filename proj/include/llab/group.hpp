#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace llab {

using Elem = std::uint32_t;
using Perm = std::vector<std::uint32_t>;
using ElemSet = boost::dynamic_bitset<>;

inline constexpr Elem kNone = 0xffffffffu;

bool is_prime(int p);
bool is_valid_perm(const Perm& g, std::size_t degree);
Perm compose(const Perm& a, const Perm& b);  // first a, then b
Perm invert(const Perm& a);
std::string cycle_string(const Perm& g);

std::vector<Elem> members_of(const ElemSet& s);

/// Finite group with elements in a fixed canonical order; identity is element 0.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Closure of the generators; elements sorted lexicographically by image array.
  static FiniteGroup from_generators(std::size_t degree, const std::vector<Perm>& gens);

  /// Abstract group from a Cayley table (row-major, n*n). Element 0 must be the identity.
  static FiniteGroup from_table(std::size_t n, std::vector<Elem> table,
                                std::vector<std::string> labels = {});

  std::size_t order() const { return n_; }
  std::size_t degree() const { return degree_; }
  bool has_perms() const { return !perms_.empty(); }
  const Perm& perm(Elem g) const { return perms_[g]; }
  std::optional<Elem> find(const Perm& g) const;

  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * n_ + b];
    return slow_mul(a, b);
  }
  Elem inv(Elem a) const { return inv_[a]; }
  // x^g = g^-1 x g
  Elem conj(Elem x, Elem g) const { return mul(mul(inv_[g], x), g); }
  Elem power(Elem a, std::size_t k) const;
  std::size_t elem_order(Elem a) const;

  std::string label(Elem g) const;

  ElemSet empty_set() const { return ElemSet(n_); }

 private:
  Elem slow_mul(Elem a, Elem b) const;
  void finish_tables();

  std::size_t n_ = 0;
  std::size_t degree_ = 0;
  std::vector<Perm> perms_;
  struct PermHash {
    std::size_t operator()(const Perm& g) const;
  };
  std::unordered_map<Perm, Elem, PermHash> index_;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<std::string> labels_;
};

/// A subgroup as a bit set over the parent's element ordinals.
struct Subgroup {
  ElemSet bits;

  std::size_t order() const { return bits.count(); }
  bool contains(Elem g) const { return bits.test(g); }
  bool operator==(const Subgroup& o) const { return bits == o.bits; }
  bool operator<(const Subgroup& o) const { return bits < o.bits; }
  bool is_sub_of(const Subgroup& o) const { return bits.is_subset_of(o.bits); }
  std::vector<Elem> members() const { return members_of(bits); }
};

Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup whole_group(const FiniteGroup& G);
Subgroup generate(const FiniteGroup& G, const std::vector<Elem>& gens);
bool is_subgroup(const FiniteGroup& G, const ElemSet& s);
std::vector<Elem> generators_of(const FiniteGroup& G, const Subgroup& H);

std::vector<Subgroup> all_subgroups(const FiniteGroup& G);

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H);
Subgroup centralizer(const FiniteGroup& G, const Subgroup& H);
Subgroup conjugate(const FiniteGroup& G, const Subgroup& H, Elem g);
bool is_normal(const FiniteGroup& G, const Subgroup& H);
Subgroup normal_closure(const FiniteGroup& G, const std::vector<Elem>& xs);

std::size_t p_part(std::size_t n, int p);

Subgroup sylow_p(const FiniteGroup& G, int p);
Subgroup big_o_p(const FiniteGroup& G, int p);
Subgroup o_pprime_core(const FiniteGroup& G, int p);
bool is_characteristic_p(const FiniteGroup& G, int p);

/// {x in C_G(V) : [O_p(G), x] <= V}; a normal p-subgroup when G has characteristic p
/// and V is a normal p-subgroup.
Subgroup commutator_centralizer(const FiniteGroup& G, int p, const Subgroup& V);

/// Standalone group on the members of H (in ordinal order); returns the embedding too.
FiniteGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H, std::vector<Elem>* embed);

}  // namespace llab
