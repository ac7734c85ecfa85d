#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "llab/pgroup.hpp"

namespace llab {

inline constexpr std::uint8_t kNoImage = 0xff;

/// Injective homomorphism from `source` into the ambient p-group, stored element-wise.
struct FHom {
  SubMask source = 1;
  std::array<std::uint8_t, 64> img{};

  SubMask image() const;
  bool operator==(const FHom& o) const { return source == o.source && img == o.img; }
  bool operator<(const FHom& o) const { return source != o.source ? source < o.source : img < o.img; }
};

FHom identity_hom(SubMask P);
// c_g restricted to P; P^g must lie in the group
FHom conjugation_hom(const PGroup& S, SubMask P, std::uint8_t g);
FHom restrict_hom(const FHom& f, SubMask P);
FHom compose_hom(const FHom& f, const FHom& g);  // first f, then g
FHom inverse_hom(const FHom& f);
bool is_injective_hom(const PGroup& S, const FHom& f);

/// Fusion system on a subgroup `base` of an ambient p-group, with every hom-set materialized.
class FusionSystem {
 public:
  /// Least fusion system on base containing gens, conjugations by base, closed under
  /// composition, restriction and inverses of isomorphisms onto images.
  static FusionSystem generated(std::shared_ptr<const PGroup> s, SubMask base, const std::vector<FHom>& gens);
  static FusionSystem trivial(std::shared_ptr<const PGroup> s, SubMask base);
  /// Hom-sets supplied directly; table[i] for ambient subgroup index i (maps into base).
  static FusionSystem from_table(std::shared_ptr<const PGroup> s, SubMask base,
                                 std::vector<std::vector<FHom>> table);

  const PGroup& group() const { return *s_; }
  const std::shared_ptr<const PGroup>& group_ptr() const { return s_; }
  SubMask base() const { return base_; }
  std::vector<SubMask> subgroups() const { return s_->subgroups_of(base_); }

  /// Hom_F(P, base), sorted
  const std::vector<FHom>& homs(SubMask P) const;
  std::vector<FHom> homs(SubMask P, SubMask Q) const;
  bool contains(const FHom& f) const;
  std::size_t map_count() const;

  bool operator==(const FusionSystem& o) const;

 private:
  std::shared_ptr<const PGroup> s_;
  SubMask base_ = 1;
  std::vector<std::vector<FHom>> table_;
};

std::vector<SubMask> conjugates(const FusionSystem& F, SubMask P);
bool is_fully_normalized(const FusionSystem& F, SubMask P);
bool is_fully_centralized(const FusionSystem& F, SubMask P);

FusionSystem normalizer_system(const FusionSystem& F, SubMask U);
FusionSystem centralizer_system(const FusionSystem& F, SubMask U);

bool is_weakly_closed(const FusionSystem& F, SubMask T);
bool is_strongly_closed(const FusionSystem& F, SubMask T);
bool is_normal_in(const FusionSystem& F, SubMask T);
SubMask o_p_fusion(const FusionSystem& F);

/// Aut_F(P) as a list of maps
std::vector<FHom> automorphisms(const FusionSystem& F, SubMask P);

struct ClassFlags {
  bool centric = false;
  bool radical = false;
  bool quasicentric = false;
  bool subcentric = false;
  bool fully_normalized = false;
  bool fully_centralized = false;
  // Inn(P) = O_p(Aut_F(P)); diagnostic only, not used by any other operation
  bool standard_radical = false;
};

/// Caches O_p(N_F(Q)) and related data for repeated classification queries on one system.
class Classifier {
 public:
  explicit Classifier(const FusionSystem& F) : F_(F) {}

  const FusionSystem& fusion() const { return F_; }
  const std::vector<SubMask>& conjugates_of(SubMask P);
  bool fully_normalized(SubMask P);
  bool fully_centralized(SubMask P);
  SubMask o_p_normalizer(SubMask Q);
  bool centric(SubMask P);
  bool radical(SubMask P);
  bool quasicentric(SubMask P);
  bool subcentric(SubMask P);
  ClassFlags classify(SubMask P);

 private:
  const FusionSystem& F_;
  std::map<SubMask, std::vector<SubMask>> conj_;
  std::map<SubMask, SubMask> op_norm_;
  std::map<SubMask, bool> centric_, quasi_;
};

ClassFlags classify(const FusionSystem& F, SubMask P);

struct ClassSets {
  std::vector<SubMask> c, cr, q, s;
};
ClassSets class_sets(const FusionSystem& F);

bool is_f_invariant(const FusionSystem& F, const std::vector<SubMask>& gamma);
bool is_f_closed(const FusionSystem& F, const std::vector<SubMask>& gamma);
/// smallest F-closed set containing gamma
std::vector<SubMask> f_closure(const FusionSystem& F, const std::vector<SubMask>& gamma);

bool is_inductive(const FusionSystem& F, const std::vector<SubMask>& gamma);
bool is_inductive(const FusionSystem& F);
bool is_cr_generated(const FusionSystem& F);

/// First conjugate (canonical order) V of U with V and O_p(N_F(V)) fully normalized.
SubMask good_conjugate(const FusionSystem& F, SubMask U);

/// Surjection between ambient groups given on element ordinals.
struct GroupMap {
  std::vector<std::uint8_t> img;
  SubMask kernel(const PGroup& from) const;
  SubMask image_of(SubMask P) const;
  SubMask preimage_of(SubMask Q, const PGroup& from) const;
};

struct CheckItem {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {});
  std::string summary() const;
};

/// Fusion-preservation, hom-surjectivity over kernel-containing subgroups, and the
/// transfer of full normality, O_p of normalizers, centricity and radicality.
/// When delta/deltabar are supplied, also F^cr <= delta implies Fbar^cr <= deltabar.
CheckReport quotient_fusion_check(const GroupMap& lambda, const FusionSystem& F, const FusionSystem& Fbar,
                                  const std::vector<SubMask>* delta = nullptr,
                                  const std::vector<SubMask>* deltabar = nullptr);

/// Image of F under an isomorphism of ambient groups equals G.
bool fusion_equal_via(const GroupMap& sigma, const FusionSystem& F, const FusionSystem& G);

std::string hom_string(const PGroup& S, const FHom& f);

}  // namespace llab
