#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "llab/fusion.hpp"
#include "llab/partial_group.hpp"

namespace llab {

using ConjMap = std::array<std::uint8_t, 64>;  // S ordinal -> S ordinal, kNoImage where undefined

/// Raw tables of a locality; Locality validates them on construction.
struct LocalityData {
  int p = 2;
  std::shared_ptr<const PGroup> S;
  std::vector<Elem> s_elems;  // S ordinal -> element
  std::vector<SubMask> delta;
  std::vector<Elem> inverse;
  std::vector<ConjMap> conj;
  std::vector<Elem> table;  // n*n binary products, kNone outside the domain
  std::vector<std::string> labels;
  std::string provenance;
  // group witness: element -> ordinal in the witness group (empty if none)
  std::shared_ptr<const FiniteGroup> witness;
  std::vector<Elem> witness_elems;
};

/// Objective partial group (L, Delta, S): w is in D iff S_w is in Delta.
class Locality : public PartialGroup {
 public:
  explicit Locality(LocalityData d);

  std::size_t size() const override { return d_.inverse.size(); }
  Elem inverse(Elem g) const override { return d_.inverse[g]; }
  bool in_domain(const Word& w) const override;
  std::optional<Elem> try_product(const Word& w) const override;
  std::string label(Elem g) const override;
  void for_each_domain_word(std::size_t max_len, const std::function<void(const Word&)>& f) const override;

  int p() const { return d_.p; }
  const PGroup& S() const { return *d_.S; }
  const std::shared_ptr<const PGroup>& S_ptr() const { return d_.S; }
  Elem s_elem(std::uint8_t ordinal) const { return d_.s_elems[ordinal]; }
  int s_ordinal(Elem g) const { return s_ord_[g]; }
  ElemSet s_set() const;
  ElemSet elems_of(SubMask P) const;

  const std::vector<SubMask>& delta() const { return d_.delta; }
  bool in_delta(SubMask P) const;

  const ConjMap& conj(Elem g) const { return d_.conj[g]; }
  SubMask s_g(Elem g) const { return s_g_[g]; }
  SubMask s_w(const Word& w) const;
  // image of P (<= S_g) under c_g
  SubMask conj_image(SubMask P, Elem g) const;

  Elem mul(Elem a, Elem b) const { return d_.table[static_cast<std::size_t>(a) * size() + b]; }
  const LocalityData& data() const { return d_; }
  const std::string& provenance() const { return d_.provenance; }
  const std::shared_ptr<const FiniteGroup>& witness() const { return d_.witness; }
  Elem witness_elem(Elem g) const { return d_.witness_elems[g]; }

 private:
  LocalityData d_;
  std::vector<int> s_ord_;
  std::vector<SubMask> s_g_;
  std::vector<char> delta_flag_;  // by subgroup index
};

using LocalityPtr = std::shared_ptr<const Locality>;

/// A group with its canonical Sylow subgroup and fusion system.
struct GroupSetting {
  std::shared_ptr<const FiniteGroup> G;
  int p = 2;
  Subgroup sylow;
  std::shared_ptr<const PGroup> S;
  std::vector<Elem> s_to_g;
  std::shared_ptr<const FusionSystem> F;

  SubMask mask_of(const Subgroup& H) const;  // H <= S
};

GroupSetting group_setting(std::shared_ptr<const FiniteGroup> G, int p);

/// G|_delta: elements g with S_g in delta, products from G.
LocalityPtr locality_from_group(const GroupSetting& gs, const std::vector<SubMask>& delta);
LocalityPtr locality_from_group(const FiniteGroup& G, int p, const std::vector<SubMask>& delta);

SubMask s_of_word(const Locality& L, const Word& w);
FusionSystem fusion_of(const Locality& L);

ElemSet normalizer_in(const Locality& L, SubMask P);
ElemSet centralizer_in(const Locality& L, SubMask P);
/// Subset closed under the partial product with every pair defined, as a group.
FiniteGroup group_of(const Locality& L, const ElemSet& H, std::vector<Elem>* embed = nullptr);
bool is_group_in(const Locality& L, const ElemSet& H);

struct ProperReport {
  bool pl1 = true;
  bool pl2 = true;
  std::vector<std::string> violations;
  bool proper() const { return pl1 && pl2; }
};
ProperReport is_proper(const Locality& L);
ProperReport is_proper(const Locality& L, const FusionSystem& F);

LocalityPtr restrict_locality(const Locality& L, const std::vector<SubMask>& delta0);

/// Sub-locality on the given element subset over a subgroup T of S with object set delta0
/// (subgroups of T); products and conjugation maps are inherited.
LocalityPtr sublocality(const Locality& L, const ElemSet& elems, SubMask T, const std::vector<SubMask>& delta0,
                        const std::string& provenance);

struct Quotient {
  LocalityPtr lbar;
  std::vector<Elem> rho;  // element -> coset index
  std::vector<ElemSet> blocks;
  GroupMap sigma;  // S ordinal -> Sbar ordinal
  PGHom hom(const Locality& L) const { return {&L, lbar.get(), rho}; }
};

/// Maximal right cosets of N, and the quotient locality L/N.
Quotient coset_partition(const Locality& L, const ElemSet& N);
std::vector<ElemSet> right_cosets(const Locality& L, const ElemSet& N);

struct ThetaResult {
  ElemSet theta;
  Quotient quotient;
};
ThetaResult theta_quotient(const Locality& L);

SubMask o_p_locality(const Locality& L);

ElemSet product_set(const Locality& L, const ElemSet& M, const ElemSet& N);
ElemSet product_partial_normal(const Locality& L, const ElemSet& M, const ElemSet& N);
ElemSet o_p_of(const Locality& L, const ElemSet& N, const std::vector<ElemSet>* normals = nullptr);
ElemSet o_pprime_of(const Locality& L, const ElemSet& N, const std::vector<ElemSet>* normals = nullptr);

/// Proper localities on N_F(V) (over N_S(V)) and C_F(V) (over C_S(V)); V fully normalized.
LocalityPtr normalizer_locality(const Locality& L, SubMask V);
LocalityPtr centralizer_locality(const Locality& L, SubMask V);

std::vector<SubMask> mask_list_sorted(std::vector<SubMask> v);

}  // namespace llab
