#pragma once

#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "llab/locality.hpp"

namespace llab {

/// (x^-1, h, y) with h in N_L(R), R^x = U, R^y = V
struct PhiTriple {
  Elem x_inv = 0, h = 0, y = 0;
  bool operator==(const PhiTriple& o) const { return x_inv == o.x_inv && h == o.h && y == o.y; }
  bool operator<(const PhiTriple& o) const {
    return std::tie(x_inv, h, y) < std::tie(o.x_inv, o.h, o.y);
  }
};

/// Conditions needed to expand L at R: strict overgroups of R are objects, R and O_p(N_F(R))
/// fully normalized, N_L(R) a subgroup realizing N_F(R), every Y_V nonempty.
CheckReport check_expansion_hypothesis(const Locality& L, SubMask R, const FusionSystem& F);

class ExpansionSeed {
 public:
  ExpansionSeed(LocalityPtr L, SubMask R, const FusionSystem& F);

  const Locality& L() const { return *L_; }
  const LocalityPtr& L_ptr() const { return L_; }
  SubMask R() const { return R_; }
  const std::vector<SubMask>& r_class() const { return r_class_; }
  bool in_r_class(SubMask U) const;
  const ElemSet& M() const { return M_; }
  const std::vector<Elem>& Y(SubMask V) const { return Y_.at(V); }
  Elem y(SubMask V) const { return Y_.at(V).front(); }

  bool in_phi(const PhiTriple& t) const;
  SubMask U_of(const PhiTriple& t) const;
  SubMask V_of(const PhiTriple& t) const;
  bool sim_related(const PhiTriple& a, const PhiTriple& b) const;
  /// the triple with the chosen transversal that is ~-equivalent to t
  PhiTriple canonical(const PhiTriple& t) const;
  PhiTriple canonical_of(SubMask U, SubMask V, Elem h) const;
  /// Phi_g at U: (x^-1, x g y^-1, y) with the chosen transversal
  PhiTriple embedded_triple(Elem g, SubMask U) const;
  std::vector<PhiTriple> all_triples() const;

  Elem mul(Elem a, Elem b) const;  // inside L, must be defined
  Word word(const PhiTriple& t) const { return {t.x_inv, t.h, t.y}; }

 private:
  LocalityPtr L_;
  SubMask R_;
  std::vector<SubMask> r_class_;
  ElemSet M_;
  std::map<SubMask, std::vector<Elem>> Y_;
};

struct TildeClass {
  enum class Kind { embedded, pure } kind = Kind::embedded;
  Elem g = 0;  // embedded
  SubMask U = 0, V = 0;
  Elem h = 0;  // pure: canonical triple (x_U^-1, h, y_V)
};

/// L+ on Delta u R^F; elements of L keep their indices, pure classes follow.
class ExpandedLocality {
 public:
  /// require_proper: assert properness of the result (off for quotients of proper localities)
  ExpandedLocality(LocalityPtr L, SubMask R, const FusionSystem& F, bool require_proper = true);

  const ExpansionSeed& seed() const { return *seed_; }
  const Locality& base() const { return seed_->L(); }
  const LocalityPtr& plus() const { return plus_; }
  bool is_noop() const { return !seed_; }
  SubMask R() const { return R_; }
  const std::vector<TildeClass>& classes() const { return classes_; }
  std::size_t pure_count() const { return classes_.size() - n0_; }
  std::size_t embedded_meeting_phi() const;
  const CheckReport& postconditions() const { return post_; }

  /// element of L+ for an arbitrary triple of Phi
  Elem approx_class(const PhiTriple& t) const;
  Elem class_of(SubMask U, SubMask V, Elem h) const;
  /// every triple in the class of C (C must meet Phi)
  std::vector<PhiTriple> representatives(Elem C) const;
  /// transversal-aligned representatives whose concatenation carries some R-conjugate
  std::optional<std::vector<PhiTriple>> gamma_form(const Word& w) const;
  bool is_gamma_form(const std::vector<PhiTriple>& g) const;
  /// product through a Gamma-form (new words) or through L (words of L in its domain)
  std::optional<Elem> pi_plus(const Word& w) const;
  /// value of the product formula on an arbitrary Gamma-form; nullopt if a step is undefined
  std::optional<Elem> gamma_value(const std::vector<PhiTriple>& g) const;
  /// Evaluates the product on up to `limit` Gamma-forms of w; returns the number of forms
  /// checked, or throws PropertyViolation when two forms disagree.
  std::size_t check_gamma_independence(const Word& w, std::size_t limit) const;
  /// {a in S : ([C]^-1, a, [C]) has a value in S}, from the product formula alone
  SubMask s_of_class(Elem C) const;

 private:
  void build();
  void verify(const FusionSystem& F);
  bool in_delta_plus(SubMask P) const;
  SubMask word_s(const Word& w) const;
  // product of w along the chain of R-conjugates starting at U0
  std::optional<Elem> chain_value(const Word& w, SubMask U0) const;

  std::shared_ptr<ExpansionSeed> seed_;
  LocalityPtr plus_;
  SubMask R_;
  bool require_proper_ = true;
  std::vector<ConjMap> conj_;
  std::size_t n0_ = 0;
  std::vector<TildeClass> classes_;
  std::map<std::tuple<SubMask, SubMask, Elem>, Elem> pure_index_;
  CheckReport post_;
};

using ExpandedPtr = std::shared_ptr<const ExpandedLocality>;

ExpandedPtr elementary_expand(LocalityPtr L, SubMask R, const FusionSystem& F);
ExpandedPtr elementary_expand(LocalityPtr L, SubMask R);

struct ExpansionStep {
  ExpandedPtr step;
  std::size_t size_before = 0, size_after = 0;
};

struct Expansion {
  LocalityPtr base;
  LocalityPtr result;
  std::vector<ExpansionStep> steps;
  // elements of base keep their indices in result
  bool generated_by_base = true;
};

/// Iterated elementary expansion of a proper locality to deltaplus (F-closed, inside F^s).
Expansion full_expand(LocalityPtr L, const std::vector<SubMask>& deltaplus);
/// Same loop without the properness and subcentric preconditions; Hypothesis checked at each step.
Expansion expand_along(LocalityPtr L, const std::vector<SubMask>& r_sequence, const FusionSystem& F);

/// <N^{L+}>, with N+ cap L = N, partial normality and S cap N+ = S cap N asserted.
ElemSet lift_normal(const Expansion& E, const ElemSet& N);
ElemSet lift_normal(const Locality& L, const Locality& Lplus, const ElemSet& N);

/// Extends base_map (L -> Ltilde) through the expansion steps and verifies it is an isomorphism.
std::optional<std::vector<Elem>> check_unique_iso(const Expansion& E, const Locality& Ltilde,
                                                  const std::vector<Elem>& base_map);
/// element map between two localities with group witnesses (through the witness ordinals)
std::vector<Elem> witness_map(const Locality& from, const Locality& to);
/// verifies that map is an isomorphism of localities (S, conjugation maps, objects, products)
bool is_locality_isomorphism(const Locality& A, const Locality& B, const std::vector<Elem>& map);

struct QuotientExpansion {
  Quotient quotient;          // L -> Lbar
  Expansion expansion;        // L -> L+
  Expansion bar_expansion;    // Lbar -> Lbar+
  ElemSet n_plus;
  std::vector<Elem> rho_plus;  // L+ -> Lbar+
  CheckReport checks;
};

QuotientExpansion expand_quotient(LocalityPtr L, const ElemSet& N, const std::vector<SubMask>& deltaplus,
                                  std::size_t word_len = 3);

}  // namespace llab
