#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "llab/group.hpp"

namespace llab {

using Word = std::vector<Elem>;

std::string word_string(const Word& w);

/// (L, D, Pi, inversion). Element 0 is the identity.
class PartialGroup {
 public:
  virtual ~PartialGroup() = default;

  virtual std::size_t size() const = 0;
  Elem identity() const { return 0; }
  virtual Elem inverse(Elem g) const = 0;
  virtual bool in_domain(const Word& w) const = 0;
  /// nullopt outside the domain (or if the product cannot be formed)
  virtual std::optional<Elem> try_product(const Word& w) const = 0;
  virtual std::string label(Elem g) const { return "#" + std::to_string(g); }

  /// Calls f on every domain word of length 1..max_len, in lexicographic order.
  virtual void for_each_domain_word(std::size_t max_len, const std::function<void(const Word&)>& f) const;

  /// Throws DomainError naming the first prefix outside the domain.
  Elem product(const Word& w) const;
  std::optional<Elem> try_mul(Elem a, Elem b) const { return try_product({a, b}); }
  Word inverse_word(const Word& w) const;
  ElemSet empty_set() const { return ElemSet(size()); }
  ElemSet full_set() const { return ElemSet(size()).set(); }
};

struct AxiomReport {
  std::size_t words_checked = 0;
  std::size_t violation_count = 0;
  std::vector<std::string> violations;  // first few, with witness words
  bool passed() const { return violation_count == 0; }
};

AxiomReport check_axioms(const PartialGroup& L, std::size_t max_len = 4);

bool is_partial_subgroup(const PartialGroup& L, const ElemSet& H);
ElemSet generated_subgroup(const PartialGroup& L, const ElemSet& X);
bool is_partial_normal(const PartialGroup& L, const ElemSet& N);
/// smallest partial normal subgroup containing X
ElemSet normal_closure(const PartialGroup& L, const ElemSet& X);
/// ordered by size, then by member list
std::vector<ElemSet> all_partial_normal_subgroups(const PartialGroup& L);

/// Conjugates x^g over all x in X, g in L where (g^-1, x, g) is in the domain.
ElemSet conjugation_closure_step(const PartialGroup& L, const ElemSet& X);

struct PGHom {
  const PartialGroup* source = nullptr;
  const PartialGroup* target = nullptr;
  std::vector<Elem> map;

  Elem operator()(Elem g) const { return map[g]; }
  Word apply(const Word& w) const;
};

struct HomReport {
  std::size_t words_checked = 0;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

HomReport check_homomorphism(const PGHom& h, std::size_t max_len = 3);
ElemSet kernel(const PGHom& h);
/// every target domain word of length <= max_len is the image of a source domain word
bool is_projection(const PGHom& h, std::size_t max_len = 3);

std::string set_string(const PartialGroup& L, const ElemSet& X);

}  // namespace llab
