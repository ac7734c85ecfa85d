#include "llab/pgroup.hpp"

#include <algorithm>

#include "llab/errors.hpp"

namespace llab {

PGroup::PGroup(FiniteGroup g, int p) : g_(std::move(g)), p_(p) {
  if (g_.order() > 64 || g_.order() > caps().p_group_order)
    throw CapError("p-group order " + std::to_string(g_.order()) + " exceeds cap");
  if (p_part(g_.order(), p) != g_.order()) throw InputError("group is not a p-group");
  all_ = g_.order() == 64 ? ~SubMask{0} : ((SubMask{1} << g_.order()) - 1);
  for (const auto& H : all_subgroups(g_)) {
    SubMask m = 0;
    for (Elem e : H.members()) m |= SubMask{1} << e;
    subs_.push_back(m);
  }
  std::sort(subs_.begin(), subs_.end(), canonical_less);
  for (std::size_t i = 0; i < subs_.size(); ++i) index_.emplace(subs_[i], i);
}

std::vector<SubMask> PGroup::subgroups_of(SubMask base) const {
  std::vector<SubMask> out;
  for (SubMask m : subs_)
    if (mask_le(m, base)) out.push_back(m);
  return out;
}

std::size_t PGroup::index(SubMask m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw InputError("not a subgroup of S");
  return it->second;
}

SubMask PGroup::generated(SubMask gens) const {
  SubMask cur = 1;
  std::vector<std::uint8_t> list{0};
  std::vector<std::uint8_t> gs;
  for (std::uint8_t i = 0; i < order(); ++i)
    if (gens >> i & 1) gs.push_back(i);
  for (std::size_t k = 0; k < list.size(); ++k)
    for (auto s : gs) {
      auto c = mul(list[k], s);
      if (!(cur >> c & 1)) {
        cur |= SubMask{1} << c;
        list.push_back(c);
      }
    }
  return cur;
}

SubMask PGroup::conjugate(SubMask P, std::uint8_t g) const {
  SubMask r = 0;
  for (std::uint8_t i = 0; i < order(); ++i)
    if (P >> i & 1) r |= SubMask{1} << g_.conj(i, g);
  return r;
}

SubMask PGroup::normalizer(SubMask within, SubMask P) const {
  SubMask r = 0;
  for (std::uint8_t g = 0; g < order(); ++g)
    if ((within >> g & 1) && conjugate(P, g) == P) r |= SubMask{1} << g;
  return r;
}

SubMask PGroup::centralizer(SubMask within, SubMask P) const {
  SubMask r = 0;
  for (std::uint8_t g = 0; g < order(); ++g) {
    if (!(within >> g & 1)) continue;
    bool ok = true;
    for (std::uint8_t x = 0; x < order() && ok; ++x)
      if ((P >> x & 1) && mul(x, g) != mul(g, x)) ok = false;
    if (ok) r |= SubMask{1} << g;
  }
  return r;
}

std::vector<std::uint8_t> PGroup::generators(SubMask P) const {
  std::vector<std::uint8_t> gens;
  SubMask cur = 1, gm = 0;
  for (std::uint8_t i = 0; i < order(); ++i) {
    if (!(P >> i & 1) || (cur >> i & 1)) continue;
    gens.push_back(i);
    gm |= SubMask{1} << i;
    cur = generated(gm);
  }
  return gens;
}

std::string PGroup::describe(SubMask P) const {
  std::string s = "<";
  bool first = true;
  for (auto g : generators(P)) {
    if (!first) s += ", ";
    s += g_.label(g);
    first = false;
  }
  return s + "> order " + std::to_string(mask_order(P));
}

}  // namespace llab
