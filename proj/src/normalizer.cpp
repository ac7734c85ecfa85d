#include <set>

#include "llab/errors.hpp"
#include "llab/expansion.hpp"
#include "llab/locality.hpp"

namespace llab {

namespace {

// L with object set F^c, reached through expansion to Delta u F^c and restriction
LocalityPtr centric_baseline(const Locality& L, const FusionSystem& F) {
  auto fc = class_sets(F).c;
  if (mask_list_sorted(fc) == L.delta()) return std::make_shared<Locality>(L);
  if (!is_proper(L, F).proper()) throw InputError("normalizer localities need a proper locality");
  std::vector<SubMask> both = L.delta();
  both.insert(both.end(), fc.begin(), fc.end());
  LocalityPtr cur = std::make_shared<Locality>(L);
  if (mask_list_sorted(both) != L.delta()) cur = full_expand(cur, mask_list_sorted(both)).result;
  return restrict_locality(*cur, fc);
}

// fusion system of a sub-locality over T, computed in the ambient S of L
FusionSystem fusion_over(const Locality& L, const ElemSet& elems, SubMask T) {
  std::set<FHom> gens;
  for (Elem g : members_of(elems)) {
    FHom f;
    f.source = 0;
    f.img.fill(kNoImage);
    for (std::uint8_t x = 0; x < L.S().order(); ++x) {
      if (!(T >> x & 1)) continue;
      auto y = L.conj(g)[x];
      if (y == kNoImage || !(T >> y & 1)) continue;
      f.source |= SubMask{1} << x;
      f.img[x] = y;
    }
    gens.insert(f);
  }
  return FusionSystem::generated(L.S_ptr(), T, std::vector<FHom>(gens.begin(), gens.end()));
}

LocalityPtr checked(const Locality& Lc, const ElemSet& elems, SubMask T, const std::vector<SubMask>& objects,
                    const FusionSystem& target, const std::string& what) {
  auto out = sublocality(Lc, elems, T, objects, what + "(" + Lc.provenance() + ")");
  if (!(fusion_over(Lc, elems, T) == target)) throw PropertyViolation(what + " locality has the wrong fusion system");
  auto pr = is_proper(*out);
  if (!pr.proper()) throw PropertyViolation(what + " locality is not proper: " + pr.violations.front());
  return out;
}

}  // namespace

LocalityPtr normalizer_locality(const Locality& L, SubMask V) {
  FusionSystem F = fusion_of(L);
  if (!L.S().is_subgroup(V) || !is_fully_normalized(F, V)) throw InputError("V is not fully normalized");
  LocalityPtr Lc = centric_baseline(L, F);
  const PGroup& S = Lc->S();
  FusionSystem FV = normalizer_system(F, V);
  auto dv = class_sets(FV).c;
  std::set<SubMask> dset(dv.begin(), dv.end());
  ElemSet elems = Lc->empty_set();
  for (Elem g : members_of(normalizer_in(*Lc, V)))
    if (dset.count(S.normalizer(Lc->s_g(g), V))) elems.set(g);
  return checked(*Lc, elems, S.normalizer(S.all(), V), dv, FV, "normalizer");
}

LocalityPtr centralizer_locality(const Locality& L, SubMask V) {
  FusionSystem F = fusion_of(L);
  if (!L.S().is_subgroup(V) || !is_fully_normalized(F, V)) throw InputError("V is not fully normalized");
  LocalityPtr Lc = centric_baseline(L, F);
  const PGroup& S = Lc->S();
  FusionSystem FV = normalizer_system(F, V), CV = centralizer_system(F, V);
  auto dv = class_sets(FV).c;
  auto sv = class_sets(CV).c;
  std::set<SubMask> dset(dv.begin(), dv.end()), sset(sv.begin(), sv.end());
  ElemSet elems = Lc->empty_set();
  for (Elem g : members_of(centralizer_in(*Lc, V)))
    if (dset.count(S.normalizer(Lc->s_g(g), V)) && sset.count(S.centralizer(Lc->s_g(g), V))) elems.set(g);
  return checked(*Lc, elems, S.centralizer(S.all(), V), sv, CV, "centralizer");
}

}  // namespace llab
