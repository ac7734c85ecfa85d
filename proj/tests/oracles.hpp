#pragma once
// Brute-force answers computed directly in the ambient permutation group.

#include <algorithm>
#include <set>
#include <vector>

#include "llab/io.hpp"

namespace oracle {

using namespace llab;

struct GroupFusion {
  const GroupSetting& gs;
  std::vector<int> g_to_s;

  explicit GroupFusion(const GroupSetting& s) : gs(s), g_to_s(s.G->order(), -1) {
    for (std::size_t i = 0; i < gs.s_to_g.size(); ++i) g_to_s[gs.s_to_g[i]] = static_cast<int>(i);
  }
  const FiniteGroup& G() const { return *gs.G; }
  std::size_t n() const { return gs.s_to_g.size(); }
  Elem at(std::size_t i) const { return gs.s_to_g[i]; }

  // P^g as a mask, or 0 if it leaves S
  SubMask image(SubMask P, Elem g) const {
    SubMask m = 0;
    for (std::size_t i = 0; i < n(); ++i)
      if (P >> i & 1) {
        int j = g_to_s[G().conj(at(i), g)];
        if (j < 0) return 0;
        m |= SubMask{1} << j;
      }
    return m;
  }
  std::vector<SubMask> conjugates(SubMask P) const {
    std::set<SubMask> out;
    for (Elem g = 0; g < G().order(); ++g)
      if (SubMask m = image(P, g)) out.insert(m);
    return {out.begin(), out.end()};
  }
  bool commute(Elem a, Elem b) const { return G().mul(a, b) == G().mul(b, a); }
  SubMask centralizer_s(SubMask P, SubMask within) const {
    SubMask m = 0;
    for (std::size_t i = 0; i < n(); ++i) {
      if (!(within >> i & 1)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < n() && ok; ++j)
        if (P >> j & 1) ok = commute(at(i), at(j));
      if (ok) m |= SubMask{1} << i;
    }
    return m;
  }
  SubMask normalizer_s(SubMask P, SubMask within) const {
    SubMask m = 0;
    for (std::size_t i = 0; i < n(); ++i)
      if ((within >> i & 1) && image(P, at(i)) == P) m |= SubMask{1} << i;
    return m;
  }
  std::vector<Elem> elems_where(auto pred) const {
    std::vector<Elem> v;
    for (Elem g = 0; g < G().order(); ++g)
      if (pred(g)) v.push_back(g);
    return v;
  }
  std::vector<Elem> normalizer_g(SubMask P) const {
    return elems_where([&](Elem g) { return image(P, g) == P; });
  }
  std::vector<Elem> centralizer_g(SubMask P) const {
    return elems_where([&](Elem g) {
      for (std::size_t i = 0; i < n(); ++i)
        if ((P >> i & 1) && !commute(g, at(i))) return false;
      return true;
    });
  }
  // the maps x -> x^g on P, as element-ordinal arrays
  std::set<std::vector<int>> maps(SubMask P, const std::vector<Elem>& H) const {
    std::set<std::vector<int>> out;
    for (Elem h : H) {
      std::vector<int> f(n(), -1);
      bool ok = true;
      for (std::size_t i = 0; i < n() && ok; ++i)
        if (P >> i & 1) {
          f[i] = g_to_s[G().conj(at(i), h)];
          ok = f[i] >= 0;
        }
      if (ok) out.insert(f);
    }
    return out;
  }
  std::vector<SubMask> subgroups_of(SubMask T) const { return gs.S->subgroups_of(T); }

  // largest P <= T normal in the fusion system of H on T: every H-map between subgroups of T
  // extends to one normalizing P, i.e. h in C_H(R) N_H(P)
  SubMask o_p_system(const std::vector<Elem>& H, SubMask T) const {
    SubMask best = 1;
    for (SubMask P : subgroups_of(T)) {
      if (normalizer_s(P, T) != T) continue;
      std::vector<Elem> NP;
      for (Elem h : H)
        if (image(P, h) == P) NP.push_back(h);
      bool normal = true;
      for (SubMask R : subgroups_of(T)) {
        std::vector<Elem> CR;
        for (Elem h : H) {
          bool c = true;
          for (std::size_t i = 0; i < n() && c; ++i)
            if (R >> i & 1) c = commute(h, at(i));
          if (c) CR.push_back(h);
        }
        for (Elem h : H) {
          SubMask im = image(R, h);
          if (!im || !mask_le(im, T)) continue;
          bool found = false;
          for (Elem c : CR) {
            if (std::find(NP.begin(), NP.end(), G().mul(G().inv(c), h)) != NP.end()) {
              found = true;
              break;
            }
          }
          if (!found) normal = false;
        }
        if (!normal) break;
      }
      if (normal && mask_order(P) > mask_order(best)) best = P;
    }
    return best;
  }
  SubMask fully_normalized_conjugate(SubMask P) const {
    SubMask best = 0;
    for (SubMask Q : conjugates(P))
      if (!best || mask_order(normalizer_s(Q, gs.S->all())) > mask_order(normalizer_s(best, gs.S->all()))) best = Q;
    return best;
  }
  SubMask fully_centralized_conjugate(SubMask P) const {
    SubMask best = 0;
    for (SubMask Q : conjugates(P))
      if (!best || mask_order(centralizer_s(Q, gs.S->all())) > mask_order(centralizer_s(best, gs.S->all()))) best = Q;
    return best;
  }
  SubMask o_p_normalizer(SubMask P) const {
    SubMask Q = fully_normalized_conjugate(P);
    return o_p_system(normalizer_g(Q), normalizer_s(Q, gs.S->all()));
  }

  bool centric(SubMask P) const {
    for (SubMask Q : conjugates(P))
      if (!mask_le(centralizer_s(Q, gs.S->all()), Q)) return false;
    return true;
  }
  bool radical(SubMask P) const { return o_p_normalizer(P) == fully_normalized_conjugate(P); }
  bool quasicentric(SubMask P) const {
    SubMask Q = fully_centralized_conjugate(P);
    SubMask C = centralizer_s(Q, gs.S->all());
    std::vector<Elem> CG = centralizer_g(Q), CS;
    for (std::size_t i = 0; i < n(); ++i)
      if (C >> i & 1) CS.push_back(at(i));
    for (SubMask R : subgroups_of(C)) {
      auto all = maps(R, CG);
      std::set<std::vector<int>> inner;
      for (auto f : all)
        if (std::all_of(f.begin(), f.end(), [&](int j) { return j < 0 || (C >> j & 1); })) inner.insert(f);
      if (inner != maps(R, CS)) return false;
    }
    return true;
  }
  bool subcentric(SubMask P) const { return centric(o_p_normalizer(P)); }
};

}  // namespace oracle
