#include "llab/locality.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "llab/errors.hpp"

namespace llab {

std::vector<SubMask> mask_list_sorted(std::vector<SubMask> v) {
  std::sort(v.begin(), v.end(), canonical_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Locality::Locality(LocalityData d) : d_(std::move(d)) {
  const std::size_t n = d_.inverse.size();
  const PGroup& S = *d_.S;
  if (n == 0 || d_.conj.size() != n || d_.table.size() != n * n) throw InputError("locality tables have inconsistent sizes");
  if (d_.s_elems.size() != S.order() || d_.s_elems[0] != 0) throw InputError("S must start at the identity element");
  s_ord_.assign(n, -1);
  for (std::size_t i = 0; i < d_.s_elems.size(); ++i) {
    if (d_.s_elems[i] >= n) throw InputError("S element out of range");
    s_ord_[d_.s_elems[i]] = static_cast<int>(i);
  }
  delta_flag_.assign(S.subgroups().size(), 0);
  d_.delta = mask_list_sorted(d_.delta);
  for (SubMask P : d_.delta) delta_flag_[S.index(P)] = 1;
  if (!in_delta(S.all())) throw InputError("S is not an object");
  s_g_.resize(n);
  for (Elem g = 0; g < n; ++g) {
    if (d_.inverse[g] >= n || d_.inverse[d_.inverse[g]] != g) throw InputError("inversion is not an involution");
    SubMask m = 0;
    for (std::uint8_t x = 0; x < S.order(); ++x)
      if (d_.conj[g][x] != kNoImage) m |= SubMask{1} << x;
    if (!S.is_subgroup(m)) throw PropertyViolation("S_g is not a subgroup for element " + label(g));
    s_g_[g] = m;
  }
  for (Elem f = 0; f < n; ++f)
    for (Elem g = 0; g < n; ++g) {
      bool obj = in_delta(s_w({f, g}));
      bool tab = mul(f, g) != kNone;
      if (obj != tab)
        throw PropertyViolation("domain of (" + label(f) + ", " + label(g) + ") disagrees with S_w in the object set");
    }
}

bool Locality::in_delta(SubMask P) const {
  if (!S().is_subgroup(P)) return false;
  return delta_flag_[S().index(P)] != 0;
}

SubMask Locality::s_w(const Word& w) const {
  const std::size_t k = S().order();
  std::array<std::uint8_t, 64> cur;
  for (std::uint8_t x = 0; x < k; ++x) cur[x] = x;
  for (Elem g : w) {
    const auto& c = d_.conj[g];
    for (std::uint8_t x = 0; x < k; ++x)
      if (cur[x] != kNoImage) cur[x] = c[cur[x]];
  }
  SubMask m = 0;
  for (std::uint8_t x = 0; x < k; ++x)
    if (cur[x] != kNoImage) m |= SubMask{1} << x;
  return m;
}

SubMask Locality::conj_image(SubMask P, Elem g) const {
  if (!mask_le(P, s_g_[g])) throw InputError("conjugation outside S_g");
  SubMask r = 0;
  for (std::uint8_t x = 0; x < S().order(); ++x)
    if (P >> x & 1) r |= SubMask{1} << d_.conj[g][x];
  return r;
}

bool Locality::in_domain(const Word& w) const {
  for (Elem g : w)
    if (g >= size()) return false;
  return in_delta(s_w(w));
}

std::optional<Elem> Locality::try_product(const Word& w) const {
  if (!in_domain(w)) return std::nullopt;
  Elem r = 0;
  for (Elem g : w) {
    r = mul(r, g);
    if (r == kNone) return std::nullopt;
  }
  return r;
}

std::string Locality::label(Elem g) const {
  if (g < d_.labels.size()) return d_.labels[g];
  return "#" + std::to_string(g);
}

void Locality::for_each_domain_word(std::size_t max_len, const std::function<void(const Word&)>& f) const {
  const std::size_t k = S().order();
  std::vector<std::array<std::uint8_t, 64>> stack(max_len + 1);
  for (std::uint8_t x = 0; x < k; ++x) stack[0][x] = x;
  Word w;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    for (Elem g = 0; g < size(); ++g) {
      const auto& c = d_.conj[g];
      auto& next = stack[depth + 1];
      SubMask m = 0;
      for (std::uint8_t x = 0; x < k; ++x) {
        std::uint8_t v = stack[depth][x];
        next[x] = v == kNoImage ? kNoImage : c[v];
        if (next[x] != kNoImage) m |= SubMask{1} << x;
      }
      if (!in_delta(m)) continue;
      w.push_back(g);
      f(w);
      if (depth + 1 < max_len) rec(depth + 1);
      w.pop_back();
    }
  };
  if (max_len > 0) rec(0);
}

ElemSet Locality::s_set() const {
  ElemSet s = empty_set();
  for (Elem e : d_.s_elems) s.set(e);
  return s;
}

ElemSet Locality::elems_of(SubMask P) const {
  ElemSet s = empty_set();
  for (std::uint8_t x = 0; x < S().order(); ++x)
    if (P >> x & 1) s.set(d_.s_elems[x]);
  return s;
}

SubMask GroupSetting::mask_of(const Subgroup& H) const {
  SubMask m = 0;
  for (std::size_t i = 0; i < s_to_g.size(); ++i)
    if (H.contains(s_to_g[i])) m |= SubMask{1} << i;
  return m;
}

namespace {

// c_g on S (as a map of S ordinals) for a group element
ConjMap group_conj(const FiniteGroup& G, const std::vector<Elem>& s_to_g, const std::vector<int>& g_to_s, Elem g) {
  ConjMap c;
  c.fill(kNoImage);
  for (std::size_t x = 0; x < s_to_g.size(); ++x) {
    int y = g_to_s[G.conj(s_to_g[x], g)];
    if (y >= 0) c[x] = static_cast<std::uint8_t>(y);
  }
  return c;
}

FHom conj_to_hom(const ConjMap& c, std::size_t k) {
  FHom f;
  f.source = 0;
  f.img.fill(kNoImage);
  for (std::uint8_t x = 0; x < k; ++x)
    if (c[x] != kNoImage) {
      f.source |= SubMask{1} << x;
      f.img[x] = c[x];
    }
  return f;
}

}  // namespace

GroupSetting group_setting(std::shared_ptr<const FiniteGroup> G, int p) {
  GroupSetting gs;
  gs.G = G;
  gs.p = p;
  gs.sylow = sylow_p(*G, p);
  gs.S = std::make_shared<PGroup>(subgroup_as_group(*G, gs.sylow, &gs.s_to_g), p);
  std::vector<int> g_to_s(G->order(), -1);
  for (std::size_t i = 0; i < gs.s_to_g.size(); ++i) g_to_s[gs.s_to_g[i]] = static_cast<int>(i);
  std::set<FHom> gens;
  for (Elem g = 0; g < G->order(); ++g) gens.insert(conj_to_hom(group_conj(*G, gs.s_to_g, g_to_s, g), gs.s_to_g.size()));
  gs.F = std::make_shared<FusionSystem>(
      FusionSystem::generated(gs.S, gs.S->all(), std::vector<FHom>(gens.begin(), gens.end())));
  return gs;
}

LocalityPtr locality_from_group(const GroupSetting& gs, const std::vector<SubMask>& delta) {
  if (!is_f_closed(*gs.F, delta)) throw InputError("object set is not F-closed");
  const FiniteGroup& G = *gs.G;
  std::vector<int> g_to_s(G.order(), -1);
  for (std::size_t i = 0; i < gs.s_to_g.size(); ++i) g_to_s[gs.s_to_g[i]] = static_cast<int>(i);
  std::set<SubMask> dset(delta.begin(), delta.end());

  LocalityData d;
  d.p = gs.p;
  d.S = gs.S;
  d.delta = delta;
  d.witness = gs.G;
  std::vector<Elem> g_to_l(G.order(), kNone);
  for (Elem g = 0; g < G.order(); ++g) {
    ConjMap c = group_conj(G, gs.s_to_g, g_to_s, g);
    if (!dset.count(conj_to_hom(c, gs.s_to_g.size()).source)) continue;
    g_to_l[g] = static_cast<Elem>(d.witness_elems.size());
    d.witness_elems.push_back(g);
    d.conj.push_back(c);
    d.labels.push_back(G.label(g));
  }
  const std::size_t n = d.witness_elems.size();
  for (std::size_t i = 0; i < gs.s_to_g.size(); ++i) {
    if (g_to_l[gs.s_to_g[i]] == kNone) throw PropertyViolation("S is not contained in the locality");
    d.s_elems.push_back(g_to_l[gs.s_to_g[i]]);
  }
  d.inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.inverse[i] = g_to_l[G.inv(d.witness_elems[i])];
  d.table.assign(n * n, kNone);
  const std::size_t k = gs.s_to_g.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      SubMask m = 0;
      for (std::uint8_t x = 0; x < k; ++x) {
        auto y = d.conj[a][x];
        if (y != kNoImage && d.conj[b][y] != kNoImage) m |= SubMask{1} << x;
      }
      if (!dset.count(m)) continue;
      Elem prod = g_to_l[G.mul(d.witness_elems[a], d.witness_elems[b])];
      if (prod == kNone) throw PropertyViolation("product of a domain pair left the locality");
      d.table[a * n + b] = prod;
    }
  d.provenance = "from-group";
  return std::make_shared<Locality>(std::move(d));
}

LocalityPtr locality_from_group(const FiniteGroup& G, int p, const std::vector<SubMask>& delta) {
  return locality_from_group(group_setting(std::make_shared<FiniteGroup>(G), p), delta);
}

SubMask s_of_word(const Locality& L, const Word& w) { return L.s_w(w); }

FusionSystem fusion_of(const Locality& L) {
  std::set<FHom> gens;
  for (Elem g = 0; g < L.size(); ++g) gens.insert(conj_to_hom(L.conj(g), L.S().order()));
  return FusionSystem::generated(L.S_ptr(), L.S().all(), std::vector<FHom>(gens.begin(), gens.end()));
}

ElemSet normalizer_in(const Locality& L, SubMask P) {
  ElemSet N = L.empty_set();
  for (Elem g = 0; g < L.size(); ++g)
    if (mask_le(P, L.s_g(g)) && L.conj_image(P, g) == P) N.set(g);
  return N;
}

ElemSet centralizer_in(const Locality& L, SubMask P) {
  ElemSet C = L.empty_set();
  for (Elem g = 0; g < L.size(); ++g) {
    if (!mask_le(P, L.s_g(g))) continue;
    bool ok = true;
    for (std::uint8_t x = 0; x < L.S().order(); ++x)
      if ((P >> x & 1) && L.conj(g)[x] != x) ok = false;
    if (ok) C.set(g);
  }
  return C;
}

bool is_group_in(const Locality& L, const ElemSet& H) {
  if (!H.test(0)) return false;
  auto m = members_of(H);
  for (Elem a : m) {
    if (!H.test(L.inverse(a))) return false;
    for (Elem b : m) {
      Elem c = L.mul(a, b);
      if (c == kNone || !H.test(c)) return false;
    }
  }
  return true;
}

FiniteGroup group_of(const Locality& L, const ElemSet& H, std::vector<Elem>* embed) {
  if (!is_group_in(L, H)) throw PropertyViolation("subset " + set_string(L, H) + " is not a subgroup of the locality");
  auto m = members_of(H);
  std::vector<Elem> pos(L.size(), kNone);
  for (std::size_t i = 0; i < m.size(); ++i) pos[m[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(m.size() * m.size());
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m.size(); ++a) {
    labels.push_back(L.label(m[a]));
    for (std::size_t b = 0; b < m.size(); ++b) table[a * m.size() + b] = pos[L.mul(m[a], m[b])];
  }
  if (embed) *embed = m;
  return FiniteGroup::from_table(m.size(), std::move(table), std::move(labels));
}

ProperReport is_proper(const Locality& L, const FusionSystem& F) {
  ProperReport rep;
  for (SubMask P : class_sets(F).cr)
    if (!L.in_delta(P)) {
      rep.pl1 = false;
      rep.violations.push_back("centric radical " + L.S().describe(P) + " is not an object");
    }
  for (SubMask P : L.delta()) {
    FiniteGroup N = group_of(L, normalizer_in(L, P));
    if (!is_characteristic_p(N, L.p())) {
      rep.pl2 = false;
      rep.violations.push_back("normalizer of " + L.S().describe(P) + " is not of characteristic p");
    }
  }
  return rep;
}

ProperReport is_proper(const Locality& L) { return is_proper(L, fusion_of(L)); }

LocalityPtr sublocality(const Locality& L, const ElemSet& elems, SubMask T, const std::vector<SubMask>& delta0,
                        const std::string& provenance) {
  const PGroup& S = L.S();
  std::vector<std::uint8_t> t_ord;  // new ordinal -> old ordinal
  std::vector<int> old_to_new(S.order(), -1);
  for (std::uint8_t x = 0; x < S.order(); ++x)
    if (T >> x & 1) {
      old_to_new[x] = static_cast<int>(t_ord.size());
      t_ord.push_back(x);
    }
  auto convert = [&](SubMask P) {
    SubMask r = 0;
    for (std::uint8_t x = 0; x < S.order(); ++x)
      if (P >> x & 1) {
        if (old_to_new[x] < 0) throw InputError("object outside the new Sylow subgroup");
        r |= SubMask{1} << old_to_new[x];
      }
    return r;
  };

  LocalityData d;
  d.p = L.p();
  if (T == S.all()) {
    d.S = L.S_ptr();
  } else {
    std::vector<Elem> table(t_ord.size() * t_ord.size());
    for (std::size_t a = 0; a < t_ord.size(); ++a)
      for (std::size_t b = 0; b < t_ord.size(); ++b)
        table[a * t_ord.size() + b] = static_cast<Elem>(old_to_new[S.mul(t_ord[a], t_ord[b])]);
    std::vector<std::string> labels;
    for (auto x : t_ord) labels.push_back(L.label(L.s_elem(x)));
    d.S = std::make_shared<PGroup>(FiniteGroup::from_table(t_ord.size(), std::move(table), std::move(labels)), L.p());
  }
  for (SubMask P : delta0) d.delta.push_back(convert(P));

  auto m = members_of(elems);
  if (m.empty() || m[0] != 0) throw InputError("sub-locality must contain the identity");
  std::vector<Elem> pos(L.size(), kNone);
  for (std::size_t i = 0; i < m.size(); ++i) pos[m[i]] = static_cast<Elem>(i);
  for (auto x : t_ord) {
    if (pos[L.s_elem(x)] == kNone) throw InputError("sub-locality must contain its Sylow subgroup");
    d.s_elems.push_back(pos[L.s_elem(x)]);
  }
  const std::size_t n = m.size();
  for (Elem g : m) {
    if (pos[L.inverse(g)] == kNone) throw InputError("element subset not closed under inversion");
    d.inverse.push_back(pos[L.inverse(g)]);
    ConjMap c;
    c.fill(kNoImage);
    for (std::size_t i = 0; i < t_ord.size(); ++i) {
      auto y = L.conj(g)[t_ord[i]];
      if (y != kNoImage && old_to_new[y] >= 0) c[i] = static_cast<std::uint8_t>(old_to_new[y]);
    }
    d.conj.push_back(c);
    d.labels.push_back(L.label(g));
    if (L.witness()) d.witness_elems.push_back(L.witness_elem(g));
  }
  d.witness = L.witness();
  std::set<SubMask> dset(d.delta.begin(), d.delta.end());
  d.table.assign(n * n, kNone);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      SubMask sm = 0;
      for (std::size_t x = 0; x < t_ord.size(); ++x) {
        auto y = d.conj[a][x];
        if (y != kNoImage && d.conj[b][y] != kNoImage) sm |= SubMask{1} << x;
      }
      if (!dset.count(sm)) continue;
      Elem prod = L.mul(m[a], m[b]);
      if (prod == kNone || pos[prod] == kNone)
        throw PropertyViolation("sub-locality product (" + L.label(m[a]) + ", " + L.label(m[b]) + ") not available");
      d.table[a * n + b] = pos[prod];
    }
  d.provenance = provenance;
  return std::make_shared<Locality>(std::move(d));
}

LocalityPtr restrict_locality(const Locality& L, const std::vector<SubMask>& delta0) {
  for (SubMask P : delta0)
    if (!L.in_delta(P)) throw InputError("restriction object set is not contained in the object set");
  FusionSystem F = fusion_of(L);
  if (!is_f_closed(F, delta0)) throw InputError("restriction object set is not F-closed");
  std::set<SubMask> dset(delta0.begin(), delta0.end());
  ElemSet elems = L.empty_set();
  for (Elem g = 0; g < L.size(); ++g)
    if (dset.count(L.s_g(g))) elems.set(g);
  return sublocality(L, elems, L.S().all(), delta0, "restriction(" + L.provenance() + ")");
}

std::vector<ElemSet> right_cosets(const Locality& L, const ElemSet& N) {
  std::vector<ElemSet> out;
  auto n = members_of(N);
  for (Elem g = 0; g < L.size(); ++g) {
    ElemSet C = L.empty_set();
    for (Elem x : n)
      if (Elem c = L.mul(x, g); c != kNone) C.set(c);
    out.push_back(std::move(C));
  }
  return out;
}

Quotient coset_partition(const Locality& L, const ElemSet& N) {
  if (!is_partial_normal(L, N)) throw InputError("quotient by a subset that is not partial normal");
  auto cosets = right_cosets(L, N);
  std::vector<ElemSet> maximal;
  {
    std::set<ElemSet> seen;
    for (const auto& C : cosets) {
      bool is_max = true;
      for (const auto& D : cosets)
        if (C != D && C.is_subset_of(D)) {
          is_max = false;
          break;
        }
      if (is_max && seen.insert(C).second) maximal.push_back(C);
    }
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const ElemSet& a, const ElemSet& b) { return a.find_first() < b.find_first(); });
  const std::size_t n = L.size(), m = maximal.size();
  Quotient q;
  q.rho.assign(n, kNone);
  for (std::size_t i = 0; i < m; ++i)
    for (Elem g : members_of(maximal[i])) {
      if (q.rho[g] != kNone) throw PropertyViolation("maximal cosets overlap at " + L.label(g));
      q.rho[g] = static_cast<Elem>(i);
    }
  for (Elem g = 0; g < n; ++g)
    if (q.rho[g] == kNone) throw PropertyViolation("maximal cosets do not cover " + L.label(g));
  q.blocks = maximal;

  const PGroup& S = L.S();
  // Sbar: images of S, ordered by coset index
  std::vector<Elem> sbar_elems;
  for (std::uint8_t x = 0; x < S.order(); ++x) sbar_elems.push_back(q.rho[L.s_elem(x)]);
  std::sort(sbar_elems.begin(), sbar_elems.end());
  sbar_elems.erase(std::unique(sbar_elems.begin(), sbar_elems.end()), sbar_elems.end());
  std::vector<int> block_to_sbar(m, -1);
  for (std::size_t i = 0; i < sbar_elems.size(); ++i) block_to_sbar[sbar_elems[i]] = static_cast<int>(i);
  const std::size_t k = sbar_elems.size();
  q.sigma.img.resize(S.order());
  for (std::uint8_t x = 0; x < S.order(); ++x) q.sigma.img[x] = static_cast<std::uint8_t>(block_to_sbar[q.rho[L.s_elem(x)]]);
  std::vector<Elem> stable(k * k, kNone);
  for (std::uint8_t x = 0; x < S.order(); ++x)
    for (std::uint8_t y = 0; y < S.order(); ++y) {
      auto& e = stable[q.sigma.img[x] * k + q.sigma.img[y]];
      Elem v = q.sigma.img[S.mul(x, y)];
      if (e != kNone && e != v) throw PropertyViolation("image of S is not well defined");
      e = v;
    }
  std::vector<std::string> slabels;
  for (auto b : sbar_elems) slabels.push_back(L.label(static_cast<Elem>(maximal[b].find_first())) + "N");

  LocalityData d;
  d.p = L.p();
  d.S = std::make_shared<PGroup>(FiniteGroup::from_table(k, std::move(stable), slabels), L.p());
  for (auto b : sbar_elems) d.s_elems.push_back(b);
  for (SubMask P : L.delta()) d.delta.push_back(q.sigma.image_of(P));
  d.inverse.assign(m, kNone);
  for (Elem g = 0; g < n; ++g) {
    auto& e = d.inverse[q.rho[g]];
    if (e != kNone && e != q.rho[L.inverse(g)]) throw PropertyViolation("quotient inversion not well defined");
    e = q.rho[L.inverse(g)];
  }
  d.table.assign(m * m, kNone);
  for (Elem f = 0; f < n; ++f)
    for (Elem g = 0; g < n; ++g) {
      Elem c = L.mul(f, g);
      if (c == kNone) continue;
      auto& e = d.table[q.rho[f] * m + q.rho[g]];
      if (e != kNone && e != q.rho[c])
        throw PropertyViolation("quotient product depends on representatives at (" + L.label(f) + ", " + L.label(g) + ")");
      e = q.rho[c];
    }
  // conjugation maps on Sbar from domain triples (a, b, c) with rho(a) = rho(c)^-1 and b over Sbar
  d.conj.assign(m, ConjMap{});
  for (auto& c : d.conj) c.fill(kNoImage);
  std::vector<Elem> over_s;
  for (Elem b = 0; b < n; ++b)
    if (block_to_sbar[q.rho[b]] >= 0) over_s.push_back(b);
  for (Elem c = 0; c < n; ++c) {
    Elem cinv_block = d.inverse[q.rho[c]];
    for (Elem a : members_of(maximal[cinv_block]))
      for (Elem b : over_s) {
        auto r = L.try_product({a, b, c});
        if (!r) continue;
        int img = block_to_sbar[q.rho[*r]];
        if (img < 0) continue;
        auto& e = d.conj[q.rho[c]][block_to_sbar[q.rho[b]]];
        if (e != kNoImage && e != img) throw PropertyViolation("quotient conjugation not well defined");
        e = static_cast<std::uint8_t>(img);
      }
  }
  for (std::size_t i = 0; i < m; ++i) d.labels.push_back(L.label(static_cast<Elem>(maximal[i].find_first())) + "N");
  d.provenance = "quotient(" + L.provenance() + ")";
  q.lbar = std::make_shared<Locality>(std::move(d));
  return q;
}

ThetaResult theta_quotient(const Locality& L) {
  FusionSystem F = fusion_of(L);
  ClassSets cs = class_sets(F);
  for (SubMask P : cs.cr)
    if (!L.in_delta(P)) throw InputError("theta quotient needs every centric radical subgroup to be an object");
  std::set<SubMask> q(cs.q.begin(), cs.q.end());
  for (SubMask P : L.delta())
    if (!q.count(P)) throw InputError("theta quotient needs every object to be quasicentric");
  ElemSet theta = L.empty_set();
  for (SubMask P : L.delta()) {
    std::vector<Elem> embed;
    FiniteGroup C = group_of(L, centralizer_in(L, P), &embed);
    for (Elem e : o_pprime_core(C, L.p()).members()) theta.set(embed[e]);
  }
  if (!is_partial_normal(L, theta)) throw PropertyViolation("theta " + set_string(L, theta) + " is not partial normal");
  ThetaResult r{theta, coset_partition(L, theta)};
  if (!is_proper(*r.quotient.lbar).proper()) throw PropertyViolation("theta quotient is not proper");
  if (!fusion_equal_via(r.quotient.sigma, F, fusion_of(*r.quotient.lbar)))
    throw PropertyViolation("theta quotient changed the fusion system");
  return r;
}

SubMask o_p_locality(const Locality& L) {
  const PGroup& S = L.S();
  for (SubMask T : S.subgroups()) {
    if (S.normalizer(S.all(), T) != S.all()) continue;
    if (normalizer_in(L, T).count() == L.size()) return T;
  }
  return PGroup::trivial();
}

ElemSet product_set(const Locality& L, const ElemSet& M, const ElemSet& N) {
  ElemSet out = L.empty_set();
  auto n = members_of(N);
  for (Elem a : members_of(M))
    for (Elem b : n)
      if (Elem c = L.mul(a, b); c != kNone) out.set(c);
  return out;
}

ElemSet product_partial_normal(const Locality& L, const ElemSet& M, const ElemSet& N) {
  if (!is_partial_normal(L, M) || !is_partial_normal(L, N)) throw InputError("product of subsets that are not partial normal");
  ElemSet P = product_set(L, M, N);
  if (!is_partial_normal(L, P)) throw PropertyViolation("product of partial normal subgroups is not partial normal");
  return P;
}

ElemSet o_p_of(const Locality& L, const ElemSet& N, const std::vector<ElemSet>* normals) {
  if (!is_partial_normal(L, N)) throw InputError("O^p of a subset that is not partial normal");
  std::vector<ElemSet> own;
  if (!normals) normals = &(own = all_partial_normal_subgroups(L));
  ElemSet T = N & L.s_set();
  ElemSet r = L.full_set();
  for (const auto& K : *normals)
    if (product_set(L, K, T) == N) r &= K;
  if (product_set(L, r, T) != N) throw PropertyViolation("O^p(N) does not satisfy O^p(N)T = N");
  return r;
}

ElemSet o_pprime_of(const Locality& L, const ElemSet& N, const std::vector<ElemSet>* normals) {
  if (!is_partial_normal(L, N)) throw InputError("O^p' of a subset that is not partial normal");
  std::vector<ElemSet> own;
  if (!normals) normals = &(own = all_partial_normal_subgroups(L));
  ElemSet T = N & L.s_set();
  ElemSet r = L.full_set();
  for (const auto& K : *normals)
    if (T.is_subset_of(K)) r &= K;
  if (!T.is_subset_of(r) || !is_partial_normal(L, r)) throw PropertyViolation("O^p'(N) is not a partial normal subgroup containing T");
  return r;
}

}  // namespace llab
