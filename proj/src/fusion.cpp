#include "llab/fusion.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "llab/errors.hpp"

namespace llab {

namespace {

bool same_group(const PGroup& a, const PGroup& b) {
  if (&a == &b) return true;
  if (a.order() != b.order()) return false;
  for (std::uint8_t x = 0; x < a.order(); ++x)
    for (std::uint8_t y = 0; y < a.order(); ++y)
      if (a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

void sort_unique(std::vector<FHom>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<std::uint8_t> bits(SubMask m) {
  std::vector<std::uint8_t> out;
  for (std::uint8_t i = 0; i < 64; ++i)
    if (m >> i & 1) out.push_back(i);
  return out;
}

}  // namespace

SubMask FHom::image() const {
  SubMask r = 0;
  for (std::uint8_t i = 0; i < 64; ++i)
    if (source >> i & 1) r |= SubMask{1} << img[i];
  return r;
}

FHom identity_hom(SubMask P) {
  FHom f;
  f.source = P;
  f.img.fill(kNoImage);
  for (std::uint8_t i = 0; i < 64; ++i)
    if (P >> i & 1) f.img[i] = i;
  return f;
}

FHom conjugation_hom(const PGroup& S, SubMask P, std::uint8_t g) {
  FHom f;
  f.source = P;
  f.img.fill(kNoImage);
  for (std::uint8_t i = 0; i < S.order(); ++i)
    if (P >> i & 1) f.img[i] = static_cast<std::uint8_t>(S.group().conj(i, g));
  return f;
}

FHom restrict_hom(const FHom& f, SubMask P) {
  if (!mask_le(P, f.source)) throw InputError("restriction to a subgroup outside the source");
  FHom r;
  r.source = P;
  r.img.fill(kNoImage);
  for (std::uint8_t i = 0; i < 64; ++i)
    if (P >> i & 1) r.img[i] = f.img[i];
  return r;
}

FHom compose_hom(const FHom& f, const FHom& g) {
  if (!mask_le(f.image(), g.source)) throw InputError("composition of non-composable maps");
  FHom r;
  r.source = f.source;
  r.img.fill(kNoImage);
  for (std::uint8_t i = 0; i < 64; ++i)
    if (f.source >> i & 1) r.img[i] = g.img[f.img[i]];
  return r;
}

FHom inverse_hom(const FHom& f) {
  FHom r;
  r.source = f.image();
  r.img.fill(kNoImage);
  for (std::uint8_t i = 0; i < 64; ++i)
    if (f.source >> i & 1) r.img[f.img[i]] = i;
  return r;
}

bool is_injective_hom(const PGroup& S, const FHom& f) {
  if (!S.is_subgroup(f.source)) return false;
  auto xs = bits(f.source);
  SubMask seen = 0;
  for (auto x : xs) {
    if (f.img[x] >= S.order() || (seen >> f.img[x] & 1)) return false;
    seen |= SubMask{1} << f.img[x];
    for (auto y : xs)
      if (f.img[S.mul(x, y)] != S.mul(f.img[x], f.img[y])) return false;
  }
  return true;
}

FusionSystem FusionSystem::generated(std::shared_ptr<const PGroup> s, SubMask base, const std::vector<FHom>& gens) {
  if (!s->is_subgroup(base)) throw InputError("fusion base is not a subgroup");
  std::vector<FHom> all;
  for (const auto& g : gens) {
    if (!mask_le(g.source, base) || !mask_le(g.image(), base)) throw InputError("generator leaves the base");
    if (!is_injective_hom(*s, g)) throw InputError("generator is not an injective homomorphism");
    all.push_back(g);
    all.push_back(inverse_hom(g));
  }
  for (auto b : bits(base)) all.push_back(conjugation_hom(*s, base, b));
  sort_unique(all);

  FusionSystem F;
  F.s_ = s;
  F.base_ = base;
  F.table_.assign(s->subgroups().size(), {});
  std::size_t total = 0;
  for (SubMask P : s->subgroups_of(base)) {
    std::set<FHom> seen{identity_hom(P)};
    std::deque<FHom> queue{identity_hom(P)};
    while (!queue.empty()) {
      FHom f = queue.front();
      queue.pop_front();
      SubMask im = f.image();
      for (const auto& g : all) {
        if (!mask_le(im, g.source)) continue;
        FHom h = compose_hom(f, g);
        if (seen.insert(h).second) queue.push_back(h);
      }
    }
    total += seen.size();
    if (total > caps().stored_maps) throw CapError("stored map count exceeds cap");
    F.table_[s->index(P)].assign(seen.begin(), seen.end());
  }
  return F;
}

FusionSystem FusionSystem::trivial(std::shared_ptr<const PGroup> s, SubMask base) {
  return generated(std::move(s), base, {});
}

FusionSystem FusionSystem::from_table(std::shared_ptr<const PGroup> s, SubMask base, std::vector<std::vector<FHom>> table) {
  FusionSystem F;
  F.s_ = std::move(s);
  F.base_ = base;
  F.table_ = std::move(table);
  F.table_.resize(F.s_->subgroups().size());
  for (auto& v : F.table_) sort_unique(v);
  return F;
}

const std::vector<FHom>& FusionSystem::homs(SubMask P) const {
  if (!mask_le(P, base_)) throw InputError("subgroup outside the fusion base");
  return table_[s_->index(P)];
}

std::vector<FHom> FusionSystem::homs(SubMask P, SubMask Q) const {
  std::vector<FHom> out;
  for (const auto& f : homs(P))
    if (mask_le(f.image(), Q)) out.push_back(f);
  return out;
}

bool FusionSystem::contains(const FHom& f) const {
  if (!mask_le(f.source, base_) || !s_->is_subgroup(f.source)) return false;
  const auto& v = homs(f.source);
  return std::binary_search(v.begin(), v.end(), f);
}

std::size_t FusionSystem::map_count() const {
  std::size_t n = 0;
  for (const auto& v : table_) n += v.size();
  return n;
}

bool FusionSystem::operator==(const FusionSystem& o) const {
  if (!same_group(*s_, *o.s_) || base_ != o.base_) return false;
  for (SubMask P : subgroups())
    if (homs(P) != o.homs(P)) return false;
  return true;
}

std::vector<SubMask> conjugates(const FusionSystem& F, SubMask P) {
  std::set<SubMask> out;
  for (const auto& f : F.homs(P)) out.insert(f.image());
  std::vector<SubMask> v(out.begin(), out.end());
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

bool is_fully_normalized(const FusionSystem& F, SubMask P) {
  int n = mask_order(F.group().normalizer(F.base(), P));
  for (SubMask Q : conjugates(F, P))
    if (mask_order(F.group().normalizer(F.base(), Q)) > n) return false;
  return true;
}

bool is_fully_centralized(const FusionSystem& F, SubMask P) {
  int n = mask_order(F.group().centralizer(F.base(), P));
  for (SubMask Q : conjugates(F, P))
    if (mask_order(F.group().centralizer(F.base(), Q)) > n) return false;
  return true;
}

FusionSystem normalizer_system(const FusionSystem& F, SubMask U) {
  const PGroup& S = F.group();
  SubMask nb = S.normalizer(F.base(), U);
  std::vector<std::vector<FHom>> table(S.subgroups().size());
  for (SubMask P : S.subgroups_of(nb)) {
    auto& out = table[S.index(P)];
    for (const auto& f : F.homs(S.join(P, U))) {
      if (restrict_hom(f, U).image() != U) continue;
      FHom r = restrict_hom(f, P);
      if (mask_le(r.image(), nb)) out.push_back(r);
    }
  }
  return FusionSystem::from_table(F.group_ptr(), nb, std::move(table));
}

FusionSystem centralizer_system(const FusionSystem& F, SubMask U) {
  const PGroup& S = F.group();
  SubMask cb = S.centralizer(F.base(), U);
  FHom idU = identity_hom(U);
  std::vector<std::vector<FHom>> table(S.subgroups().size());
  for (SubMask P : S.subgroups_of(cb)) {
    auto& out = table[S.index(P)];
    for (const auto& f : F.homs(S.join(P, U))) {
      if (!(restrict_hom(f, U) == idU)) continue;
      FHom r = restrict_hom(f, P);
      if (mask_le(r.image(), cb)) out.push_back(r);
    }
  }
  return FusionSystem::from_table(F.group_ptr(), cb, std::move(table));
}

bool is_weakly_closed(const FusionSystem& F, SubMask T) {
  auto c = conjugates(F, T);
  return c.size() == 1 && c[0] == T;
}

bool is_strongly_closed(const FusionSystem& F, SubMask T) {
  for (SubMask X : F.group().subgroups_of(T))
    for (SubMask Y : conjugates(F, X))
      if (!mask_le(Y, T)) return false;
  return true;
}

bool is_normal_in(const FusionSystem& F, SubMask T) {
  if (F.group().normalizer(F.base(), T) != F.base()) return false;
  return normalizer_system(F, T) == F;
}

SubMask o_p_fusion(const FusionSystem& F) {
  std::optional<SubMask> found;
  for (SubMask T : F.subgroups()) {
    if (found && mask_order(T) < mask_order(*found)) break;
    if (!is_normal_in(F, T)) continue;
    if (found) throw PropertyViolation("two distinct largest normal subgroups of a fusion system");
    found = T;
  }
  return *found;
}

std::vector<FHom> automorphisms(const FusionSystem& F, SubMask P) {
  std::vector<FHom> out;
  for (const auto& f : F.homs(P))
    if (f.image() == P) out.push_back(f);
  return out;
}

namespace {

bool standard_radical(const FusionSystem& F, SubMask P) {
  auto aut = automorphisms(F, P);
  FHom id = identity_hom(P);
  std::sort(aut.begin(), aut.end(), [&](const FHom& a, const FHom& b) {
    if ((a == id) != (b == id)) return a == id;
    return a < b;
  });
  std::size_t n = aut.size();
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FHom c = compose_hom(aut[i], aut[j]);
      table[i * n + j] = static_cast<Elem>(std::find(aut.begin(), aut.end(), c) - aut.begin());
    }
  FiniteGroup A = FiniteGroup::from_table(n, std::move(table));
  Subgroup O = big_o_p(A, F.group().p());
  std::set<FHom> inn;
  for (auto x : bits(P)) inn.insert(conjugation_hom(F.group(), P, x));
  std::set<FHom> op;
  for (Elem e : O.members()) op.insert(aut[e]);
  return inn == op;
}

}  // namespace

const std::vector<SubMask>& Classifier::conjugates_of(SubMask P) {
  auto it = conj_.find(P);
  if (it == conj_.end()) it = conj_.emplace(P, conjugates(F_, P)).first;
  return it->second;
}

bool Classifier::fully_normalized(SubMask P) {
  const PGroup& S = F_.group();
  int n = mask_order(S.normalizer(F_.base(), P));
  for (SubMask Q : conjugates_of(P))
    if (mask_order(S.normalizer(F_.base(), Q)) > n) return false;
  return true;
}

bool Classifier::fully_centralized(SubMask P) {
  const PGroup& S = F_.group();
  int n = mask_order(S.centralizer(F_.base(), P));
  for (SubMask Q : conjugates_of(P))
    if (mask_order(S.centralizer(F_.base(), Q)) > n) return false;
  return true;
}

SubMask Classifier::o_p_normalizer(SubMask Q) {
  auto it = op_norm_.find(Q);
  if (it != op_norm_.end()) return it->second;
  SubMask r = o_p_fusion(normalizer_system(F_, Q));
  op_norm_.emplace(Q, r);
  return r;
}

bool Classifier::centric(SubMask P) {
  auto it = centric_.find(P);
  if (it != centric_.end()) return it->second;
  bool ok = true;
  for (SubMask Q : conjugates_of(P))
    if (!mask_le(F_.group().centralizer(F_.base(), Q), Q)) ok = false;
  for (SubMask Q : conjugates_of(P)) centric_[Q] = ok;
  return ok;
}

bool Classifier::radical(SubMask P) {
  for (SubMask Q : conjugates_of(P))
    if (fully_normalized(Q) && o_p_normalizer(Q) == Q) return true;
  return false;
}

bool Classifier::quasicentric(SubMask P) {
  auto it = quasi_.find(P);
  if (it != quasi_.end()) return it->second;
  bool ok = false;
  for (SubMask Q : conjugates_of(P)) {
    if (!fully_centralized(Q)) continue;
    FusionSystem C = centralizer_system(F_, Q);
    if (C == FusionSystem::trivial(F_.group_ptr(), C.base())) {
      ok = true;
      break;
    }
  }
  for (SubMask Q : conjugates_of(P)) quasi_[Q] = ok;
  return ok;
}

bool Classifier::subcentric(SubMask P) {
  for (SubMask Q : conjugates_of(P))
    if (fully_normalized(Q) && centric(o_p_normalizer(Q))) return true;
  return false;
}

ClassFlags Classifier::classify(SubMask P) {
  ClassFlags f;
  f.centric = centric(P);
  f.radical = radical(P);
  f.quasicentric = quasicentric(P);
  f.subcentric = subcentric(P);
  f.fully_normalized = fully_normalized(P);
  f.fully_centralized = fully_centralized(P);
  f.standard_radical = standard_radical(F_, P);
  return f;
}

ClassFlags classify(const FusionSystem& F, SubMask P) {
  Classifier c(F);
  return c.classify(P);
}

ClassSets class_sets(const FusionSystem& F) {
  Classifier c(F);
  ClassSets out;
  for (SubMask P : F.subgroups()) {
    bool cen = c.centric(P);
    if (cen) out.c.push_back(P);
    if (cen && c.radical(P)) out.cr.push_back(P);
    if (c.quasicentric(P)) out.q.push_back(P);
    if (c.subcentric(P)) out.s.push_back(P);
  }
  return out;
}

bool is_f_invariant(const FusionSystem& F, const std::vector<SubMask>& gamma) {
  std::set<SubMask> g(gamma.begin(), gamma.end());
  for (SubMask P : gamma) {
    if (!F.group().is_subgroup(P) || !mask_le(P, F.base())) return false;
    for (SubMask Q : conjugates(F, P))
      if (!g.count(Q)) return false;
  }
  return true;
}

bool is_f_closed(const FusionSystem& F, const std::vector<SubMask>& gamma) {
  if (gamma.empty() || !is_f_invariant(F, gamma)) return false;
  std::set<SubMask> g(gamma.begin(), gamma.end());
  for (SubMask P : gamma)
    for (SubMask Q : F.subgroups())
      if (mask_le(P, Q) && !g.count(Q)) return false;
  return true;
}

std::vector<SubMask> f_closure(const FusionSystem& F, const std::vector<SubMask>& gamma) {
  std::set<SubMask> conj;
  for (SubMask P : gamma)
    for (SubMask Q : conjugates(F, P)) conj.insert(Q);
  std::vector<SubMask> out;
  for (SubMask Q : F.subgroups())
    for (SubMask P : conj)
      if (mask_le(P, Q)) {
        out.push_back(Q);
        break;
      }
  return out;
}

bool is_inductive(const FusionSystem& F, const std::vector<SubMask>& gamma) {
  const PGroup& S = F.group();
  for (SubMask U : gamma) {
    SubMask nu = S.normalizer(F.base(), U);
    for (SubMask V : conjugates(F, U)) {
      if (!is_fully_normalized(F, V)) continue;
      bool found = false;
      for (const auto& f : F.homs(nu))
        if (restrict_hom(f, U).image() == V) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  }
  return true;
}

bool is_inductive(const FusionSystem& F) { return is_inductive(F, F.subgroups()); }

bool is_cr_generated(const FusionSystem& F) {
  std::vector<FHom> gens;
  for (SubMask R : class_sets(F).cr) {
    auto a = automorphisms(F, R);
    gens.insert(gens.end(), a.begin(), a.end());
  }
  return FusionSystem::generated(F.group_ptr(), F.base(), gens) == F;
}

SubMask good_conjugate(const FusionSystem& F, SubMask U) {
  Classifier c(F);
  for (SubMask V : c.conjugates_of(U))
    if (c.fully_normalized(V) && c.fully_normalized(c.o_p_normalizer(V))) return V;
  throw PropertyViolation("no conjugate V with V and O_p(N_F(V)) fully normalized");
}

SubMask GroupMap::kernel(const PGroup& from) const {
  SubMask k = 0;
  for (std::uint8_t i = 0; i < from.order(); ++i)
    if (img[i] == 0) k |= SubMask{1} << i;
  return k;
}

SubMask GroupMap::image_of(SubMask P) const {
  SubMask r = 0;
  for (std::uint8_t i = 0; i < img.size(); ++i)
    if (P >> i & 1) r |= SubMask{1} << img[i];
  return r;
}

SubMask GroupMap::preimage_of(SubMask Q, const PGroup& from) const {
  SubMask r = 0;
  for (std::uint8_t i = 0; i < from.order(); ++i)
    if (Q >> img[i] & 1) r |= SubMask{1} << i;
  return r;
}

bool CheckReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed; });
}

void CheckReport::add(std::string name, bool ok, std::string detail) {
  items.push_back({std::move(name), ok, std::move(detail)});
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  for (const auto& i : items) {
    os << (i.passed ? "ok   " : "FAIL ") << i.name;
    if (!i.detail.empty()) os << ": " << i.detail;
    os << '\n';
  }
  return os.str();
}

namespace {

// induced map on images; nullopt when not well defined
std::optional<FHom> push_hom(const GroupMap& lambda, const FHom& f) {
  FHom r;
  r.source = lambda.image_of(f.source);
  r.img.fill(kNoImage);
  for (std::uint8_t i = 0; i < 64; ++i) {
    if (!(f.source >> i & 1)) continue;
    auto a = lambda.img[i], b = lambda.img[f.img[i]];
    if (r.img[a] != kNoImage && r.img[a] != b) return std::nullopt;
    r.img[a] = b;
  }
  return r;
}

}  // namespace

CheckReport quotient_fusion_check(const GroupMap& lambda, const FusionSystem& F, const FusionSystem& Fbar,
                                  const std::vector<SubMask>* delta, const std::vector<SubMask>* deltabar) {
  CheckReport rep;
  const PGroup& S = F.group();
  const PGroup& Sb = Fbar.group();
  {
    bool hom = lambda.img.size() >= S.order();
    for (std::uint8_t a = 0; hom && a < S.order(); ++a)
      for (std::uint8_t b = 0; hom && b < S.order(); ++b)
        if (lambda.img[S.mul(a, b)] != Sb.mul(lambda.img[a], lambda.img[b])) hom = false;
    rep.add("homomorphism", hom);
    if (!hom) return rep;
    rep.add("surjective onto base", lambda.image_of(F.base()) == Fbar.base());
  }
  SubMask K = lambda.kernel(S);

  bool preserving = true;
  std::string witness;
  for (SubMask P : F.subgroups())
    for (const auto& f : F.homs(P)) {
      auto g = push_hom(lambda, f);
      if (!g || !Fbar.contains(*g)) {
        preserving = false;
        witness = hom_string(S, f);
        break;
      }
    }
  rep.add("fusion-preserving", preserving, witness);
  if (!preserving) throw PropertyViolation("map is not fusion-preserving: " + witness);

  bool surj = true;
  for (SubMask X : F.subgroups()) {
    if (!mask_le(K, X)) continue;
    std::set<FHom> induced;
    for (const auto& f : F.homs(X)) induced.insert(*push_hom(lambda, f));
    for (const auto& g : Fbar.homs(lambda.image_of(X)))
      if (!induced.count(g)) {
        surj = false;
        witness = hom_string(Sb, g);
      }
  }
  rep.add("hom-sets surject over kernel", surj, surj ? "" : witness);

  Classifier c(F), cb(Fbar);
  bool fn = true, opn = true, cen = true, cr = true;
  for (SubMask P : F.subgroups()) {
    if (!mask_le(K, P)) continue;
    SubMask Pb = lambda.image_of(P);
    if (c.fully_normalized(P) != cb.fully_normalized(Pb)) fn = false;
    if (!mask_le(lambda.image_of(c.o_p_normalizer(P)), cb.o_p_normalizer(Pb))) opn = false;
    if (cb.centric(Pb) && !c.centric(P)) cen = false;
    if (cb.centric(Pb) && cb.radical(Pb) && !(c.centric(P) && c.radical(P))) cr = false;
  }
  rep.add("full normality corresponds", fn);
  rep.add("O_p of normalizers maps into O_p", opn);
  rep.add("centric preimages", cen);
  rep.add("centric radical preimages", cr);

  if (delta && deltabar) {
    std::set<SubMask> d(delta->begin(), delta->end()), db(deltabar->begin(), deltabar->end());
    bool has = true;
    for (SubMask P : class_sets(F).cr)
      if (!d.count(P)) has = false;
    bool ok = true;
    if (has)
      for (SubMask P : class_sets(Fbar).cr)
        if (!db.count(P)) ok = false;
    rep.add("centric radicals inside objects", ok);
  }
  return rep;
}

bool fusion_equal_via(const GroupMap& sigma, const FusionSystem& F, const FusionSystem& G) {
  if (F.group().order() != G.group().order()) return false;
  if (sigma.image_of(F.base()) != G.base() || mask_order(F.base()) != mask_order(G.base())) return false;
  std::size_t count = 0;
  for (SubMask P : F.subgroups())
    for (const auto& f : F.homs(P)) {
      auto g = push_hom(sigma, f);
      if (!g || !G.contains(*g)) return false;
      ++count;
    }
  return count == G.map_count();
}

std::string hom_string(const PGroup& S, const FHom& f) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto x : S.generators(f.source)) {
    if (!first) os << ", ";
    os << S.group().label(x) << "->" << S.group().label(f.img[x]);
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace llab
