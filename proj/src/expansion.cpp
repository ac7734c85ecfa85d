#include "llab/expansion.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "llab/errors.hpp"

namespace llab {

namespace {

ConjMap compose_conj(const ConjMap& a, const ConjMap& b, std::size_t k) {
  ConjMap c;
  c.fill(kNoImage);
  for (std::size_t x = 0; x < k; ++x)
    if (a[x] != kNoImage) c[x] = b[a[x]];
  return c;
}

SubMask conj_domain(const ConjMap& c, std::size_t k) {
  SubMask m = 0;
  for (std::size_t x = 0; x < k; ++x)
    if (c[x] != kNoImage) m |= SubMask{1} << x;
  return m;
}

FHom restricted_hom(const Locality& L, Elem g, SubMask P) {
  FHom f;
  f.source = P;
  f.img.fill(kNoImage);
  for (std::uint8_t x = 0; x < L.S().order(); ++x)
    if (P >> x & 1) f.img[x] = L.conj(g)[x];
  return f;
}

Elem must_product(const Locality& L, const Word& w, const char* what) {
  auto r = L.try_product(w);
  if (!r) throw PropertyViolation(std::string(what) + ": word " + word_string(w) + " is not in the domain");
  return *r;
}

std::vector<Elem> y_set(const Locality& L, SubMask R, SubMask V) {
  const SubMask nv = L.S().normalizer(L.S().all(), V);
  std::vector<Elem> out;
  for (Elem y = 0; y < L.size(); ++y) {
    if (!mask_le(R, L.s_g(y)) || L.conj_image(R, y) != V) continue;
    if (!mask_le(nv, L.s_g(L.inverse(y)))) continue;
    out.push_back(y);
  }
  return out;
}

}  // namespace

CheckReport check_expansion_hypothesis(const Locality& L, SubMask R, const FusionSystem& F) {
  CheckReport rep;
  const PGroup& S = L.S();
  if (!S.is_subgroup(R)) throw InputError("R is not a subgroup of S");
  if (L.in_delta(R)) {
    rep.add("R already an object", true);
    return rep;
  }
  std::string missing;
  for (SubMask P : S.subgroups())
    if (P != R && mask_le(R, P) && !L.in_delta(P)) missing += (missing.empty() ? "" : "; ") + S.describe(P);
  rep.add("strict overgroups of R are objects", missing.empty(), missing);

  rep.add("R fully normalized", is_fully_normalized(F, R), S.describe(R));
  FusionSystem NF = normalizer_system(F, R);
  SubMask Q = o_p_fusion(NF);
  rep.add("O_p(N_F(R)) fully normalized", is_fully_normalized(F, Q), S.describe(Q));

  ElemSet M = normalizer_in(L, R);
  bool grp = is_group_in(L, M);
  rep.add("N_L(R) is a subgroup", grp, set_string(L, M));
  if (grp) {
    const SubMask nsr = S.normalizer(S.all(), R);
    std::set<FHom> gens;
    for (Elem g : members_of(M)) gens.insert(restricted_hom(L, g, nsr & L.s_g(g)));
    FusionSystem gen = FusionSystem::generated(L.S_ptr(), nsr, std::vector<FHom>(gens.begin(), gens.end()));
    rep.add("N_L(R) realizes N_F(R)", gen == NF);
  }
  std::string empty;
  for (SubMask V : conjugates(F, R))
    if (y_set(L, R, V).empty()) empty += (empty.empty() ? "" : "; ") + S.describe(V);
  rep.add("every Y_V nonempty", empty.empty(), empty);
  return rep;
}

// ---- seed

ExpansionSeed::ExpansionSeed(LocalityPtr L, SubMask R, const FusionSystem& F)
    : L_(std::move(L)), R_(R), r_class_(conjugates(F, R)) {
  M_ = normalizer_in(*L_, R_);
  for (SubMask V : r_class_) {
    auto ys = y_set(*L_, R_, V);
    if (ys.empty()) throw PropertyViolation("Y_V is empty for V = " + L_->S().describe(V));
    Y_[V] = std::move(ys);
  }
  if (Y_.at(R_).front() != 0) throw PropertyViolation("identity is not the chosen element of Y_R");
}

bool ExpansionSeed::in_r_class(SubMask U) const { return Y_.count(U) != 0; }

Elem ExpansionSeed::mul(Elem a, Elem b) const {
  Elem c = L_->mul(a, b);
  if (c == kNone) throw PropertyViolation("product (" + L_->label(a) + ", " + L_->label(b) + ") undefined in the seed");
  return c;
}

SubMask ExpansionSeed::U_of(const PhiTriple& t) const { return L_->conj_image(R_, L_->inverse(t.x_inv)); }
SubMask ExpansionSeed::V_of(const PhiTriple& t) const { return L_->conj_image(R_, t.y); }

bool ExpansionSeed::in_phi(const PhiTriple& t) const {
  const Locality& L = *L_;
  if (t.x_inv >= L.size() || t.h >= L.size() || t.y >= L.size()) return false;
  if (!M_.test(t.h)) return false;
  Elem x = L.inverse(t.x_inv);
  if (!mask_le(R_, L.s_g(x)) || !mask_le(R_, L.s_g(t.y))) return false;
  SubMask U = L.conj_image(R_, x), V = L.conj_image(R_, t.y);
  if (!in_r_class(U) || !in_r_class(V)) return false;
  const auto& yu = Y_.at(U);
  const auto& yv = Y_.at(V);
  return std::binary_search(yu.begin(), yu.end(), x) && std::binary_search(yv.begin(), yv.end(), t.y);
}

bool ExpansionSeed::sim_related(const PhiTriple& a, const PhiTriple& b) const {
  if (U_of(a) != U_of(b) || V_of(a) != V_of(b)) return false;
  // (xbar x^-1) h = hbar (ybar y^-1), with a = (x^-1, h, y) and b = (xbar^-1, hbar, ybar)
  Elem xb = L_->inverse(b.x_inv);
  Elem lhs = mul(mul(xb, a.x_inv), a.h);
  Elem rhs = mul(b.h, mul(b.y, L_->inverse(a.y)));
  return lhs == rhs;
}

PhiTriple ExpansionSeed::canonical_of(SubMask U, SubMask V, Elem h) const {
  return {L_->inverse(y(U)), h, y(V)};
}

PhiTriple ExpansionSeed::canonical(const PhiTriple& t) const {
  SubMask U = U_of(t), V = V_of(t);
  Elem h = mul(mul(mul(y(U), t.x_inv), t.h), mul(t.y, L_->inverse(y(V))));
  if (!M_.test(h)) throw PropertyViolation("canonical form left N_L(R)");
  return canonical_of(U, V, h);
}

PhiTriple ExpansionSeed::embedded_triple(Elem g, SubMask U) const {
  SubMask V = L_->conj_image(U, g);
  Elem h = must_product(*L_, {y(U), g, L_->inverse(y(V))}, "embedded triple");
  return canonical_of(U, V, h);
}

std::vector<PhiTriple> ExpansionSeed::all_triples() const {
  std::vector<PhiTriple> out;
  auto ms = members_of(M_);
  for (SubMask U : r_class_)
    for (SubMask V : r_class_)
      for (Elem x : Y_.at(U))
        for (Elem h : ms)
          for (Elem y : Y_.at(V)) out.push_back({L_->inverse(x), h, y});
  return out;
}

// ---- expanded locality

ExpandedLocality::ExpandedLocality(LocalityPtr L, SubMask R, const FusionSystem& F, bool require_proper)
    : R_(R), require_proper_(require_proper) {
  n0_ = L->size();
  if (L->in_delta(R)) {
    plus_ = L;
    classes_.resize(n0_);
    for (Elem g = 0; g < n0_; ++g) classes_[g].g = g;
    post_.add("no-op: R already an object", true);
    return;
  }
  CheckReport hyp = check_expansion_hypothesis(*L, R, F);
  if (!hyp.passed()) throw PropertyViolation("expansion hypothesis fails: " + hyp.summary());
  seed_ = std::make_shared<ExpansionSeed>(std::move(L), R, F);
  build();
  verify(F);
}

void ExpandedLocality::build() {
  const Locality& L = seed_->L();
  const std::size_t k = L.S().order();
  classes_.resize(n0_);
  for (Elem g = 0; g < n0_; ++g) classes_[g].g = g;
  for (SubMask U : seed_->r_class())
    for (SubMask V : seed_->r_class())
      for (Elem h : members_of(seed_->M())) {
        if (L.in_domain(seed_->word(seed_->canonical_of(U, V, h)))) continue;
        TildeClass c;
        c.kind = TildeClass::Kind::pure;
        c.U = U;
        c.V = V;
        c.h = h;
        pure_index_[{U, V, h}] = static_cast<Elem>(classes_.size());
        classes_.push_back(c);
      }
  const std::size_t n = classes_.size();

  LocalityData d;
  const LocalityData& ld = L.data();
  d.p = ld.p;
  d.S = ld.S;
  d.s_elems = ld.s_elems;
  d.delta = ld.delta;
  for (SubMask U : seed_->r_class()) d.delta.push_back(U);
  d.inverse = ld.inverse;
  d.conj = ld.conj;
  d.labels.resize(n0_);
  for (Elem g = 0; g < n0_; ++g) d.labels[g] = L.label(g);
  for (std::size_t i = n0_; i < n; ++i) {
    const TildeClass& c = classes_[i];
    PhiTriple t = seed_->canonical_of(c.U, c.V, c.h);
    d.inverse.push_back(pure_index_.at({c.V, c.U, L.inverse(c.h)}));
    ConjMap m = compose_conj(compose_conj(L.conj(t.x_inv), L.conj(t.h), k), L.conj(t.y), k);
    if (conj_domain(m, k) != c.U)
      throw PropertyViolation("pure class " + std::to_string(i) + " has S_phi different from its endpoint U");
    d.conj.push_back(m);
    d.labels.push_back("[" + L.label(t.x_inv) + "," + L.label(t.h) + "," + L.label(t.y) + "]");
  }
  conj_ = d.conj;

  d.table.assign(n * n, kNone);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (auto r = pi_plus({a, b})) d.table[static_cast<std::size_t>(a) * n + b] = *r;
  d.provenance = "expansion(" + L.provenance() + ")";
  plus_ = std::make_shared<Locality>(std::move(d));
}

bool ExpandedLocality::in_delta_plus(SubMask P) const {
  return seed_ ? seed_->L().in_delta(P) || seed_->in_r_class(P) : plus_->in_delta(P);
}

SubMask ExpandedLocality::word_s(const Word& w) const {
  const std::size_t k = base().S().order();
  ConjMap cur;
  cur.fill(kNoImage);
  for (std::size_t x = 0; x < k; ++x) cur[x] = static_cast<std::uint8_t>(x);
  for (Elem g : w)
    for (std::size_t x = 0; x < k; ++x)
      if (cur[x] != kNoImage) cur[x] = conj_[g][cur[x]];
  return conj_domain(cur, k);
}

Elem ExpandedLocality::class_of(SubMask U, SubMask V, Elem h) const {
  if (auto r = base().try_product(seed_->word(seed_->canonical_of(U, V, h)))) return *r;
  auto it = pure_index_.find({U, V, h});
  if (it == pure_index_.end()) throw PropertyViolation("no class for the given endpoints and h");
  return it->second;
}

Elem ExpandedLocality::approx_class(const PhiTriple& t) const {
  if (!seed_) throw InputError("no-op expansion has no triples");
  if (!seed_->in_phi(t)) throw InputError("triple is not in Phi");
  PhiTriple c = seed_->canonical(t);
  return class_of(seed_->U_of(c), seed_->V_of(c), c.h);
}

std::optional<Elem> ExpandedLocality::chain_value(const Word& w, SubMask U0) const {
  const Locality& L = base();
  SubMask U = U0;
  Elem acc = 0;
  for (Elem e : w) {
    Elem hi;
    if (e >= n0_) {
      const TildeClass& c = classes_[e];
      if (c.U != U) return std::nullopt;
      hi = c.h;
      U = c.V;
    } else {
      if (!mask_le(U, L.s_g(e))) return std::nullopt;
      SubMask V = L.conj_image(U, e);
      hi = seed_->embedded_triple(e, U).h;
      U = V;
    }
    acc = seed_->mul(acc, hi);
  }
  return class_of(U0, U, acc);
}

std::optional<Elem> ExpandedLocality::pi_plus(const Word& w) const {
  if (!seed_) return plus_->try_product(w);
  for (Elem e : w)
    if (e >= classes_.size()) return std::nullopt;
  SubMask s = word_s(w);
  if (!in_delta_plus(s)) return std::nullopt;
  bool embedded = std::all_of(w.begin(), w.end(), [&](Elem e) { return e < n0_; });
  if (base().in_delta(s)) {
    if (!embedded) throw PropertyViolation("word with a pure entry has S_w in the old object set: " + word_string(w));
    return base().try_product(w);
  }
  auto r = chain_value(w, s);
  if (!r) throw PropertyViolation("no aligned Gamma-form for a word of the domain: " + word_string(w));
  return r;
}

std::vector<PhiTriple> ExpandedLocality::representatives(Elem C) const {
  if (!seed_) throw InputError("no-op expansion has no triples");
  const Locality& L = base();
  std::vector<PhiTriple> out;
  auto emit = [&](SubMask U, SubMask V, auto h_of) {
    for (Elem x : seed_->Y(U))
      for (Elem y : seed_->Y(V)) out.push_back({L.inverse(x), h_of(x, y), y});
  };
  if (C >= n0_) {
    const TildeClass& c = classes_.at(C);
    Elem xu = seed_->y(c.U), yv = seed_->y(c.V);
    emit(c.U, c.V, [&](Elem x, Elem y) {
      return seed_->mul(seed_->mul(seed_->mul(x, L.inverse(xu)), c.h), seed_->mul(yv, L.inverse(y)));
    });
  } else {
    for (SubMask U : seed_->r_class()) {
      if (!mask_le(U, L.s_g(C))) continue;
      SubMask V = L.conj_image(U, C);
      emit(U, V, [&](Elem x, Elem y) { return must_product(L, {x, C, L.inverse(y)}, "representative"); });
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ExpandedLocality::embedded_meeting_phi() const {
  if (!seed_) return 0;
  std::size_t c = 0;
  for (Elem g = 0; g < n0_; ++g)
    for (SubMask U : seed_->r_class())
      if (mask_le(U, base().s_g(g))) {
        ++c;
        break;
      }
  return c;
}

std::optional<std::vector<PhiTriple>> ExpandedLocality::gamma_form(const Word& w) const {
  if (!seed_) return std::nullopt;
  for (Elem e : w)
    if (e >= classes_.size()) return std::nullopt;
  SubMask U = word_s(w);
  if (!seed_->in_r_class(U)) {
    // words of L with a larger S_w still have forms through any R-conjugate below S_w
    U = 0;
    for (SubMask V : seed_->r_class())
      if (mask_le(V, word_s(w))) {
        U = V;
        break;
      }
    if (!U) return std::nullopt;
  }
  std::vector<PhiTriple> out;
  for (Elem e : w) {
    if (e >= n0_) {
      const TildeClass& c = classes_[e];
      if (c.U != U) return std::nullopt;
      out.push_back(seed_->canonical_of(c.U, c.V, c.h));
      U = c.V;
    } else {
      if (!mask_le(U, base().s_g(e))) return std::nullopt;
      out.push_back(seed_->embedded_triple(e, U));
      U = base().conj_image(U, e);
    }
  }
  return out;
}

bool ExpandedLocality::is_gamma_form(const std::vector<PhiTriple>& g) const {
  if (!seed_) return false;
  Word flat;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!seed_->in_phi(g[i])) return false;
    if (i > 0 && seed_->V_of(g[i - 1]) != seed_->U_of(g[i])) return false;
    flat.insert(flat.end(), {g[i].x_inv, g[i].h, g[i].y});
  }
  SubMask s = base().s_w(flat);
  return std::any_of(seed_->r_class().begin(), seed_->r_class().end(), [&](SubMask U) { return mask_le(U, s); });
}

std::optional<Elem> ExpandedLocality::gamma_value(const std::vector<PhiTriple>& g) const {
  if (g.empty() || !is_gamma_form(g)) return std::nullopt;
  const Locality& L = base();
  Elem acc = g[0].h;
  for (std::size_t i = 1; i < g.size(); ++i) {
    auto k = L.try_product({g[i - 1].y, g[i].x_inv});
    if (!k || !seed_->M().test(*k)) return std::nullopt;
    acc = seed_->mul(seed_->mul(acc, *k), g[i].h);
  }
  return approx_class({g[0].x_inv, acc, g.back().y});
}

std::size_t ExpandedLocality::check_gamma_independence(const Word& w, std::size_t limit) const {
  if (!seed_) return 0;
  auto base_val = pi_plus(w);
  if (!base_val) throw InputError("word " + word_string(w) + " is not in the domain");
  const SubMask s = word_s(w);
  std::vector<std::vector<PhiTriple>> reps(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) reps[i] = representatives(w[i]);
  std::size_t count = 0;
  std::vector<PhiTriple> cur;
  std::function<void(std::size_t, SubMask)> rec = [&](std::size_t i, SubMask U) {
    if (count >= limit) return;
    if (i == w.size()) {
      auto v = gamma_value(cur);
      if (!v) throw PropertyViolation("aligned representatives of " + word_string(w) + " do not form a Gamma-form");
      if (*v != *base_val)
        throw PropertyViolation("product of " + word_string(w) + " depends on the Gamma-form: " + plus_->label(*v) +
                                " vs " + plus_->label(*base_val));
      ++count;
      return;
    }
    for (const PhiTriple& t : reps[i]) {
      if (seed_->U_of(t) != U) continue;
      cur.push_back(t);
      rec(i + 1, seed_->V_of(t));
      cur.pop_back();
      if (count >= limit) return;
    }
  };
  for (SubMask U0 : seed_->r_class())
    if (mask_le(U0, s)) rec(0, U0);
  return count;
}

SubMask ExpandedLocality::s_of_class(Elem C) const {
  if (!seed_ || C < n0_) return plus_->s_g(C);
  const TildeClass& c = classes_.at(C);
  const Locality& L = base();
  Elem Cinv = plus_->inverse(C);
  SubMask m = 0;
  for (std::uint8_t a = 0; a < L.S().order(); ++a) {
    auto v = chain_value({Cinv, L.s_elem(a), C}, c.V);
    if (v && *v < n0_ && L.s_ordinal(*v) >= 0) m |= SubMask{1} << a;
  }
  return m;
}

void ExpandedLocality::verify(const FusionSystem& F) {
  const Locality& L = base();
  const Locality& P = *plus_;
  bool same = true;
  for (Elem a = 0; a < n0_ && same; ++a)
    for (Elem b = 0; b < n0_; ++b)
      if (L.mul(a, b) != kNone && P.mul(a, b) != L.mul(a, b)) {
        same = false;
        break;
      }
  for (std::size_t i = n0_; i < classes_.size(); ++i)
    if (L.in_delta(P.s_g(static_cast<Elem>(i)))) same = false;
  post_.add("restriction to the old objects is the original locality", same);

  ElemSet np = normalizer_in(P, R_);
  bool nsame = true;
  for (Elem g = 0; g < P.size(); ++g)
    if (np.test(g) != (g < n0_ && seed_->M().test(g))) nsame = false;
  post_.add("N(R) unchanged", nsame);

  post_.add("fusion system unchanged", fusion_of(P) == F);

  std::string bad;
  for (std::size_t i = n0_; i < classes_.size(); ++i) {
    Elem C = static_cast<Elem>(i);
    const TildeClass& c = classes_[i];
    SubMask sc = s_of_class(C);
    bool ok = sc == c.U;
    for (std::uint8_t a = 0; ok && a < L.S().order(); ++a) {
      if (!(sc >> a & 1)) continue;
      auto v = chain_value({P.inverse(C), L.s_elem(a), C}, c.V);
      ok = v && L.s_ordinal(*v) == P.conj(C)[a];
    }
    if (!ok && bad.size() < 200) bad += P.label(C) + " ";
  }
  post_.add("S of each new class equals S of its triples", bad.empty(), bad);

  // product independence of the Gamma-form on pairs involving new classes
  std::size_t checked = 0;
  for (Elem a = 0; a < P.size() && checked < 64; ++a)
    for (Elem b = static_cast<Elem>(n0_); b < P.size() && checked < 64; ++b)
      if (P.mul(a, b) != kNone) {
        check_gamma_independence({a, b}, 8);
        ++checked;
      }
  post_.add("products independent of Gamma-form (sampled)", true, std::to_string(checked) + " pairs");

  if (require_proper_) post_.add("proper", is_proper(P, F).proper());
  if (!post_.passed()) throw PropertyViolation("expansion postcondition failed: " + post_.summary());
}

ExpandedPtr elementary_expand(LocalityPtr L, SubMask R, const FusionSystem& F) {
  return std::make_shared<ExpandedLocality>(std::move(L), R, F, true);
}

ExpandedPtr elementary_expand(LocalityPtr L, SubMask R) {
  FusionSystem F = fusion_of(*L);
  return elementary_expand(std::move(L), R, F);
}

// ---- iterated expansion

namespace {

void finish_expansion(Expansion& E) {
  ElemSet base = E.result->empty_set();
  for (Elem g = 0; g < E.base->size(); ++g) base.set(g);
  E.generated_by_base = generated_subgroup(*E.result, base).count() == E.result->size();
  if (!E.generated_by_base) throw PropertyViolation("expanded locality is not generated by the original locality");
}

}  // namespace

Expansion full_expand(LocalityPtr L, const std::vector<SubMask>& deltaplus) {
  FusionSystem F = fusion_of(*L);
  if (!is_proper(*L, F).proper()) throw InputError("full expansion needs a proper locality");
  std::set<SubMask> dp(deltaplus.begin(), deltaplus.end());
  for (SubMask P : L->delta())
    if (!dp.count(P)) throw InputError("target object set does not contain the object set");
  if (!is_f_closed(F, deltaplus)) throw InputError("target object set is not F-closed");
  auto s = class_sets(F).s;
  std::set<SubMask> sset(s.begin(), s.end());
  for (SubMask P : deltaplus)
    if (!sset.count(P)) throw InputError("target object " + L->S().describe(P) + " is not subcentric");

  Expansion E;
  E.base = L;
  LocalityPtr cur = L;
  for (SubMask P : mask_list_sorted(deltaplus)) {
    if (cur->in_delta(P)) continue;
    SubMask R = good_conjugate(F, P);
    auto step = elementary_expand(cur, R, F);
    E.steps.push_back({step, cur->size(), step->plus()->size()});
    cur = step->plus();
  }
  E.result = cur;
  finish_expansion(E);
  return E;
}

Expansion expand_along(LocalityPtr L, const std::vector<SubMask>& r_sequence, const FusionSystem& F) {
  Expansion E;
  E.base = L;
  LocalityPtr cur = L;
  for (SubMask R : r_sequence) {
    if (cur->in_delta(R)) continue;
    auto step = std::make_shared<ExpandedLocality>(cur, R, F, false);
    E.steps.push_back({step, cur->size(), step->plus()->size()});
    cur = step->plus();
  }
  E.result = cur;
  finish_expansion(E);
  return E;
}

// ---- normal subgroups

ElemSet lift_normal(const Locality& L, const Locality& Lplus, const ElemSet& N) {
  if (Lplus.size() < L.size()) throw InputError("expanded locality is smaller than the original");
  if (N.size() != L.size() || !is_partial_normal(L, N)) throw InputError("subset is not a partial normal subgroup");
  ElemSet X = Lplus.empty_set();
  for (Elem g : members_of(N)) X.set(g);
  ElemSet Np = generated_subgroup(Lplus, conjugation_closure_step(Lplus, X));
  ElemSet back = L.empty_set();
  for (Elem g = 0; g < L.size(); ++g)
    if (Np.test(g)) back.set(g);
  if (back != N) throw PropertyViolation("lifted subgroup meets the original locality in more than N");
  if (!is_partial_normal(Lplus, Np)) throw PropertyViolation("lifted subgroup is not partial normal");
  for (std::uint8_t x = 0; x < L.S().order(); ++x)
    if (Np.test(Lplus.s_elem(x)) != N.test(L.s_elem(x))) throw PropertyViolation("lifting changed S cap N");
  return Np;
}

ElemSet lift_normal(const Expansion& E, const ElemSet& N) { return lift_normal(*E.base, *E.result, N); }

// ---- isomorphisms

std::vector<Elem> witness_map(const Locality& from, const Locality& to) {
  if (!from.witness() || !to.witness()) throw InputError("locality has no group witness");
  if (from.witness()->order() != to.witness()->order()) throw InputError("witness groups differ");
  std::vector<Elem> w2t(to.witness()->order(), kNone);
  for (Elem g = 0; g < to.size(); ++g) w2t[to.witness_elem(g)] = g;
  std::vector<Elem> out(from.size());
  for (Elem g = 0; g < from.size(); ++g) {
    out[g] = w2t[from.witness_elem(g)];
    if (out[g] == kNone) throw InputError("element " + from.label(g) + " has no counterpart");
  }
  return out;
}

bool is_locality_isomorphism(const Locality& A, const Locality& B, const std::vector<Elem>& map) {
  const std::size_t n = A.size();
  if (B.size() != n || map.size() != n || map[0] != 0) return false;
  std::vector<char> hit(n, 0);
  for (Elem g : map) {
    if (g >= n || hit[g]) return false;
    hit[g] = 1;
  }
  const std::size_t k = A.S().order();
  if (B.S().order() != k) return false;
  std::vector<std::uint8_t> sigma(k);
  for (std::uint8_t x = 0; x < k; ++x) {
    int y = B.s_ordinal(map[A.s_elem(x)]);
    if (y < 0) return false;
    sigma[x] = static_cast<std::uint8_t>(y);
  }
  GroupMap gm{sigma};
  for (Elem g = 0; g < n; ++g) {
    if (map[A.inverse(g)] != B.inverse(map[g])) return false;
    for (std::uint8_t x = 0; x < k; ++x) {
      auto c = A.conj(g)[x];
      auto d = B.conj(map[g])[sigma[x]];
      if (c == kNoImage ? d != kNoImage : d != sigma[c]) return false;
    }
  }
  std::vector<SubMask> img;
  for (SubMask P : A.delta()) img.push_back(gm.image_of(P));
  if (mask_list_sorted(img) != B.delta()) return false;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem c = A.mul(a, b), d = B.mul(map[a], map[b]);
      if (c == kNone ? d != kNone : d != map[c]) return false;
    }
  return true;
}

std::optional<std::vector<Elem>> check_unique_iso(const Expansion& E, const Locality& Ltilde,
                                                  const std::vector<Elem>& base_map) {
  if (base_map.size() != E.base->size() || E.result->size() != Ltilde.size()) return std::nullopt;
  std::vector<Elem> beta(base_map);
  for (Elem g : beta)
    if (g >= Ltilde.size()) return std::nullopt;
  for (const auto& st : E.steps) {
    const ExpandedLocality& X = *st.step;
    if (X.is_noop()) continue;
    const Locality& L = X.base();
    for (std::size_t i = L.size(); i < X.classes().size(); ++i) {
      const TildeClass& c = X.classes()[i];
      PhiTriple t = X.seed().canonical_of(c.U, c.V, c.h);
      auto v = Ltilde.try_product({beta[t.x_inv], beta[t.h], beta[t.y]});
      if (!v) return std::nullopt;
      beta.push_back(*v);
    }
  }
  if (!E.generated_by_base || !is_locality_isomorphism(*E.result, Ltilde, beta)) return std::nullopt;
  return beta;
}

// ---- quotients

QuotientExpansion expand_quotient(LocalityPtr L, const ElemSet& N, const std::vector<SubMask>& deltaplus,
                                  std::size_t word_len) {
  QuotientExpansion Q;
  Q.quotient = coset_partition(*L, N);
  LocalityPtr lbar = Q.quotient.lbar;
  FusionSystem Fbar = fusion_of(*lbar);
  Q.expansion = full_expand(L, deltaplus);
  Q.n_plus = lift_normal(Q.expansion, N);

  Q.bar_expansion.base = lbar;
  LocalityPtr cur = lbar;
  Q.rho_plus = Q.quotient.rho;
  for (const auto& st : Q.expansion.steps) {
    const ExpandedLocality& X = *st.step;
    if (X.is_noop()) continue;
    SubMask Rbar = Q.quotient.sigma.image_of(X.R());
    if (!cur->in_delta(Rbar)) {
      auto eb = std::make_shared<ExpandedLocality>(cur, Rbar, Fbar, false);
      Q.bar_expansion.steps.push_back({eb, cur->size(), eb->plus()->size()});
      cur = eb->plus();
    }
    const Locality& Lx = X.base();
    for (std::size_t i = Lx.size(); i < X.classes().size(); ++i) {
      const TildeClass& c = X.classes()[i];
      PhiTriple t = X.seed().canonical_of(c.U, c.V, c.h);
      auto v = cur->try_product({Q.rho_plus[t.x_inv], Q.rho_plus[t.h], Q.rho_plus[t.y]});
      if (!v) throw PropertyViolation("image of a new class is not defined in the expanded quotient");
      Q.rho_plus.push_back(*v);
    }
  }
  Q.bar_expansion.result = cur;
  finish_expansion(Q.bar_expansion);

  const Locality& Lp = *Q.expansion.result;
  const Locality& Lbp = *cur;
  PGHom rp{&Lp, &Lbp, Q.rho_plus};
  bool ext = true;
  for (Elem g = 0; g < L->size(); ++g) ext = ext && Q.rho_plus[g] == Q.quotient.rho[g];
  Q.checks.add("rho+ extends rho", ext);
  std::vector<SubMask> img;
  for (SubMask P : Lp.delta()) img.push_back(Q.quotient.sigma.image_of(P));
  Q.checks.add("objects of the expanded quotient are the images", mask_list_sorted(img) == Lbp.delta());
  auto hr = check_homomorphism(rp, word_len);
  Q.checks.add("rho+ is a homomorphism", hr.passed(),
               hr.passed() ? std::to_string(hr.words_checked) + " words" : hr.violations.front());
  Q.checks.add("rho+ is a projection", is_projection(rp, word_len));
  ElemSet ker = Lp.empty_set();
  for (Elem g = 0; g < Lp.size(); ++g)
    if (Q.rho_plus[g] == 0) ker.set(g);
  Q.checks.add("kernel of rho+ is N+", ker == Q.n_plus, set_string(Lp, ker));

  std::size_t total = 0, good = 0;
  std::string bad;
  for (const ElemSet& Kbar : all_partial_normal_subgroups(*lbar)) {
    ++total;
    ElemSet K = L->empty_set();
    for (Elem g = 0; g < L->size(); ++g)
      if (Kbar.test(Q.quotient.rho[g])) K.set(g);
    ElemSet Kp = lift_normal(*L, Lp, K);
    ElemSet Kbp = lift_normal(*lbar, Lbp, Kbar);
    ElemSet image = Lbp.empty_set(), kern = Lp.empty_set();
    for (Elem g : members_of(Kp)) {
      image.set(Q.rho_plus[g]);
      if (Q.rho_plus[g] == 0) kern.set(g);
    }
    if (image == Kbp && kern == Q.n_plus)
      ++good;
    else if (bad.empty())
      bad = set_string(*lbar, Kbar);
  }
  Q.checks.add("K+ maps onto Kbar+ with kernel N+ for every partial normal Kbar", good == total,
               std::to_string(good) + "/" + std::to_string(total) + (bad.empty() ? "" : " first failure " + bad));
  return Q;
}

}  // namespace llab
