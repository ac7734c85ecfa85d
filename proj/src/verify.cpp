#include "llab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "llab/errors.hpp"

namespace llab {

const std::vector<VerifyTag>& verify_tags() {
  static const std::vector<VerifyTag> tags = {
      {"1.9", "centric subgroups form a closed set; centric radicals are invariant"},
      {"1.13", "inductive system: fully normalized implies fully centralized"},
      {"2.1", "object normalizers: Sylow, normal centralizer, conjugacy classes"},
      {"2.3", "O_p of the locality equals O_p of its fusion system"},
      {"2.8", "centric / centric-radical / quasicentric criteria via normalizers"},
      {"2.9", "Theta quotient is proper with the same fusion system"},
      {"3.5", "triple relation is an equivalence with unique normal forms"},
      {"3.12c", "expanded product independent of the chosen Gamma-form"},
      {"3.16", "conjugation domain of each new class equals that of its triples"},
      {"4.1", "elementary expansion lifts partial normal subgroups"},
      {"5.2", "expansion to the subcentric objects: restriction, properness, generation, uniqueness"},
      {"5.3", "lifting is a bijection on partial normal subgroups and respects products"},
      {"5.4", "quotient maps preserve fusion, full normality and centric radicals"},
      {"5.5", "quotient and expansion commute through a projection with kernel N+"},
      {"6.1", "inductive fusion; normalizer and centralizer systems generated by centric radicals"},
      {"6.4", "subcentric iff O_p of the centralizer system is centric there"},
      {"6.5", "cr within c within q within s"},
      {"6.7", "subcentric subgroups form a closed set"},
      {"6.9", "O_p(F)P subcentric implies P subcentric"},
      {"7.2", "O^p and O^p' belong to their defining families"},
      {"7.3", "O^p and O^p' commute with lifting to the expansion"},
      {"7.4", "O^p and O^p' are monotone"},
      {"axioms", "partial group axioms on every constructed partial group"},
  };
  return tags;
}

bool SuiteReport::passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

LocalityPtr proper_baseline(const GroupSetting& gs) {
  auto c = class_sets(*gs.F).c;
  LocalityPtr Lg = locality_from_group(gs, c);
  if (is_proper(*Lg, *gs.F).proper()) return Lg;
  return theta_quotient(*Lg).quotient.lbar;
}

namespace {

struct Fail {
  std::string msg;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw Fail{msg};
}

SubMask mask_from_elems(const Locality& L, const ElemSet& X) {
  SubMask m = 0;
  for (std::uint8_t x = 0; x < L.S().order(); ++x)
    if (X.test(L.s_elem(x))) m |= SubMask{1} << x;
  return m;
}

class Suite {
 public:
  Suite(std::shared_ptr<const FiniteGroup> G, int p, const VerifyOptions& opt) : opt_(opt) {
    gs_ = group_setting(std::move(G), p);
    cs_ = class_sets(*gs_.F);
    Lg_ = locality_from_group(gs_, cs_.c);
    L_ = proper_baseline(gs_);
    FL_ = std::make_unique<FusionSystem>(fusion_of(*L_));
  }

  const FusionSystem& F() const { return *gs_.F; }

  const Expansion& E() {
    if (!E_) E_ = full_expand(L_, class_sets(*FL_).s);
    return *E_;
  }
  const std::vector<ElemSet>& normals() {
    if (!normals_) normals_ = all_partial_normal_subgroups(*L_);
    return *normals_;
  }
  const std::vector<ElemSet>& normals_plus() {
    if (!normals_plus_) normals_plus_ = all_partial_normal_subgroups(*E().result);
    return *normals_plus_;
  }

  std::string run(const std::string& id);

 private:
  VerifyOptions opt_;
  GroupSetting gs_;
  ClassSets cs_;
  LocalityPtr Lg_, L_;
  std::unique_ptr<FusionSystem> FL_;
  std::optional<Expansion> E_;
  std::optional<std::vector<ElemSet>> normals_, normals_plus_;
};

std::string Suite::run(const std::string& id) {
  const FusionSystem& F = *gs_.F;
  const Locality& L = *L_;
  const FusionSystem& FL = *FL_;
  std::ostringstream out;

  if (id == "1.9") {
    require(is_f_closed(F, cs_.c), "centric set is not F-closed");
    require(is_f_invariant(F, cs_.cr), "centric radical set is not F-invariant");
    out << cs_.c.size() << " centric, " << cs_.cr.size() << " centric radical";
  } else if (id == "1.13") {
    bool ind = is_inductive(F);
    std::size_t n = 0;
    if (ind)
      for (SubMask P : F.subgroups())
        if (is_fully_normalized(F, P)) {
          require(is_fully_centralized(F, P), "fully normalized but not fully centralized: " + F.group().describe(P));
          ++n;
        }
    out << (ind ? "inductive; " : "not inductive; ") << n << " fully normalized subgroups checked";
  } else if (id == "2.1") {
    for (SubMask P : L.delta()) {
      ElemSet N = normalizer_in(L, P), C = centralizer_in(L, P);
      require(is_group_in(L, N), "N_L(P) is not a subgroup for " + L.S().describe(P));
      for (Elem c : members_of(C))
        for (Elem g : members_of(N)) require(C.test(L.mul(L.mul(L.inverse(g), c), g)), "C_L(P) not normal in N_L(P)");
      if (is_fully_normalized(FL, P))
        require(static_cast<std::size_t>(mask_order(L.S().normalizer(L.S().all(), P))) == p_part(N.count(), L.p()),
                "N_S(P) is not Sylow in N_L(P) for " + L.S().describe(P));
      std::set<SubMask> cl;
      for (Elem g = 0; g < L.size(); ++g)
        if (mask_le(P, L.s_g(g))) cl.insert(L.conj_image(P, g));
      auto fc = conjugates(FL, P);
      require(cl == std::set<SubMask>(fc.begin(), fc.end()), "conjugacy class through L differs for " + L.S().describe(P));
    }
    out << L.delta().size() << " objects";
  } else if (id == "2.3") {
    SubMask a = o_p_locality(L), b = o_p_fusion(FL);
    require(a == b, "O_p(L) = " + L.S().describe(a) + " but O_p(F) = " + L.S().describe(b));
    out << "O_p = " << L.S().describe(a);
  } else if (id == "2.8") {
    Classifier cl(FL);
    for (SubMask P : L.delta()) {
      std::vector<Elem> embed;
      ElemSet Nset = normalizer_in(L, P);
      FiniteGroup N = group_of(L, Nset, &embed);
      ElemSet op = L.empty_set();
      for (Elem e : big_o_p(N, L.p()).members()) op.set(embed[e]);
      ElemSet C = centralizer_in(L, P);
      bool cr = cl.centric(P) && cl.radical(P);
      require(cr == (op == L.elems_of(P)), "centric radical criterion fails at " + L.S().describe(P));
      require(cl.centric(P) == (C == L.elems_of(L.S().center(P))), "centric criterion fails at " + L.S().describe(P));
      require(cl.quasicentric(P) == C.is_subset_of(op), "quasicentric criterion fails at " + L.S().describe(P));
    }
    out << L.delta().size() << " objects";
  } else if (id == "2.9") {
    ThetaResult t = theta_quotient(*Lg_);
    bool proper = is_proper(*Lg_, F).proper();
    if (proper) require(t.theta.count() == 1, "Theta is nontrivial for a proper locality");
    out << "|Theta| = " << t.theta.count() << ", quotient " << t.quotient.lbar->size() << " elements";
  } else if (id == "3.5") {
    std::size_t seeds = 0, triples = 0, pairs = 0;
    std::mt19937 rng(12345);
    for (const auto& st : E().steps) {
      if (st.step->is_noop()) continue;
      const ExpansionSeed& sd = st.step->seed();
      auto all = sd.all_triples();
      ++seeds;
      std::vector<PhiTriple> canon;
      for (const auto& t : all) {
        require(sd.in_phi(t), "enumerated triple outside Phi");
        PhiTriple c = sd.canonical(t);
        require(sd.in_phi(c) && sd.sim_related(t, t) && sd.sim_related(t, c) && sd.sim_related(c, t),
                "normal form not related to its triple");
        require(sd.canonical(c) == c, "normal form is not stable");
        canon.push_back(c);
      }
      triples += all.size();
      const std::size_t n = all.size();
      auto check = [&](std::size_t i, std::size_t j) {
        require(sd.sim_related(all[i], all[j]) == (canon[i] == canon[j]), "relation disagrees with normal forms");
        ++pairs;
      };
      if (n * n <= 2000000) {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) check(i, j);
      } else {
        std::uniform_int_distribution<std::size_t> d(0, n - 1);
        for (int k = 0; k < 2000000; ++k) check(d(rng), d(rng));
        // pairs with the same normal form, where the interesting cases are
        std::map<PhiTriple, std::vector<std::size_t>> by;
        for (std::size_t i = 0; i < n; ++i) by[canon[i]].push_back(i);
        for (const auto& [c, v] : by)
          for (std::size_t a : v)
            for (std::size_t b : v) check(a, b);
      }
    }
    out << seeds << " seeds, " << triples << " triples, " << pairs << " pairs";
  } else if (id == "3.12c") {
    std::size_t words = 0, multi = 0;
    for (const auto& st : E().steps) {
      if (st.step->is_noop()) continue;
      const ExpandedLocality& X = *st.step;
      const Locality& P = *X.plus();
      const Elem n0 = static_cast<Elem>(X.base().size());
      for (Elem a = 0; a < P.size(); ++a)
        for (Elem b = 0; b < P.size(); ++b) {
          if (a < n0 && b < n0) continue;
          if (P.mul(a, b) == kNone) continue;
          std::size_t k = X.check_gamma_independence({a, b}, 16);
          ++words;
          if (k >= 2) ++multi;
        }
    }
    out << words << " words, " << multi << " with at least two Gamma-forms";
  } else if (id == "3.16") {
    std::size_t n = 0;
    for (const auto& st : E().steps) {
      if (st.step->is_noop()) continue;
      const ExpandedLocality& X = *st.step;
      for (std::size_t i = X.base().size(); i < X.classes().size(); ++i) {
        Elem C = static_cast<Elem>(i);
        require(X.s_of_class(C) == X.classes()[i].U && X.plus()->s_g(C) == X.classes()[i].U,
                "conjugation domain mismatch at " + X.plus()->label(C));
        ++n;
      }
    }
    out << n << " new classes";
  } else if (id == "4.1") {
    std::size_t n = 0;
    for (const auto& st : E().steps) {
      if (st.step->is_noop()) continue;
      const Locality& B = st.step->base();
      const Locality& P = *st.step->plus();
      auto nb = all_partial_normal_subgroups(B);
      std::set<ElemSet> lifted;
      for (const auto& N : nb) lifted.insert(lift_normal(B, P, N));
      require(lifted.size() == nb.size(), "lifting is not injective");
      n += nb.size();
    }
    out << n << " partial normal subgroups lifted";
  } else if (id == "5.2") {
    const Expansion& X = E();
    for (const auto& st : X.steps) require(st.step->postconditions().passed(), st.step->postconditions().summary());
    require(X.generated_by_base, "expansion not generated by the original locality");
    require(is_proper(*X.result, FL).proper(), "expansion is not proper");
    out << L.size() << " -> " << X.result->size() << " elements in " << X.steps.size() << " steps";
    if (L_ == Lg_) {
      LocalityPtr Ls = locality_from_group(gs_, cs_.s);
      if (is_proper(*Ls, F).proper()) {
        auto beta = check_unique_iso(X, *Ls, witness_map(L, *Ls));
        require(beta.has_value(), "no isomorphism to the group restriction on the subcentric objects");
        out << "; isomorphic to the group restriction";
      } else {
        out << "; group restriction on the subcentric objects is not proper, no group comparison";
      }
    }
  } else if (id == "5.3") {
    const Locality& P = *E().result;
    const auto& nl = normals();
    const auto& np = normals_plus();
    std::map<ElemSet, ElemSet> lift;
    std::set<ElemSet> image;
    for (const auto& N : nl) {
      ElemSet Np = lift_normal(E(), N);
      lift[N] = Np;
      image.insert(Np);
      ElemSet back = L.empty_set();
      for (Elem g = 0; g < L.size(); ++g)
        if (Np.test(g)) back.set(g);
      require(back == N, "inverse of lifting fails");
      require(mask_from_elems(P, Np) == mask_from_elems(L, N), "S cap N changed");
    }
    require(image == std::set<ElemSet>(np.begin(), np.end()), "lifting is not onto the partial normal subgroups of the expansion");
    std::size_t pairs = 0;
    for (const auto& M : nl)
      for (const auto& N : nl) {
        ElemSet MN = product_partial_normal(L, M, N);
        require(lift_normal(E(), MN) == product_partial_normal(P, lift[M], lift[N]), "lifting does not respect products");
        ++pairs;
      }
    out << nl.size() << " partial normal subgroups on each side, " << pairs << " products";
  } else if (id == "5.4") {
    for (const auto& N : normals()) {
      Quotient q = coset_partition(L, N);
      CheckReport r = quotient_fusion_check(q.sigma, FL, fusion_of(*q.lbar), &L.delta(), &q.lbar->delta());
      require(r.passed(), "quotient by " + set_string(L, N) + ": " + r.summary());
    }
    out << normals().size() << " quotients";
  } else if (id == "5.5") {
    auto s = class_sets(FL).s;
    for (const auto& N : normals()) {
      QuotientExpansion q = expand_quotient(L_, N, s, opt_.word_len);
      require(q.checks.passed(), "quotient by " + set_string(L, N) + ": " + q.checks.summary());
    }
    out << normals().size() << " quotients";
  } else if (id == "6.1") {
    require(is_inductive(FL), "fusion system is not inductive");
    std::size_t n = 0;
    for (SubMask V : FL.subgroups()) {
      if (!is_fully_normalized(FL, V)) continue;
      require(is_cr_generated(normalizer_system(FL, V)), "N_F(V) not generated by centric radicals for " + L.S().describe(V));
      require(is_cr_generated(centralizer_system(FL, V)), "C_F(V) not generated by centric radicals for " + L.S().describe(V));
      normalizer_locality(L, V);
      centralizer_locality(L, V);
      ++n;
    }
    out << n << " fully normalized subgroups";
  } else if (id == "6.4") {
    std::size_t n = 0;
    std::set<SubMask> s(cs_.s.begin(), cs_.s.end());
    for (SubMask V : F.subgroups()) {
      if (!is_fully_centralized(F, V)) continue;
      FusionSystem C = centralizer_system(F, V);
      Classifier cl(C);
      bool c = cl.centric(o_p_fusion(C));
      require(c == (s.count(V) != 0), "criterion fails at " + F.group().describe(V));
      ++n;
    }
    out << n << " fully centralized subgroups";
  } else if (id == "6.5") {
    auto sub = [](const std::vector<SubMask>& a, const std::vector<SubMask>& b) {
      std::set<SubMask> bs(b.begin(), b.end());
      for (SubMask x : a)
        if (!bs.count(x)) return false;
      return true;
    };
    require(sub(cs_.cr, cs_.c) && sub(cs_.c, cs_.q) && sub(cs_.q, cs_.s), "chain of classes fails");
    out << cs_.cr.size() << " <= " << cs_.c.size() << " <= " << cs_.q.size() << " <= " << cs_.s.size();
  } else if (id == "6.7") {
    require(is_f_closed(F, cs_.s), "subcentric set is not F-closed");
    out << cs_.s.size() << " subcentric";
  } else if (id == "6.9") {
    std::set<SubMask> s(cs_.s.begin(), cs_.s.end());
    SubMask O = o_p_fusion(F);
    for (SubMask P : F.subgroups())
      if (s.count(F.group().join(O, P))) require(s.count(P) != 0, "fails at " + F.group().describe(P));
    out << F.subgroups().size() << " subgroups";
  } else if (id == "7.2") {
    for (const auto& N : normals()) {
      ElemSet T = N & L.s_set();
      ElemSet K = o_p_of(L, N, &normals()), K2 = o_pprime_of(L, N, &normals());
      require(is_partial_normal(L, K) && product_set(L, K, T) == N, "O^p(N) outside its family for " + set_string(L, N));
      require(is_partial_normal(L, K2) && T.is_subset_of(K2), "O^p'(N) outside its family for " + set_string(L, N));
    }
    out << normals().size() << " partial normal subgroups";
  } else if (id == "7.3") {
    const Locality& P = *E().result;
    for (const auto& N : normals()) {
      ElemSet Np = lift_normal(E(), N);
      require(lift_normal(E(), o_p_of(L, N, &normals())) == o_p_of(P, Np, &normals_plus()),
              "O^p does not commute with lifting at " + set_string(L, N));
      require(lift_normal(E(), o_pprime_of(L, N, &normals())) == o_pprime_of(P, Np, &normals_plus()),
              "O^p' does not commute with lifting at " + set_string(L, N));
    }
    out << normals().size() << " partial normal subgroups";
  } else if (id == "7.4") {
    std::size_t pairs = 0;
    std::vector<ElemSet> op, opp;
    for (const auto& N : normals()) {
      op.push_back(o_p_of(L, N, &normals()));
      opp.push_back(o_pprime_of(L, N, &normals()));
    }
    const auto& nl = normals();
    for (std::size_t i = 0; i < nl.size(); ++i)
      for (std::size_t j = 0; j < nl.size(); ++j)
        if (nl[i].is_subset_of(nl[j])) {
          require(op[i].is_subset_of(op[j]) && opp[i].is_subset_of(opp[j]), "monotonicity fails");
          ++pairs;
        }
    out << pairs << " comparable pairs";
  } else if (id == "axioms") {
    if (opt_.axiom_len == 0) return "skipped";
    std::vector<std::pair<std::string, LocalityPtr>> all = {{"group restriction", Lg_}, {"baseline", L_}};
    for (std::size_t i = 0; i < E().steps.size(); ++i)
      all.push_back({"expansion step " + std::to_string(i + 1), E().steps[i].step->plus()});
    all.push_back({"restriction of the expansion", restrict_locality(*E().result, L.delta())});
    for (const auto& N : normals()) all.push_back({"quotient by " + set_string(L, N), coset_partition(L, N).lbar});
    std::set<const Locality*> seen;
    std::size_t words = 0;
    for (const auto& [name, X] : all) {
      if (!seen.insert(X.get()).second) continue;
      AxiomReport r = check_axioms(*X, opt_.axiom_len);
      require(r.passed(), name + ": " + (r.violations.empty() ? "" : r.violations.front()));
      words += r.words_checked;
    }
    out << seen.size() << " partial groups, " << words << " words";
  } else {
    throw InputError("unknown verification tag " + id);
  }
  return out.str();
}

}  // namespace

SuiteReport run_verify_suite(std::shared_ptr<const FiniteGroup> G, int p, const VerifyOptions& opt) {
  for (const auto& id : opt.only) {
    bool known = false;
    for (const auto& t : verify_tags()) known = known || t.id == id;
    if (!known) throw InputError("unknown verification tag " + id);
  }
  Suite suite(std::move(G), p, opt);
  SuiteReport rep;
  for (const auto& tag : verify_tags()) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), tag.id) == opt.only.end()) continue;
    TagResult r{tag.id, tag.name, true, {}, 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = suite.run(tag.id);
    } catch (const Fail& f) {
      r.passed = false;
      r.detail = f.msg;
    } catch (const PropertyViolation& e) {
      r.passed = false;
      r.detail = e.what();
    } catch (const DomainError& e) {
      r.passed = false;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.results.push_back(std::move(r));
  }
  return rep;
}

Json suite_json(const SuiteReport& r) {
  Json a = Json::array();
  for (const auto& t : r.results) a.push_back(Json{{"tag", t.id}, {"name", t.name}, {"passed", t.passed}, {"detail", t.detail}});
  return Json{{"passed", r.passed()}, {"results", a}};
}

std::string suite_text(const SuiteReport& r) {
  std::ostringstream os;
  for (const auto& t : r.results)
    os << (t.passed ? "PASS " : "FAIL ") << t.id << "  " << t.name << "  [" << t.detail << "]\n";
  return os.str();
}

}  // namespace llab
