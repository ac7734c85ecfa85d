// Acceptance criteria 1-9: one PASS/FAIL line each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "llab/errors.hpp"
#include "llab/io.hpp"
#include "llab/verify.hpp"
#include "oracles.hpp"

using namespace llab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  // set when the criterion cannot hold as stated; the run stays green only if the
  // stated reason was confirmed
  bool known_unattainable = false;
  bool reason_confirmed = false;
  std::vector<std::string> notes;
};

struct Ex {
  std::string name;
  int p;
};

const std::vector<Ex>& examples() {
  static const std::vector<Ex> v = {{"s3", 2}, {"s3", 3}, {"s4", 2}, {"s4", 3}, {"a4", 2}, {"a4", 3},
                                    {"d8", 2}, {"c6", 2}, {"c6", 3}, {"a5", 2}, {"a5", 3}, {"a5", 5},
                                    {"s5", 2}, {"s5", 3}, {"s5", 5}, {"a6", 2}, {"a6", 3}, {"a6", 5}};
  return v;
}

struct Setup {
  GroupSetting gs;
  ClassSets cs;
  LocalityPtr Lc;
  Setup(const std::string& name, int p)
      : gs(group_setting(load_group(name), p)), cs(class_sets(*gs.F)), Lc(locality_from_group(gs, cs.c)) {}
};

template <class T>
bool has(const std::vector<T>& v, const T& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}
template <class T>
bool subset_of(const std::vector<T>& a, const std::vector<T>& b) {
  return std::all_of(a.begin(), a.end(), [&](const T& x) { return has(b, x); });
}

ElemSet even_part(const Locality& L, const FiniteGroup& G) {
  ElemSet out = L.empty_set();
  for (Elem g = 0; g < L.size(); ++g) {
    const Perm& x = G.perm(L.witness_elem(g));
    std::size_t cycles = 0;
    std::vector<bool> seen(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!seen[i]) {
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = x[j]) seen[j] = true;
      }
    out[g] = (x.size() - cycles) % 2 == 0;
  }
  return out;
}

struct Checker {
  Outcome& o;
  void operator()(bool ok, const std::string& what) {
    if (!ok && o.pass) o.detail = what;
    o.pass = o.pass && ok;
  }
};

// classification of F_S(S4) at 2
Outcome classification() {
  Outcome out;
  Checker check{out};
  Setup s("s4", 2);
  oracle::GroupFusion brute(s.gs);
  const PGroup& S = *s.gs.S;
  Classifier cl(*s.gs.F);
  std::vector<SubMask> cr, c, q, sc;
  for (SubMask P : S.subgroups()) {
    ClassFlags f = cl.classify(P);
    check(f.centric == brute.centric(P) && f.radical == brute.radical(P) && f.quasicentric == brute.quasicentric(P) &&
              f.subcentric == brute.subcentric(P),
          "flags differ from brute force at " + S.describe(P));
    if (brute.centric(P) && brute.radical(P)) cr.push_back(P);
    if (brute.centric(P)) c.push_back(P);
    if (brute.quasicentric(P)) q.push_back(P);
    if (brute.subcentric(P)) sc.push_back(P);
  }
  SubMask V4 = 0, E2 = 0, Z = S.center(S.all());
  for (SubMask P : S.subgroups()) {
    if (mask_order(P) != 4) continue;
    bool elementary = true;
    for (std::size_t i = 0; i < 8; ++i)
      if (P >> i & 1) elementary = elementary && S.group().elem_order(static_cast<Elem>(i)) <= 2;
    if (!elementary) continue;
    if (brute.conjugates(P).size() == 1 && brute.normalizer_g(P).size() == 24)
      V4 = P;
    else
      E2 = P;
  }
  check(V4 && E2, "four-subgroups not found");
  check(std::set<SubMask>(cr.begin(), cr.end()) == std::set<SubMask>{V4, S.all()}, "centric radicals are not {V4, S}");
  check(mask_list_sorted(cr) == mask_list_sorted(s.cs.cr), "centric radicals differ from the library");
  check(brute.centric(E2) && !brute.radical(E2), "E' is not centric-but-not-radical");
  check(brute.o_p_normalizer(E2) == S.all(), "O_2(N_F(E')) is not S");
  check(!brute.centric(Z) && brute.quasicentric(Z) && brute.subcentric(Z), "Z(S) is not quasicentric-not-centric");
  check(subset_of(cr, c) && subset_of(c, q) && subset_of(q, sc), "chain cr <= c <= q <= s fails");
  check(mask_list_sorted(sc) == mask_list_sorted(s.cs.s), "subcentric set differs from the library");
  check(is_f_closed(*s.gs.F, s.cs.s), "subcentric set is not F-closed");
  if (out.pass) {
    std::ostringstream os;
    os << "cr = {" << S.describe(V4) << ", " << S.describe(S.all()) << "}, |c| = " << c.size() << ", |q| = " << q.size()
       << ", |s| = " << sc.size();
    out.detail = os.str();
  }
  return out;
}

// C6 at 2 on {S}
Outcome theta() {
  Outcome out;
  Checker check{out};
  Setup s("c6", 2);
  auto L = locality_from_group(s.gs, {s.gs.S->all()});
  check(!is_proper(*L).proper(), "C6 on {S} is proper");
  ThetaResult t = theta_quotient(*L);
  ElemSet c3 = L->empty_set();
  for (Elem g = 0; g < L->size(); ++g) c3[g] = 3 % s.gs.G->elem_order(L->witness_elem(g)) == 0;
  check(t.theta == c3, "Theta is not the subgroup of order 3");
  check(t.quotient.lbar->size() == 2, "quotient does not have order 2");
  check(is_proper(*t.quotient.lbar).proper(), "quotient is not proper");
  check(fusion_equal_via(t.quotient.sigma, *s.gs.F, fusion_of(*t.quotient.lbar)), "fusion changes in the quotient");
  if (out.pass) out.detail = "Theta = " + set_string(*L, t.theta) + ", quotient of order 2 is proper";
  return out;
}

// every proper locality derived from the shipped examples
struct Family {
  std::vector<std::pair<std::string, LocalityPtr>> members;
};

const Family& proper_family() {
  static Family fam = [] {
    Family f;
    for (const auto& e : examples()) {
      Setup s(e.name, e.p);
      std::string tag = e.name + "@" + std::to_string(e.p);
      LocalityPtr base = proper_baseline(s.gs);
      f.members.push_back({tag + " centric", base});
      FusionSystem F = fusion_of(*base);
      Expansion E = full_expand(base, class_sets(F).s);
      f.members.push_back({tag + " subcentric expansion", E.result});
      auto gs_s = locality_from_group(s.gs, s.cs.s);
      if (is_proper(*gs_s).proper()) f.members.push_back({tag + " subcentric restriction", gs_s});
    }
    return f;
  }();
  return fam;
}

Outcome normalizer_criteria() {
  Outcome out;
  Checker check{out};
  std::size_t objects = 0;
  for (const auto& [name, L] : proper_family().members) {
    FusionSystem F = fusion_of(*L);
    Classifier cl(F);
    for (SubMask P : L->delta()) {
      ++objects;
      ElemSet N = L->empty_set(), C = L->empty_set();
      for (Elem g = 0; g < L->size(); ++g) {
        if (!mask_le(P, L->s_g(g))) continue;
        N[g] = L->conj_image(P, g) == P;
        bool cent = true;
        for (std::uint8_t x = 0; x < 64; ++x)
          if ((P >> x & 1) && L->conj(g)[x] != x) cent = false;
        C[g] = cent;
      }
      std::vector<Elem> embed;
      FiniteGroup NG = group_of(*L, N, &embed);
      ElemSet op = L->empty_set();
      for (Elem e : big_o_p(NG, L->p()).members()) op.set(embed[e]);
      std::string where = name + " at " + L->S().describe(P);
      check((cl.centric(P) && cl.radical(P)) == (op == L->elems_of(P)), "centric-radical criterion fails for " + where);
      check(cl.centric(P) == (C == L->elems_of(L->S().center(P))), "centric criterion fails for " + where);
      check(cl.quasicentric(P) == C.is_subset_of(op), "quasicentric criterion fails for " + where);
    }
  }
  if (out.pass)
    out.detail = std::to_string(proper_family().members.size()) + " proper localities, " + std::to_string(objects) + " objects";
  return out;
}

Outcome expansion_round_trip() {
  Outcome out;
  Setup s("s5", 2);
  Expansion E = full_expand(s.Lc, s.cs.s);
  auto direct = locality_from_group(s.gs, s.cs.s);
  bool more = E.result->size() > s.Lc->size();
  bool iso = E.result->size() == direct->size() &&
             check_unique_iso(E, *direct, witness_map(*s.Lc, *direct)).has_value();
  out.pass = more && iso;
  std::ostringstream os;
  os << "|L| = " << s.Lc->size() << ", |L+| = " << E.result->size() << ", |S5 on subcentrics| = " << direct->size();
  out.detail = os.str();
  if (out.pass) return out;

  // The target is not a proper locality: the trivial subgroup is subcentric (O_2(F) = V4 is
  // centric), so S5 on the subcentrics is all of S5, and its normalizer of 1 is S5 itself.
  // The expansion is unique among proper localities and adds nothing here.
  out.known_unattainable = true;
  bool trivial_subcentric = has(s.cs.s, SubMask{1});
  bool target_improper = !is_proper(*direct).proper();
  bool fusion_as_s4 = [&] {
    Setup s4("s4", 2);
    return s4.gs.F->map_count() == s.gs.F->map_count() && s4.cs.s.size() == s.cs.s.size();
  }();
  bool plus_proper = is_proper(*E.result).proper() && E.result->delta().size() == s.cs.s.size();
  out.reason_confirmed = !more && trivial_subcentric && target_improper && plus_proper && fusion_as_s4;
  out.notes.push_back(std::string("1 is subcentric: ") + (trivial_subcentric ? "yes" : "no") +
                      "; S5 on the subcentrics proper: " + (target_improper ? "no" : "yes") +
                      "; expansion proper on all subcentrics: " + (plus_proper ? "yes" : "no"));

  // the same round trip where the target is proper
  for (const char* g : {"a6"}) {
    Setup t(g, 2);
    Expansion Et = full_expand(t.Lc, t.cs.s);
    auto dt = locality_from_group(t.gs, t.cs.s);
    auto m = check_unique_iso(Et, *dt, witness_map(*t.Lc, *dt));
    bool id_on_base = m.has_value();
    auto base = witness_map(*t.Lc, *dt);
    for (Elem x = 0; m && x < t.Lc->size(); ++x) id_on_base = id_on_base && (*m)[x] == base[x];
    bool ok = Et.result->size() > t.Lc->size() && is_proper(*dt).proper() && id_on_base;
    out.reason_confirmed = out.reason_confirmed && ok;
    std::ostringstream os;
    os << g << ": " << t.Lc->size() << " -> " << Et.result->size() << " elements, isomorphic to the direct restriction: "
       << (id_on_base ? "yes" : "no");
    out.notes.push_back(os.str());
  }
  return out;
}

Outcome lifting_bijection() {
  Outcome out;
  Checker check{out};
  std::ostringstream os;
  for (const char* g : {"s5", "a6", "s4"}) {
    Setup s(g, 2);
    Expansion E = full_expand(s.Lc, s.cs.s);
    const Locality& P = *E.result;
    auto below = all_partial_normal_subgroups(*s.Lc);
    auto above = all_partial_normal_subgroups(P);
    std::set<std::vector<Elem>> images, targets;
    for (const auto& K : above) targets.insert(members_of(K));
    for (const auto& N : below) {
      // <N^{L+}> by brute force: close under defined conjugation and products
      ElemSet X = N;
      X.resize(P.size());
      for (;;) {
        ElemSet Y = generated_subgroup(P, conjugation_closure_step(P, X));
        if (Y == X) break;
        X = Y;
      }
      check(X == lift_normal(E, N), std::string(g) + ": lift differs from the closure");
      ElemSet back = X;
      back.resize(s.Lc->size());
      check(back == N, std::string(g) + ": intersection does not recover N");
      ElemSet sN = N & s.Lc->s_set(), sX = X & P.s_set();
      sX.resize(s.Lc->size());
      check(sX == sN, std::string(g) + ": S cap N changes");
      images.insert(members_of(X));
    }
    check(images == targets && images.size() == below.size(), std::string(g) + ": lifting is not a bijection");
    for (const auto& K : above) {
      ElemSet down = K;
      down.resize(s.Lc->size());
      check(is_partial_normal(*s.Lc, down), std::string(g) + ": intersection is not partial normal");
    }
    if (std::string(g) == "s5") {
      ElemSet N = even_part(*s.Lc, *s.gs.G);
      check(is_partial_normal(*s.Lc, N), "A5 cap L is not partial normal");
      ElemSet sN = N & s.Lc->s_set();
      SubMask m = 0;
      for (Elem x : members_of(sN)) m |= SubMask{1} << s.Lc->s_ordinal(x);
      check(m == o_p_fusion(*s.gs.F) && mask_order(m) == 4, "S cap (A5 cap L) is not V4");
      ElemSet Np = lift_normal(E, N) & P.s_set();
      Np.resize(s.Lc->size());
      check(Np == sN, "S cap N+ differs for A5 cap L");
    }
    os << g << ": " << below.size() << " <-> " << above.size() << "  ";
  }
  if (out.pass) out.detail = os.str();
  return out;
}

Outcome quotient_compat() {
  Outcome out;
  Checker check{out};
  Setup s("s5", 2);
  ElemSet N = even_part(*s.Lc, *s.gs.G);
  QuotientExpansion q = expand_quotient(s.Lc, N, s.cs.s, 3);
  check(q.checks.passed(), "quotient expansion checks: " + q.checks.summary());
  const Locality& P = *q.expansion.result;
  const Locality& B = *q.bar_expansion.result;
  PGHom rho_plus{&P, &B, q.rho_plus};
  for (Elem g = 0; g < s.Lc->size(); ++g) check(q.rho_plus[g] == q.quotient.rho[g], "rho+ does not extend rho");
  check(check_homomorphism(rho_plus, 3).passed(), "rho+ is not a homomorphism");
  check(is_projection(rho_plus, 3), "rho+ is not a projection");
  check(kernel(rho_plus) == q.n_plus, "kernel of rho+ is not N+");
  check(q.n_plus == lift_normal(q.expansion, N), "N+ is not the lift of N");
  if (out.pass)
    out.detail = "|L+| = " + std::to_string(P.size()) + ", |L+/N+| = " + std::to_string(B.size()) +
                 ", |N+| = " + std::to_string(q.n_plus.count());
  return out;
}

Outcome section7() {
  Outcome out;
  Checker check{out};
  Setup s("s5", 2);
  ElemSet A = even_part(*s.Lc, *s.gs.G);
  check(o_p_of(*s.Lc, s.Lc->full_set()) == A, "O^2 of L is not A5 cap L");
  // the families by brute force over all partial normal subgroups
  auto normals = all_partial_normal_subgroups(*s.Lc);
  for (const auto& N : normals) {
    ElemSet T = N & s.Lc->s_set();
    ElemSet inter = N, inter2 = N;
    for (const auto& K : normals) {
      if (!K.is_subset_of(N)) continue;
      ElemSet kt = s.Lc->empty_set();
      for (Elem k : members_of(K))
        for (Elem t : members_of(T))
          if (auto x = s.Lc->try_mul(k, t)) kt.set(*x);
      if (kt == N) inter &= K;
      if (T.is_subset_of(K)) inter2 &= K;
    }
    check(o_p_of(*s.Lc, N, &normals) == inter, "O^p differs from the brute-force intersection");
    check(o_pprime_of(*s.Lc, N, &normals) == inter2, "O^p' differs from the brute-force intersection");
  }
  VerifyOptions opt;
  opt.axiom_len = 0;
  opt.only = {"7.2", "7.3", "7.4"};
  for (const char* g : {"s5", "s4", "a6"}) {
    SuiteReport r = run_verify_suite(load_group(g), 2, opt);
    for (const auto& t : r.results) check(t.passed, std::string(g) + " " + t.id + ": " + t.detail);
  }
  if (out.pass) out.detail = std::to_string(normals.size()) + " partial normal subgroups of S5 on centrics";
  return out;
}

Outcome local_generation() {
  Outcome out;
  Checker check{out};
  std::size_t systems = 0, vs = 0;
  for (const auto& [name, L] : proper_family().members) {
    if (L->S().order() > 8) continue;
    FusionSystem F = fusion_of(*L);
    ++systems;
    check(is_inductive(F), name + ": not inductive");
    for (SubMask V : F.subgroups()) {
      if (!is_fully_normalized(F, V)) continue;
      ++vs;
      check(is_cr_generated(normalizer_system(F, V)), name + ": N_F(" + L->S().describe(V) + ") not cr-generated");
      check(is_cr_generated(centralizer_system(F, V)), name + ": C_F(" + L->S().describe(V) + ") not cr-generated");
    }
  }
  if (out.pass) out.detail = std::to_string(systems) + " fusion systems, " + std::to_string(vs) + " fully normalized subgroups";
  return out;
}

Outcome axioms() {
  Outcome out;
  Checker check{out};
  VerifyOptions opt;
  opt.axiom_len = 4;
  opt.only = {"axioms"};
  std::size_t words = 0;
  for (const auto& e : examples()) {
    SuiteReport r = run_verify_suite(load_group(e.name), e.p, opt);
    for (const auto& t : r.results) {
      check(t.passed, e.name + "@" + std::to_string(e.p) + ": " + t.detail);
      auto pos = t.detail.find(", ");
      if (pos != std::string::npos) words += std::stoull(t.detail.substr(pos + 2));
    }
  }
  // the members of the proper family not covered by the suite
  for (const auto& [name, L] : proper_family().members) {
    AxiomReport r = check_axioms(*L, 4);
    words += r.words_checked;
    check(r.passed(), name + ": " + (r.violations.empty() ? "" : r.violations.front()));
  }
  if (out.pass) out.detail = std::to_string(words) + " words up to length 4";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double budget = 0;  // seconds, 0 = none
  };
  const std::vector<Criterion> criteria = {
      {1, "classification of the 2-fusion of S4 against brute force", classification, 5},
      {2, "C6 on its Sylow: not proper, Theta = C3, proper quotient of order 2", theta, 1},
      {3, "normalizer criteria for centric, centric radical, quasicentric objects", normalizer_criteria},
      {4, "S5 centric locality expands to S5 on the subcentrics", expansion_round_trip, 600},
      {5, "lifting partial normal subgroups is a bijection", lifting_bijection},
      {6, "quotient by A5 cap L commutes with expansion", quotient_compat},
      {7, "O^p and O^p' of partial normal subgroups", section7},
      {8, "inductive fusion; cr-generated normalizer and centralizer systems", local_generation, 600},
      {9, "partial group axioms on every constructed partial group", axioms},
  };
  bool ok = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget > 0 && secs > c.budget && o.pass) {
      o.pass = false;
      o.detail += "; over the time budget of " + std::to_string(static_cast<int>(c.budget)) + " s";
    }
    std::printf("criterion %d: %s  %s  [%s] (%.1f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
    if (o.known_unattainable)
      std::printf("  known unattainable as stated; documented reason %s\n", o.reason_confirmed ? "confirmed" : "NOT confirmed");
    for (const auto& n : o.notes) std::printf("  %s\n", n.c_str());
    std::fflush(stdout);
    if (!o.pass && !(o.known_unattainable && o.reason_confirmed)) ok = false;
  }
  return ok ? 0 : 1;
}
