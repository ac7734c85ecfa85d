#include <gtest/gtest.h>

#include "llab/errors.hpp"
#include "llab/io.hpp"
#include "oracles.hpp"

using namespace llab;

namespace {

GroupSetting setting(const std::string& name, int p) { return group_setting(load_group(name), p); }

std::set<std::vector<int>> as_maps(const std::vector<FHom>& hs, std::size_t n) {
  std::set<std::vector<int>> out;
  for (const auto& f : hs) {
    std::vector<int> v(n, -1);
    for (std::size_t i = 0; i < n; ++i)
      if (f.source >> i & 1) v[i] = f.img[i];
    out.insert(v);
  }
  return out;
}

struct Case {
  const char* group;
  int p;
};
const Case kCases[] = {{"s3", 2}, {"s3", 3}, {"s4", 2}, {"s4", 3}, {"a4", 2}, {"d8", 2},
                       {"c6", 2}, {"a5", 2}, {"a5", 3}, {"s5", 2}, {"a6", 2}};

}  // namespace

TEST(Fusion, GroupFusionEqualsConjugationMaps) {
  for (const auto& c : kCases) {
    auto gs = setting(c.group, c.p);
    oracle::GroupFusion o(gs);
    std::vector<Elem> all(gs.G->order());
    for (Elem g = 0; g < all.size(); ++g) all[g] = g;
    for (SubMask P : gs.F->subgroups())
      EXPECT_EQ(as_maps(gs.F->homs(P), o.n()), o.maps(P, all)) << c.group << " p=" << c.p << " " << gs.S->describe(P);
  }
}

TEST(Fusion, ClassificationMatchesBruteForce) {
  for (const auto& c : kCases) {
    auto gs = setting(c.group, c.p);
    oracle::GroupFusion o(gs);
    Classifier cl(*gs.F);
    for (SubMask P : gs.F->subgroups()) {
      ClassFlags f = cl.classify(P);
      std::string where = std::string(c.group) + " p=" + std::to_string(c.p) + " " + gs.S->describe(P);
      EXPECT_EQ(f.centric, o.centric(P)) << where;
      EXPECT_EQ(f.radical, o.radical(P)) << where;
      EXPECT_EQ(f.quasicentric, o.quasicentric(P)) << where;
      EXPECT_EQ(f.subcentric, o.subcentric(P)) << where;
      EXPECT_EQ(f.fully_normalized, mask_order(o.normalizer_s(P, gs.S->all())) ==
                                        mask_order(o.normalizer_s(o.fully_normalized_conjugate(P), gs.S->all())))
          << where;
      EXPECT_EQ(cl.o_p_normalizer(o.fully_normalized_conjugate(P)), o.o_p_normalizer(P)) << where;
    }
  }
}

TEST(Fusion, ConjugatesMatchBruteForce) {
  for (const auto& c : kCases) {
    auto gs = setting(c.group, c.p);
    oracle::GroupFusion o(gs);
    for (SubMask P : gs.F->subgroups()) {
      auto v = conjugates(*gs.F, P);
      std::sort(v.begin(), v.end());
      EXPECT_EQ(v, o.conjugates(P));
    }
  }
}

TEST(Fusion, ClassSetChainAndClosure) {
  for (const auto& c : kCases) {
    auto gs = setting(c.group, c.p);
    ClassSets cs = class_sets(*gs.F);
    auto sub = [](const std::vector<SubMask>& a, const std::vector<SubMask>& b) {
      return std::all_of(a.begin(), a.end(), [&](SubMask x) { return std::find(b.begin(), b.end(), x) != b.end(); });
    };
    EXPECT_TRUE(sub(cs.cr, cs.c));
    EXPECT_TRUE(sub(cs.c, cs.q));
    EXPECT_TRUE(sub(cs.q, cs.s));
    EXPECT_TRUE(is_f_closed(*gs.F, cs.c));
    EXPECT_TRUE(is_f_closed(*gs.F, cs.q));
    EXPECT_TRUE(is_f_closed(*gs.F, cs.s));
    EXPECT_TRUE(is_f_invariant(*gs.F, cs.cr));
  }
}

TEST(Fusion, ClosureIsSmallestClosedSuperset) {
  auto gs = setting("s4", 2);
  const auto& F = *gs.F;
  auto subs = F.subgroups();
  for (SubMask P : subs) {
    auto cl = f_closure(F, {P});
    EXPECT_TRUE(is_f_closed(F, cl));
    // brute force: all overgroups of conjugates of P
    std::set<SubMask> want;
    for (SubMask Q : conjugates(F, P))
      for (SubMask X : subs)
        if (mask_le(Q, X)) want.insert(X);
    EXPECT_EQ(std::set<SubMask>(cl.begin(), cl.end()), want);
  }
}

TEST(Fusion, TrivialAndGeneratedSystems) {
  auto gs = setting("d8", 2);
  auto T = FusionSystem::trivial(gs.S, gs.S->all());
  EXPECT_EQ(T, *gs.F);  // a p-group's own fusion system
  ClassSets cs = class_sets(T);
  EXPECT_NE(std::find(cs.cr.begin(), cs.cr.end(), gs.S->all()), cs.cr.end());
  EXPECT_EQ(o_p_fusion(T), gs.S->all());
}

TEST(Fusion, NormalizerAndCentralizerSystems) {
  auto gs = setting("s4", 2);
  oracle::GroupFusion o(gs);
  for (SubMask V : gs.F->subgroups()) {
    if (!is_fully_normalized(*gs.F, V)) continue;
    SubMask NS = o.normalizer_s(V, gs.S->all());
    auto N = normalizer_system(*gs.F, V);
    EXPECT_EQ(N.base(), NS);
    for (SubMask P : gs.S->subgroups_of(NS)) {
      auto want = o.maps(P, o.normalizer_g(V));
      std::set<std::vector<int>> inside;
      for (auto f : want)
        if (std::all_of(f.begin(), f.end(), [&](int j) { return j < 0 || (NS >> j & 1); })) inside.insert(f);
      EXPECT_EQ(as_maps(N.homs(P), o.n()), inside);
    }
    EXPECT_TRUE(is_cr_generated(N));
    EXPECT_TRUE(is_cr_generated(centralizer_system(*gs.F, V)));
  }
  EXPECT_TRUE(is_inductive(*gs.F));
}

TEST(Fusion, OpOfS4) {
  auto gs = setting("s4", 2);
  EXPECT_EQ(mask_order(o_p_fusion(*gs.F)), 4);
  EXPECT_TRUE(is_strongly_closed(*gs.F, o_p_fusion(*gs.F)));
  EXPECT_TRUE(is_normal_in(*gs.F, o_p_fusion(*gs.F)));
}

TEST(Fusion, HomAlgebra) {
  auto gs = setting("d8", 2);
  const PGroup& S = *gs.S;
  for (SubMask P : S.subgroups())
    for (std::uint8_t g = 0; g < 8; ++g) {
      FHom f = conjugation_hom(S, P, g);
      EXPECT_TRUE(is_injective_hom(S, f));
      EXPECT_EQ(compose_hom(f, inverse_hom(f)), identity_hom(P));
      EXPECT_EQ(f.image(), S.conjugate(P, g));
    }
  EXPECT_THROW(restrict_hom(identity_hom(1), S.all()), InputError);
}

TEST(Fusion, QuotientFusionCheckOnC6) {
  auto gs = setting("c6", 2);
  auto L = locality_from_group(gs, {gs.S->all()});
  ThetaResult t = theta_quotient(*L);
  auto Fbar = fusion_of(*t.quotient.lbar);
  EXPECT_TRUE(quotient_fusion_check(t.quotient.sigma, *gs.F, Fbar).passed());
  EXPECT_TRUE(fusion_equal_via(t.quotient.sigma, *gs.F, Fbar));
}
