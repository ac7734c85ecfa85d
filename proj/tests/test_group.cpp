#include <gtest/gtest.h>

#include <map>
#include <set>

#include "llab/errors.hpp"
#include "llab/group.hpp"
#include "llab/pgroup.hpp"

using namespace llab;

namespace {

FiniteGroup sym(std::size_t n) {
  Perm t(n), c(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = static_cast<std::uint32_t>(i);
    c[i] = static_cast<std::uint32_t>((i + 1) % n);
  }
  std::swap(t[0], t[1]);
  return FiniteGroup::from_generators(n, {t, c});
}

FiniteGroup d8() { return FiniteGroup::from_generators(4, {{1, 2, 3, 0}, {3, 2, 1, 0}}); }

// every subset closed under products, found by brute force over generating pairs
std::set<ElemSet> subgroups_by_pairs(const FiniteGroup& G) {
  std::set<ElemSet> out;
  for (Elem a = 0; a < G.order(); ++a)
    for (Elem b = a; b < G.order(); ++b) out.insert(generate(G, {a, b}).bits);
  return out;
}

}  // namespace

TEST(Perm, ComposeFirstThenSecond) {
  Perm a{1, 0, 2}, b{0, 2, 1};
  // 0 -a-> 1 -b-> 2
  EXPECT_EQ(compose(a, b), (Perm{2, 0, 1}));
  EXPECT_EQ(compose(a, invert(a)), (Perm{0, 1, 2}));
  EXPECT_TRUE(is_valid_perm({2, 0, 1}, 3));
  EXPECT_FALSE(is_valid_perm({0, 0, 1}, 3));
  EXPECT_FALSE(is_valid_perm({0, 1}, 3));
}

TEST(FiniteGroup, OrdersAndIdentity) {
  EXPECT_EQ(sym(3).order(), 6u);
  EXPECT_EQ(sym(4).order(), 24u);
  EXPECT_EQ(sym(5).order(), 120u);
  auto G = sym(4);
  for (Elem g = 0; g < G.order(); ++g) {
    EXPECT_EQ(G.mul(0, g), g);
    EXPECT_EQ(G.mul(g, G.inv(g)), 0u);
  }
}

TEST(FiniteGroup, MultiplicationMatchesPerms) {
  auto G = sym(4);
  for (Elem a = 0; a < G.order(); ++a)
    for (Elem b = 0; b < G.order(); ++b) EXPECT_EQ(G.perm(G.mul(a, b)), compose(G.perm(a), G.perm(b)));
}

TEST(FiniteGroup, ConjugationConvention) {
  auto G = sym(4);
  for (Elem x = 0; x < G.order(); ++x)
    for (Elem g = 0; g < G.order(); ++g)
      EXPECT_EQ(G.perm(G.conj(x, g)), compose(compose(invert(G.perm(g)), G.perm(x)), G.perm(g)));
}

TEST(FiniteGroup, FromTable) {
  std::vector<Elem> t = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  auto C3 = FiniteGroup::from_table(3, t);
  EXPECT_EQ(C3.order(), 3u);
  EXPECT_EQ(C3.elem_order(1), 3u);
  EXPECT_EQ(C3.inv(1), 2u);
}

TEST(Subgroups, AllSubgroupsMatchBruteForce) {
  for (auto G : {sym(3), sym(4), d8()}) {
    auto subs = all_subgroups(G);
    std::set<ElemSet> got;
    for (const auto& H : subs) {
      EXPECT_TRUE(is_subgroup(G, H.bits));
      got.insert(H.bits);
    }
    // every subgroup of these groups is 2-generated
    EXPECT_EQ(got, subgroups_by_pairs(G));
  }
  EXPECT_EQ(all_subgroups(sym(4)).size(), 30u);
}

TEST(Subgroups, NormalizerCentralizerBruteForce) {
  auto G = sym(4);
  for (const auto& H : all_subgroups(G)) {
    ElemSet n = G.empty_set(), c = G.empty_set();
    for (Elem g = 0; g < G.order(); ++g) {
      bool norm = true, cent = true;
      for (Elem h : H.members()) {
        if (!H.contains(G.conj(h, g))) norm = false;
        if (G.mul(h, g) != G.mul(g, h)) cent = false;
      }
      n[g] = norm;
      c[g] = cent;
    }
    EXPECT_EQ(normalizer(G, H).bits, n);
    EXPECT_EQ(centralizer(G, H).bits, c);
  }
}

TEST(Subgroups, SylowAndCores) {
  auto G = sym(4);
  EXPECT_EQ(sylow_p(G, 2).order(), 8u);
  EXPECT_EQ(sylow_p(G, 3).order(), 3u);
  EXPECT_EQ(big_o_p(G, 2).order(), 4u);
  EXPECT_EQ(big_o_p(G, 3).order(), 1u);
  EXPECT_EQ(o_pprime_core(G, 2).order(), 1u);
  EXPECT_TRUE(is_characteristic_p(G, 2));
  EXPECT_FALSE(is_characteristic_p(G, 3));
  auto C6 = FiniteGroup::from_generators(6, {{1, 2, 3, 4, 5, 0}});
  EXPECT_EQ(o_pprime_core(C6, 2).order(), 3u);
  EXPECT_FALSE(is_characteristic_p(C6, 2));
  EXPECT_EQ(p_part(24, 2), 8u);
  EXPECT_EQ(p_part(120, 5), 5u);
}

TEST(Subgroups, NormalClosure) {
  auto G = sym(4);
  Elem t = 0;
  for (Elem g = 1; g < G.order(); ++g)
    if (G.elem_order(g) == 2 && cycle_string(G.perm(g)).size() == 5) t = g;  // a transposition "(a b)"
  ASSERT_NE(t, 0u);
  EXPECT_EQ(normal_closure(G, {t}).order(), 24u);
}

TEST(Primes, IsPrime) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(5));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(9));
}

TEST(PGroup, LatticeOfD8) {
  PGroup S(d8(), 2);
  EXPECT_EQ(S.subgroups().size(), 10u);
  std::map<int, int> by_order;
  for (SubMask P : S.subgroups()) by_order[mask_order(P)]++;
  EXPECT_EQ(by_order[1], 1);
  EXPECT_EQ(by_order[2], 5);
  EXPECT_EQ(by_order[4], 3);
  EXPECT_EQ(by_order[8], 1);
  EXPECT_EQ(mask_order(S.center(S.all())), 2);
  for (std::size_t i = 1; i < S.subgroups().size(); ++i)
    EXPECT_TRUE(canonical_less(S.subgroups()[i - 1], S.subgroups()[i]));
}

TEST(PGroup, JoinAndConjugate) {
  PGroup S(d8(), 2);
  for (SubMask a : S.subgroups())
    for (SubMask b : S.subgroups()) {
      SubMask j = S.join(a, b);
      EXPECT_TRUE(S.is_subgroup(j));
      EXPECT_TRUE(mask_le(a, j) && mask_le(b, j));
      for (SubMask c : S.subgroups())
        if (mask_le(a, c) && mask_le(b, c)) EXPECT_TRUE(mask_le(j, c));
    }
  for (SubMask P : S.subgroups())
    for (std::uint8_t g = 0; g < 8; ++g) EXPECT_EQ(mask_order(S.conjugate(P, g)), mask_order(P));
}

TEST(Caps, ParseAndReject) {
  Caps c;
  apply_caps_string("group=100,maps=5", c);
  EXPECT_EQ(c.group_order, 100u);
  EXPECT_EQ(c.stored_maps, 5u);
  EXPECT_THROW(apply_caps_string("bogus=1", c), InputError);
  EXPECT_THROW(apply_caps_string("group=x", c), InputError);
}

TEST(Caps, GroupOrderCapEnforced) {
  Caps saved = caps();
  caps().group_order = 10;
  EXPECT_THROW(sym(4), CapError);
  caps() = saved;
  EXPECT_EQ(sym(4).order(), 24u);
}
