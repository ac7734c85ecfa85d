#include "llab/group.hpp"

#include <algorithm>
#include <boost/functional/hash.hpp>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "llab/errors.hpp"

namespace llab {

namespace {
constexpr std::size_t kTableLimit = 2048;

struct BitsHash {
  std::size_t operator()(const ElemSet& b) const {
    std::vector<ElemSet::block_type> blocks;
    boost::to_block_range(b, std::back_inserter(blocks));
    return boost::hash_range(blocks.begin(), blocks.end());
  }
};
}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_valid_perm(const Perm& g, std::size_t degree) {
  if (g.size() != degree) return false;
  std::vector<char> seen(degree, 0);
  for (auto x : g) {
    if (x >= degree || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm invert(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
  return r;
}

std::string cycle_string(const Perm& g) {
  std::string out;
  std::vector<char> done(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (done[i] || g[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = g[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<Elem> members_of(const ElemSet& s) {
  std::vector<Elem> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElemSet::npos; i = s.find_next(i)) out.push_back(static_cast<Elem>(i));
  return out;
}

std::size_t FiniteGroup::PermHash::operator()(const Perm& g) const {
  return boost::hash_range(g.begin(), g.end());
}

FiniteGroup FiniteGroup::from_generators(std::size_t degree, const std::vector<Perm>& gens) {
  for (const auto& g : gens)
    if (!is_valid_perm(g, degree)) throw InputError("generator is not a permutation of degree " + std::to_string(degree));
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::unordered_set<Perm, PermHash> seen{id};
  std::vector<Perm> all{id};
  for (std::size_t k = 0; k < all.size(); ++k) {
    for (const auto& s : gens) {
      Perm c = compose(all[k], s);
      if (seen.insert(c).second) {
        all.push_back(std::move(c));
        if (all.size() > caps().group_order)
          throw CapError("group order exceeds cap " + std::to_string(caps().group_order));
      }
    }
  }
  std::sort(all.begin(), all.end());
  FiniteGroup G;
  G.n_ = all.size();
  G.degree_ = degree;
  G.perms_ = std::move(all);
  for (std::size_t i = 0; i < G.n_; ++i) G.index_.emplace(G.perms_[i], static_cast<Elem>(i));
  G.inv_.resize(G.n_);
  for (std::size_t i = 0; i < G.n_; ++i) G.inv_[i] = G.index_.at(invert(G.perms_[i]));
  if (G.n_ <= kTableLimit) {
    G.table_.resize(G.n_ * G.n_);
    for (std::size_t a = 0; a < G.n_; ++a)
      for (std::size_t b = 0; b < G.n_; ++b) G.table_[a * G.n_ + b] = G.slow_mul(a, b);
  }
  return G;
}

FiniteGroup FiniteGroup::from_table(std::size_t n, std::vector<Elem> table, std::vector<std::string> labels) {
  if (n == 0 || table.size() != n * n) throw InputError("bad Cayley table size");
  FiniteGroup G;
  G.n_ = n;
  G.table_ = std::move(table);
  for (std::size_t a = 0; a < n; ++a) {
    if (G.table_[a] != a || G.table_[a * n] != a) throw InputError("element 0 is not the identity");
    for (std::size_t b = 0; b < n; ++b)
      if (G.table_[a * n + b] >= n) throw InputError("Cayley table entry out of range");
  }
  G.inv_.assign(n, kNone);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (G.table_[a * n + b] == 0) G.inv_[a] = static_cast<Elem>(b);
  for (auto v : G.inv_)
    if (v == kNone) throw InputError("Cayley table has an element without inverse");
  G.labels_ = std::move(labels);
  return G;
}

Elem FiniteGroup::slow_mul(Elem a, Elem b) const { return index_.at(compose(perms_[a], perms_[b])); }

std::optional<Elem> FiniteGroup::find(const Perm& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem FiniteGroup::power(Elem a, std::size_t k) const {
  Elem r = 0;
  for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::elem_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::string FiniteGroup::label(Elem g) const {
  if (has_perms()) return cycle_string(perms_[g]);
  if (g < labels_.size()) return labels_[g];
  return "#" + std::to_string(g);
}

Subgroup trivial_subgroup(const FiniteGroup& G) {
  Subgroup H{G.empty_set()};
  H.bits.set(0);
  return H;
}

Subgroup whole_group(const FiniteGroup& G) {
  Subgroup H{G.empty_set()};
  H.bits.set();
  return H;
}

Subgroup generate(const FiniteGroup& G, const std::vector<Elem>& gens) {
  Subgroup H = trivial_subgroup(G);
  std::vector<Elem> list{0};
  for (std::size_t k = 0; k < list.size(); ++k) {
    for (Elem s : gens) {
      Elem c = G.mul(list[k], s);
      if (!H.bits.test(c)) {
        H.bits.set(c);
        list.push_back(c);
      }
    }
  }
  return H;
}

bool is_subgroup(const FiniteGroup& G, const ElemSet& s) {
  if (s.size() != G.order() || !s.test(0)) return false;
  auto m = members_of(s);
  for (Elem a : m) {
    if (!s.test(G.inv(a))) return false;
    for (Elem b : m)
      if (!s.test(G.mul(a, b))) return false;
  }
  return true;
}

std::vector<Elem> generators_of(const FiniteGroup& G, const Subgroup& H) {
  std::vector<Elem> gens;
  Subgroup cur = trivial_subgroup(G);
  for (Elem g : H.members()) {
    if (cur.contains(g)) continue;
    gens.push_back(g);
    cur = generate(G, gens);
  }
  return gens;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
  // one generator per cyclic subgroup
  std::vector<Elem> cyclic_reps;
  {
    std::unordered_set<ElemSet, BitsHash> seen;
    for (Elem g = 0; g < G.order(); ++g)
      if (seen.insert(generate(G, {g}).bits).second) cyclic_reps.push_back(g);
  }
  std::vector<Subgroup> out{trivial_subgroup(G)};
  std::vector<std::vector<Elem>> gens{{}};
  std::unordered_set<ElemSet, BitsHash> seen{out[0].bits};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (Elem g : cyclic_reps) {
      if (out[k].contains(g)) continue;
      auto ng = gens[k];
      ng.push_back(g);
      Subgroup K = generate(G, ng);
      if (seen.insert(K.bits).second) {
        out.push_back(std::move(K));
        gens.push_back(std::move(ng));
        if (out.size() > caps().subgroup_count)
          throw CapError("subgroup count exceeds cap " + std::to_string(caps().subgroup_count));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return members_of(a.bits) < members_of(b.bits);
  });
  return out;
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
  Subgroup N{G.empty_set()};
  auto gens = generators_of(G, H);
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem h : gens)
      if (!H.contains(G.conj(h, g))) {
        ok = false;
        break;
      }
    if (ok) N.bits.set(g);
  }
  return N;
}

Subgroup centralizer(const FiniteGroup& G, const Subgroup& H) {
  Subgroup C{G.empty_set()};
  auto gens = generators_of(G, H);
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem h : gens)
      if (G.mul(h, g) != G.mul(g, h)) {
        ok = false;
        break;
      }
    if (ok) C.bits.set(g);
  }
  return C;
}

Subgroup conjugate(const FiniteGroup& G, const Subgroup& H, Elem g) {
  Subgroup K{G.empty_set()};
  for (Elem h : H.members()) K.bits.set(G.conj(h, g));
  return K;
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) { return normalizer(G, H).order() == G.order(); }

Subgroup normal_closure(const FiniteGroup& G, const std::vector<Elem>& xs) {
  std::vector<Elem> gens;
  std::set<Elem> seen;
  for (Elem x : xs)
    for (Elem g = 0; g < G.order(); ++g)
      if (seen.insert(G.conj(x, g)).second) gens.push_back(G.conj(x, g));
  return generate(G, gens);
}

std::size_t p_part(std::size_t n, int p) {
  std::size_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

Subgroup sylow_p(const FiniteGroup& G, int p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  std::size_t target = p_part(G.order(), p);
  Subgroup P = trivial_subgroup(G);
  std::vector<Elem> gens;
  while (P.order() < target) {
    Subgroup N = normalizer(G, P);
    bool grew = false;
    for (Elem g : N.members()) {
      if (P.contains(g) || !P.contains(G.power(g, p))) continue;
      gens.push_back(g);
      P = generate(G, gens);
      grew = true;
      break;
    }
    if (!grew) throw PropertyViolation("Sylow search stalled");
  }
  return P;
}

Subgroup big_o_p(const FiniteGroup& G, int p) {
  Subgroup S = sylow_p(G, p);
  Subgroup O = S;
  for (Elem g = 0; g < G.order(); ++g) O.bits &= conjugate(G, S, g).bits;
  return O;
}

Subgroup o_pprime_core(const FiniteGroup& G, int p) {
  std::vector<Elem> gens;
  for (Elem g = 0; g < G.order(); ++g) {
    if (G.elem_order(g) % p == 0) continue;
    Subgroup C = normal_closure(G, {g});
    if (C.order() % p != 0) gens.push_back(g);
  }
  return normal_closure(G, gens);
}

bool is_characteristic_p(const FiniteGroup& G, int p) {
  Subgroup O = big_o_p(G, p);
  return centralizer(G, O).is_sub_of(O);
}

Subgroup commutator_centralizer(const FiniteGroup& G, int p, const Subgroup& V) {
  if (!is_characteristic_p(G, p)) throw InputError("group is not of characteristic p");
  if (!is_normal(G, V) || p_part(V.order(), p) != V.order()) throw InputError("V is not a normal p-subgroup");
  Subgroup O = big_o_p(G, p);
  Subgroup C = centralizer(G, V);
  Subgroup X{G.empty_set()};
  auto o = O.members();
  for (Elem x : C.members()) {
    bool ok = true;
    for (Elem a : o) {
      // [a, x] = a^-1 x^-1 a x
      Elem c = G.mul(G.mul(G.inv(a), G.inv(x)), G.mul(a, x));
      if (!V.contains(c)) {
        ok = false;
        break;
      }
    }
    if (ok) X.bits.set(x);
  }
  if (!is_subgroup(G, X.bits) || !is_normal(G, X) || p_part(X.order(), p) != X.order())
    throw PropertyViolation("commutator centralizer is not a normal p-subgroup");
  return X;
}

FiniteGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H, std::vector<Elem>* embed) {
  auto m = H.members();
  std::vector<Elem> pos(G.order(), kNone);
  for (std::size_t i = 0; i < m.size(); ++i) pos[m[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(m.size() * m.size());
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m.size(); ++a) {
    labels.push_back(G.label(m[a]));
    for (std::size_t b = 0; b < m.size(); ++b) table[a * m.size() + b] = pos[G.mul(m[a], m[b])];
  }
  if (embed) *embed = m;
  return FiniteGroup::from_table(m.size(), std::move(table), std::move(labels));
}

}  // namespace llab
