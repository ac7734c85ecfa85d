#include "llab/partial_group.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include "llab/errors.hpp"

namespace llab {

std::string word_string(const Word& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

void PartialGroup::for_each_domain_word(std::size_t max_len, const std::function<void(const Word&)>& f) const {
  Word w;
  std::function<void()> rec = [&] {
    for (Elem g = 0; g < size(); ++g) {
      w.push_back(g);
      if (in_domain(w)) {
        f(w);
        if (w.size() < max_len) rec();
      }
      w.pop_back();
    }
  };
  if (max_len > 0) rec();
}

Elem PartialGroup::product(const Word& w) const {
  if (auto r = try_product(w)) return *r;
  Word prefix;
  for (Elem g : w) {
    prefix.push_back(g);
    if (!in_domain(prefix)) throw DomainError("word " + word_string(w) + " outside the domain; first failing prefix " + word_string(prefix));
  }
  throw DomainError("product of " + word_string(w) + " cannot be formed");
}

Word PartialGroup::inverse_word(const Word& w) const {
  Word r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(inverse(*it));
  return r;
}

namespace {

struct ViolationLog {
  AxiomReport& rep;
  void add(const std::string& what, const Word& w) {
    ++rep.violation_count;
    if (rep.violations.size() < 10) rep.violations.push_back(what + " at " + word_string(w));
  }
};

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace

AxiomReport check_axioms(const PartialGroup& L, std::size_t max_len) {
  AxiomReport rep;
  ViolationLog log{rep};
  if (!L.in_domain({}) || L.try_product({}) != L.identity()) log.add("empty word", {});
  for (Elem g = 0; g < L.size(); ++g) {
    if (!L.in_domain({g}) || L.try_product({g}) != g) log.add("length-1 word", {g});
    if (L.inverse(L.inverse(g)) != g) log.add("inversion not an involution", {g});
  }
  L.for_each_domain_word(max_len, [&](const Word& w) {
    ++rep.words_checked;
    auto pw = L.try_product(w);
    if (!pw) {
      log.add("product undefined on domain word", w);
      return;
    }
    std::size_t n = w.size();
    for (std::size_t k = 1; k < n; ++k) {
      if (!L.in_domain(Word(w.begin(), w.begin() + k)) || !L.in_domain(Word(w.begin() + k, w.end())))
        log.add("domain not closed under decomposition", w);
    }
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i; j <= n; ++j) {
        Word v(w.begin() + i, w.begin() + j);
        auto pv = L.try_product(v);
        if (!pv) {
          log.add("subword product undefined", w);
          continue;
        }
        Word u(w.begin(), w.begin() + i);
        u.push_back(*pv);
        u.insert(u.end(), w.begin() + j, w.end());
        auto pu = L.try_product(u);
        if (!pu || *pu != *pw) log.add("associativity", w);
      }
    Word iw = L.inverse_word(w);
    auto pi = L.try_product(concat(iw, w));
    if (!pi || *pi != L.identity()) log.add("inverse word", w);
    auto pinv = L.try_product(iw);
    if (!pinv || *pinv != L.inverse(*pw)) log.add("inversion of products", w);
  });
  return rep;
}

bool is_partial_subgroup(const PartialGroup& L, const ElemSet& H) {
  if (!H.test(L.identity())) return false;
  auto m = members_of(H);
  for (Elem a : m) {
    if (!H.test(L.inverse(a))) return false;
    for (Elem b : m)
      if (auto c = L.try_mul(a, b); c && !H.test(*c)) return false;
  }
  return true;
}

ElemSet generated_subgroup(const PartialGroup& L, const ElemSet& X) {
  ElemSet H = L.empty_set();
  std::vector<Elem> list;
  auto add = [&](Elem g) {
    if (!H.test(g)) {
      H.set(g);
      list.push_back(g);
    }
  };
  add(L.identity());
  for (Elem g : members_of(X)) {
    add(g);
    add(L.inverse(g));
  }
  for (std::size_t k = 0; k < list.size(); ++k) {
    Elem a = list[k];
    for (std::size_t j = 0; j <= k; ++j) {
      Elem b = list[j];
      if (auto c = L.try_mul(a, b)) add(*c);
      if (auto c = L.try_mul(b, a)) add(*c);
    }
  }
  return H;
}

bool is_partial_normal(const PartialGroup& L, const ElemSet& N) {
  if (!is_partial_subgroup(L, N)) return false;
  for (Elem x : members_of(N))
    for (Elem g = 0; g < L.size(); ++g)
      if (auto c = L.try_product({L.inverse(g), x, g}); c && !N.test(*c)) return false;
  return true;
}

ElemSet conjugation_closure_step(const PartialGroup& L, const ElemSet& X) {
  ElemSet out = X;
  for (Elem x : members_of(X))
    for (Elem g = 0; g < L.size(); ++g)
      if (auto c = L.try_product({L.inverse(g), x, g})) out.set(*c);
  return out;
}

ElemSet normal_closure(const PartialGroup& L, const ElemSet& X) {
  ElemSet cur = generated_subgroup(L, X);
  while (true) {
    ElemSet next = generated_subgroup(L, conjugation_closure_step(L, cur));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

std::vector<ElemSet> all_partial_normal_subgroups(const PartialGroup& L) {
  if (L.size() > caps().partial_normal_elements)
    throw CapError("partial normal subgroup search over " + std::to_string(L.size()) + " elements exceeds cap");
  std::vector<ElemSet> principal;
  {
    std::set<ElemSet> seen;
    for (Elem x = 0; x < L.size(); ++x) {
      ElemSet X = L.empty_set();
      X.set(x);
      ElemSet N = normal_closure(L, X);
      if (seen.insert(N).second) principal.push_back(N);
    }
  }
  ElemSet one = L.empty_set();
  one.set(L.identity());
  std::set<ElemSet> found{one};
  std::vector<ElemSet> queue{one};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& P : principal) {
      if (P.is_subset_of(queue[k])) continue;
      ElemSet J = normal_closure(L, queue[k] | P);
      if (found.insert(J).second) queue.push_back(J);
    }
  }
  std::vector<ElemSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return members_of(a) < members_of(b);
  });
  return out;
}

Word PGHom::apply(const Word& w) const {
  Word r;
  r.reserve(w.size());
  for (Elem g : w) r.push_back(map[g]);
  return r;
}

HomReport check_homomorphism(const PGHom& h, std::size_t max_len) {
  HomReport rep;
  if (h.map.size() != h.source->size()) {
    rep.violations.push_back("map has wrong length");
    return rep;
  }
  h.source->for_each_domain_word(max_len, [&](const Word& w) {
    ++rep.words_checked;
    Word iw = h.apply(w);
    auto p = h.target->try_product(iw);
    if (!p) {
      if (rep.violations.size() < 10) rep.violations.push_back("image of domain word " + word_string(w) + " outside the domain");
    } else if (*p != h(h.source->product(w))) {
      if (rep.violations.size() < 10) rep.violations.push_back("product not preserved at " + word_string(w));
    }
  });
  return rep;
}

ElemSet kernel(const PGHom& h) {
  ElemSet K = h.source->empty_set();
  for (Elem g = 0; g < h.source->size(); ++g)
    if (h(g) == h.target->identity()) K.set(g);
  if (!is_partial_normal(*h.source, K)) throw PropertyViolation("kernel is not a partial normal subgroup");
  return K;
}

bool is_projection(const PGHom& h, std::size_t max_len) {
  const std::uint64_t base = h.target->size() + 1;
  auto key = [&](const Word& w) {
    std::uint64_t k = 0;
    for (Elem g : w) k = k * base + g + 1;
    return k;
  };
  std::unordered_set<std::uint64_t> image;
  h.source->for_each_domain_word(max_len, [&](const Word& w) { image.insert(key(h.apply(w))); });
  bool ok = true;
  h.target->for_each_domain_word(max_len, [&](const Word& w) {
    if (ok && !image.count(key(w))) ok = false;
  });
  return ok;
}

std::string set_string(const PartialGroup& L, const ElemSet& X) {
  std::string s = "{";
  bool first = true;
  for (Elem g : members_of(X)) {
    if (!first) s += ", ";
    s += L.label(g);
    first = false;
  }
  return s + "}";
}

}  // namespace llab
