#pragma once

// Independent brute-force oracles. These deliberately avoid the library's
// class-product and join-closure machinery so that tests compare two routes.

#include <algorithm>
#include <set>
#include <vector>

#include "magnus/group.hpp"

namespace oracles {

using magnus::ElementSet;
using magnus::Elt;
using magnus::Group;

// every subgroup by subset enumeration; |G| <= 16
inline std::vector<ElementSet> all_subgroups_subsets(const Group& g) {
  const std::size_t n = g.order();
  std::vector<ElementSet> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1)) continue;  // must contain the identity
    std::vector<Elt> elems;
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask & (1u << i)) elems.push_back(i);
    bool closed = true;
    for (Elt a : elems) {
      if (!(mask & (1u << g.inv(a)))) closed = false;
      for (Elt b : elems)
        if (!(mask & (1u << g.mul(a, b)))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (!closed) continue;
    ElementSet s(static_cast<std::uint32_t>(n));
    for (Elt e : elems) s.add(e);
    out.push_back(std::move(s));
  }
  return out;
}

// conjugacy classes by the n^2 definition
inline std::vector<std::vector<Elt>> classes_bruteforce(const Group& g) {
  const std::size_t n = g.order();
  std::vector<char> done(n, 0);
  std::vector<std::vector<Elt>> out;
  for (Elt x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::set<Elt> cls;
    for (Elt y = 0; y < n; ++y) cls.insert(g.conj(x, y));
    std::vector<Elt> v(cls.begin(), cls.end());
    for (Elt e : v) done[e] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

// normal closure by element-level fixpoint: close under products and under
// conjugation by every group element
inline ElementSet normal_closure_bruteforce(const Group& g, std::vector<Elt> seed) {
  const std::size_t n = g.order();
  ElementSet in(static_cast<std::uint32_t>(n));
  in.add(0);
  std::vector<Elt> members{0};
  for (Elt s : seed)
    if (!in.test(s)) {
      in.add(s);
      members.push_back(s);
    }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elt> snapshot = members;
    for (Elt a : snapshot) {
      for (Elt b : snapshot) {
        Elt c = g.mul(a, b);
        if (!in.test(c)) {
          in.add(c);
          members.push_back(c);
          grew = true;
        }
      }
      for (Elt y = 0; y < n; ++y) {
        Elt c = g.conj(a, y);
        if (!in.test(c)) {
          in.add(c);
          members.push_back(c);
          grew = true;
        }
      }
    }
  }
  in.mark_subgroup();
  return in;
}

// the pairwise MP/SMP definition over class representatives, on top of the
// brute-force classes and closures above
struct PairwiseVerdict {
  bool mp = true, smp = true;
};

inline PairwiseVerdict magnus_pairwise(const Group& g) {
  auto classes = classes_bruteforce(g);
  std::vector<ElementSet> closures;
  for (const auto& c : classes) closures.push_back(normal_closure_bruteforce(g, {c[0]}));
  // inverse pairing between classes
  auto class_of = [&](Elt x) {
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (std::binary_search(classes[i].begin(), classes[i].end(), x)) return i;
    return std::size_t(-1);
  };
  PairwiseVerdict v;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (!(closures[i] == closures[j])) continue;
      if (i != j) v.smp = false;
      if (i != j && j != class_of(g.inv(classes[i][0]))) v.mp = false;
    }
  v.smp = v.smp && v.mp;
  return v;
}

// element-BFS pairwise oracle usable up to the spec's 2000-element cap:
// closures via multiplication and generator-conjugation BFS (still independent
// of the class-product route used by the library)
inline ElementSet normal_closure_genbfs(const Group& g, Elt x) {
  ElementSet in(static_cast<std::uint32_t>(g.order()));
  in.add(0);
  std::vector<Elt> members{0}, gens;
  if (x != 0) {
    gens.push_back(x);
    in.add(x);
    members.push_back(x);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    // close under multiplication
    for (std::size_t qi = 0; qi < members.size(); ++qi)
      for (Elt ge : gens) {
        Elt y = g.mul(members[qi], ge);
        if (!in.test(y)) {
          in.add(y);
          members.push_back(y);
          grew = true;
        }
      }
    // close generators under conjugation by the group's generators
    std::vector<Elt> extra;
    for (Elt t : gens)
      for (Elt ge : g.generators()) {
        Elt y = g.conj(t, ge);
        if (!in.test(y)) extra.push_back(y);
      }
    for (Elt y : extra)
      if (!in.test(y)) {
        gens.push_back(y);
        in.add(y);
        members.push_back(y);
        grew = true;
      }
  }
  in.mark_subgroup();
  return in;
}

inline PairwiseVerdict magnus_pairwise_midsize(const Group& g) {
  const magnus::ClassData& cd = magnus::conjugacy_classes(g);
  std::vector<std::uint64_t> keys(cd.count());
  std::vector<ElementSet> closures;
  for (Elt c = 0; c < cd.count(); ++c) closures.push_back(normal_closure_genbfs(g, cd.reps[c]));
  PairwiseVerdict v;
  for (Elt i = 0; i < cd.count(); ++i)
    for (Elt j = 0; j < cd.count(); ++j) {
      if (!(closures[i] == closures[j])) continue;
      if (i != j) v.smp = false;
      if (i != j && j != cd.inverse_class[i]) v.mp = false;
    }
  v.smp = v.smp && v.mp;
  return v;
}

}  // namespace oracles
