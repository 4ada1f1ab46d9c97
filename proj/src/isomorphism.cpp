#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "magnus/group.hpp"
#include "magnus/numtheory.hpp"
#include "magnus/structure.hpp"

namespace magnus {

namespace {

constexpr Elt kNone = ~Elt(0);

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

bool group_abelian(const Group& g) {
  for (Elt a : g.generators())
    for (Elt b : g.generators())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

// primary invariants of an abelian group: per prime, the partition of exponents,
// recovered from the counts of elements of order dividing p^k
std::map<std::uint64_t, std::vector<std::uint32_t>> abelian_invariants(const Group& g) {
  std::map<std::uint64_t, std::vector<std::uint32_t>> out;
  const std::size_t n = g.order();
  std::vector<std::uint64_t> ord(n);
  for (std::size_t x = 0; x < n; ++x) ord[x] = element_order(g, static_cast<Elt>(x));
  for (auto [p, e] : factorize(n)) {
    // c_k = #elements with order dividing p^k = p^{sum min(lambda_i, k)}
    std::vector<std::uint32_t> mult;  // lambda as multiset of exponents
    std::uint64_t pk = 1;
    std::uint32_t prev_log = 0;
    for (std::uint32_t k = 1; k <= e; ++k) {
      pk *= p;
      std::uint64_t c = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (pk % ord[x] == 0) ++c;
      std::uint32_t lg = 0;
      while (c > 1) c /= p, ++lg;
      // lg = sum of min(lambda_i, k); increments count parts of size >= k
      std::uint32_t parts_ge_k = lg - prev_log;
      prev_log = lg;
      for (std::uint32_t i = 0; i < parts_ge_k; ++i) {
        if (k == 1)
          mult.push_back(1);
        else
          ++mult[i];
      }
    }
    std::sort(mult.begin(), mult.end(), std::greater<>());
    if (!mult.empty()) out[p] = mult;
  }
  return out;
}

// iterated class refinement: colors stable under any isomorphism
std::vector<std::uint64_t> class_colors(const Group& g) {
  const ClassData& cd = conjugacy_classes(g);
  const std::size_t k = cd.count();
  std::vector<std::uint64_t> eo(k);
  for (std::size_t c = 0; c < k; ++c) eo[c] = element_order(g, cd.reps[c]);
  std::vector<std::uint64_t> col(k);
  for (std::size_t c = 0; c < k; ++c) col[c] = mix(mix(14695981039ull, eo[c]), cd.sizes[c]);
  for (int round = 0; round < 3; ++round) {
    std::vector<std::uint64_t> nc(k);
    for (std::size_t c = 0; c < k; ++c) {
      std::uint64_t h = col[c];
      h = mix(h, col[cd.inverse_class[c]]);
      for (std::uint32_t j : {2u, 3u, 5u, 7u})
        h = mix(h, col[cd.class_of[g.power(cd.reps[c], j)]]);
      nc[c] = h;
    }
    col = std::move(nc);
  }
  return col;
}

struct SearchState {
  const Group& g;
  const Group& h;
  const ClassData& gcd;
  const ClassData& hcd;
  std::vector<std::uint64_t> gcol, hcol;
  std::vector<Elt> gens;                        // chosen generator sequence in G
  std::vector<std::vector<Elt>> cands;          // per depth
  std::vector<Elt> img;                         // partial map G -> H
  std::vector<char> used;                       // image injectivity
  std::vector<Elt> korder;                      // BFS order of mapped G elements
  std::uint64_t nodes = 0, budget = 0;
  bool exhausted = false;

  SearchState(const Group& g_, const Group& h_)
      : g(g_), h(h_), gcd(conjugacy_classes(g_)), hcd(conjugacy_classes(h_)) {}

  // BFS-extend the partial map over <gens[0..depth]>; records newly mapped
  // elements in trail; false on contradiction or budget exhaustion
  bool close(std::size_t depth, std::vector<Elt>& trail) {
    for (std::size_t i = 0; i < korder.size(); ++i) {
      Elt x = korder[i];
      for (std::size_t t = 0; t <= depth; ++t) {
        if (++nodes > budget) {
          exhausted = true;
          return false;
        }
        Elt y = g.mul(x, gens[t]);
        Elt hy = h.mul(img[x], img[gens[t]]);
        if (img[y] != kNone) {
          if (img[y] != hy) return false;
        } else {
          if (used[hy]) return false;
          img[y] = hy;
          used[hy] = 1;
          trail.push_back(y);
          korder.push_back(y);
        }
      }
    }
    return true;
  }

  void undo(const std::vector<Elt>& trail, std::size_t korder_size) {
    for (Elt y : trail) {
      used[img[y]] = 0;
      img[y] = kNone;
    }
    korder.resize(korder_size);
  }

  bool dfs(std::size_t depth) {
    if (depth == gens.size()) return korder.size() == g.order();
    // the generator may already be mapped by the closure of earlier choices
    if (img[gens[depth]] != kNone) {
      std::vector<Elt> trail;
      std::size_t ks = korder.size();
      if (close(depth, trail) && dfs(depth + 1)) return true;
      undo(trail, ks);
      return false;
    }
    for (Elt b : cands[depth]) {
      if (used[b]) continue;
      std::vector<Elt> trail;
      std::size_t ks = korder.size();
      img[gens[depth]] = b;
      used[b] = 1;
      trail.push_back(gens[depth]);
      korder.push_back(gens[depth]);
      if (close(depth, trail) && dfs(depth + 1)) return true;
      undo(trail, ks);
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

IsoResult is_isomorphic(const Group& g, const Group& h, const limits& lim) {
  IsoResult res{iso_verdict::no, std::nullopt, 0};
  if (g.order() != h.order()) return res;
  const std::size_t n = g.order();
  if (n == 1) {
    res.verdict = iso_verdict::yes;
    res.map = GroupHom{g, h, {0}};
    return res;
  }

  bool ga = group_abelian(g), ha = group_abelian(h);
  if (ga != ha) return res;
  if (ga) {
    res.verdict =
        abelian_invariants(g) == abelian_invariants(h) ? iso_verdict::yes : iso_verdict::no;
    return res;
  }

  // fingerprints
  const ClassData& gcd = conjugacy_classes(g);
  const ClassData& hcd = conjugacy_classes(h);
  if (gcd.count() != hcd.count()) return res;
  {
    auto sizes_of = [](const ClassData& cd) {
      std::vector<std::uint32_t> s(cd.sizes);
      std::sort(s.begin(), s.end());
      return s;
    };
    if (sizes_of(gcd) != sizes_of(hcd)) return res;
    if (center(g).size() != center(h).size()) return res;
    auto ds_g = derived_series(g), ds_h = derived_series(h);
    if (ds_g.solvable != ds_h.solvable || ds_g.derived_length != ds_h.derived_length)
      return res;
    // orders of the normal closures of single classes (a normal-lattice slice)
    auto closure_orders = [](const Group& grp) {
      const ClassData& cd = conjugacy_classes(grp);
      std::vector<std::uint64_t> out;
      for (Elt c = 0; c < cd.count(); ++c) {
        std::uint64_t o = 0;
        for (Elt d : class_closure(grp, c)) o += conjugacy_classes(grp).sizes[d];
        out.push_back(o);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    if (closure_orders(g) != closure_orders(h)) return res;
  }

  SearchState st(g, h);
  st.gcol = class_colors(g);
  st.hcol = class_colors(h);
  {
    auto sg = st.gcol;
    auto sh = st.hcol;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return res;
  }

  // color buckets in H
  std::unordered_map<std::uint64_t, std::vector<Elt>> hbucket;
  for (std::size_t x = 0; x < n; ++x)
    hbucket[st.hcol[hcd.class_of[x]]].push_back(static_cast<Elt>(x));

  // greedy generator sequence minimizing candidate counts
  {
    ElementSet k(static_cast<std::uint32_t>(n));
    k.add(0);
    std::vector<Elt> members{0}, cgens;
    while (members.size() < n) {
      Elt best = kNone;
      std::size_t best_sz = ~std::size_t(0);
      for (Elt x = 1; x < n; ++x) {
        if (k.test(x)) continue;
        std::size_t sz = hbucket[st.gcol[gcd.class_of[x]]].size();
        if (sz < best_sz) {
          best_sz = sz;
          best = x;
        }
      }
      st.gens.push_back(best);
      std::array<Elt, 1> one{best};
      closure_extend(g, k, members, cgens, one);
    }
  }

  // candidate lists: first generator only needs one representative per H-class
  for (std::size_t t = 0; t < st.gens.size(); ++t) {
    std::uint64_t col = st.gcol[gcd.class_of[st.gens[t]]];
    std::vector<Elt> cand = hbucket[col];
    if (t == 0) {
      std::vector<Elt> reps;
      std::vector<char> seen(hcd.count(), 0);
      for (Elt x : cand)
        if (!seen[hcd.class_of[x]]) {
          seen[hcd.class_of[x]] = 1;
          reps.push_back(x);
        }
      cand = std::move(reps);
    }
    st.cands.push_back(std::move(cand));
  }

  st.img.assign(n, kNone);
  st.used.assign(n, 0);
  st.img[0] = 0;
  st.used[0] = 1;
  st.korder.push_back(0);
  st.budget = lim.iso_node_cap;

  bool found = st.dfs(0);
  res.nodes = st.nodes;
  if (st.exhausted) {
    res.verdict = iso_verdict::unknown;
    return res;
  }
  if (!found) return res;
  GroupHom hom{g, h, st.img};
  hom.validate();
  if (!hom.bijective()) throw error(errc::bad_parameter, "internal: iso map not bijective");
  res.verdict = iso_verdict::yes;
  res.map = std::move(hom);
  return res;
}

}  // namespace magnus
