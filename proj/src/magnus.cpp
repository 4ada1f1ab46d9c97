#include "magnus/magnus.hpp"

#include <algorithm>
#include <map>

#include "magnus/structure.hpp"

namespace magnus {

MagnusSets magnus_sets(const Group& g) {
  const ClassData& cd = conjugacy_classes(g);
  const std::size_t k = cd.count();
  MagnusSets out;

  std::vector<char> seen(k, 0);
  for (Elt c = 0; c < k; ++c) {
    if (seen[c]) continue;
    seen[c] = 1;
    Elt ic = cd.inverse_class[c];
    std::vector<Elt> cell{c};
    if (ic != c) {
      seen[ic] = 1;
      cell.push_back(ic);
    }
    out.a_cells.push_back(std::move(cell));
  }

  std::map<std::vector<Elt>, std::uint64_t> closures;  // closure -> order
  for (Elt c = 0; c < k; ++c) {
    const auto& cls = class_closure(g, c);
    auto it = closures.find(cls);
    if (it == closures.end()) {
      std::uint64_t ord = 0;
      for (Elt d : cls) ord += cd.sizes[d];
      closures.emplace(cls, ord);
    }
  }
  // canonical order: by subgroup order, then by the class-id list
  std::vector<std::pair<std::uint64_t, const std::vector<Elt>*>> sorted;
  for (const auto& [cls, ord] : closures) sorted.emplace_back(ord, &cls);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return *a.second < *b.second;
            });
  for (const auto& [ord, cls] : sorted) out.b_closures.push_back(*cls);

  // the map A -> B induced by rep -> <rep^G> is surjective by construction
  if (out.a_cells.size() < out.b_closures.size())
    throw error(errc::bad_parameter, "internal: |A| < |B| is impossible");
  return out;
}

std::vector<ElementSet> b_closure_sets(const Group& g) {
  MagnusSets ms = magnus_sets(g);
  std::vector<ElementSet> out;
  for (const auto& cls : ms.b_closures) {
    ElementSet s = expand_classes(g, cls);
    s.mark_subgroup();
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

MagnusReport compute_magnus_status(const Group& g) {
  const ClassData& cd = conjugacy_classes(g);
  const std::size_t k = cd.count();
  MagnusSets ms = magnus_sets(g);

  MagnusReport rep;
  rep.a_count = ms.a_cells.size();
  rep.b_count = ms.b_closures.size();
  rep.mp = rep.a_count == rep.b_count;
  rep.all_real = true;
  for (Elt c = 0; c < k; ++c)
    if (cd.inverse_class[c] != c) {
      rep.all_real = false;
      break;
    }
  rep.smp = rep.mp && rep.all_real;

  // witness: least class pair sharing a closure without being inverse-paired
  if (!rep.mp) {
    // closure ids per class
    std::map<std::vector<Elt>, Elt> closure_id;
    for (Elt i = 0; i < ms.b_closures.size(); ++i) closure_id[ms.b_closures[i]] = i;
    std::vector<Elt> cid(k);
    for (Elt c = 0; c < k; ++c) cid[c] = closure_id.at(class_closure(g, c));
    bool found = false;
    for (Elt c1 = 0; c1 < k && !found; ++c1)
      for (Elt c2 = 0; c2 < k; ++c2) {
        if (c2 == c1 || c2 == cd.inverse_class[c1] || cid[c1] != cid[c2]) continue;
        rep.witness_classes = {c1, c2};
        rep.witness = {cd.reps[c1], cd.reps[c2]};
        found = true;
        break;
      }
    if (!found)
      throw error(errc::bad_parameter, "internal: |A| != |B| without a witness pair");
  }

  // self-check below the oracle cap: the counting verdict must agree with the
  // pairwise definition evaluated over all class-representative pairs
  if (g.order() <= g.caps().oracle_cap) {
    std::map<std::vector<Elt>, Elt> closure_id;
    for (Elt i = 0; i < ms.b_closures.size(); ++i) closure_id[ms.b_closures[i]] = i;
    std::vector<Elt> cid(k);
    for (Elt c = 0; c < k; ++c) cid[c] = closure_id.at(class_closure(g, c));
    bool pairwise_mp = true, pairwise_smp = true;
    for (Elt c1 = 0; c1 < k; ++c1)
      for (Elt c2 = 0; c2 < k; ++c2) {
        if (cid[c1] != cid[c2]) continue;
        if (c1 != c2) pairwise_smp = false;
        if (c1 != c2 && c2 != cd.inverse_class[c1]) pairwise_mp = false;
      }
    pairwise_smp = pairwise_mp && pairwise_smp;
    if (pairwise_mp != rep.mp || pairwise_smp != rep.smp)
      throw error(errc::bad_parameter,
                  "internal: counting criterion disagrees with the pairwise definition");
  }
  return rep;
}

}  // namespace

const MagnusReport& magnus_status(const Group& g) {
  auto& caches = g.caches();
  {
    std::lock_guard lock(caches.mu);
    if (caches.magnus) return *caches.magnus;
  }
  auto rep = std::make_shared<const MagnusReport>(compute_magnus_status(g));
  std::lock_guard lock(caches.mu);
  if (!caches.magnus) caches.magnus = std::move(rep);
  return *caches.magnus;
}

}  // namespace magnus
