#include "magnus/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "magnus/numtheory.hpp"
#include "magnus/structure.hpp"

namespace magnus {

namespace {

struct MaskKey {
  std::uint64_t hash;
  bool operator==(const MaskKey& o) const { return hash == o.hash; }
};

}  // namespace

SubgroupLattice compute_subgroup_lattice(const Group& g, exec mode) {
  const limits& lim = g.caps();
  const std::size_t n = g.order();
  if (n > lim.lattice_order_cap)
    throw error(errc::order_cap_exceeded,
                "order " + std::to_string(n) + " exceeds the full-lattice cap " +
                    std::to_string(lim.lattice_order_cap));

  SubgroupLattice lat;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index;  // hash -> ids

  auto find_item = [&](const ElementSet& s) -> std::int64_t {
    auto it = index.find(s.hash());
    if (it == index.end()) return -1;
    for (std::uint32_t id : it->second)
      if (lat.items[id].set == s) return id;
    return -1;
  };
  auto add_item = [&](ElementSet s, std::vector<Elt> gens) -> std::uint32_t {
    std::int64_t found = find_item(s);
    if (found >= 0) return static_cast<std::uint32_t>(found);
    if (lat.items.size() >= lim.subgroup_count_cap)
      throw error(errc::subgroup_count_cap_exceeded, "subgroup count exceeds cap");
    Subgroup sub;
    sub.order = s.size();
    sub.set = std::move(s);
    sub.set.mark_subgroup();
    sub.gens = std::move(gens);
    lat.items.push_back(std::move(sub));
    index[lat.items.back().set.hash()].push_back(
        static_cast<std::uint32_t>(lat.items.size() - 1));
    return static_cast<std::uint32_t>(lat.items.size() - 1);
  };

  {
    ElementSet triv(static_cast<std::uint32_t>(n));
    triv.add(0);
    add_item(std::move(triv), {});
  }

  // atoms: distinct cyclic subgroups of prime-power order (they generate
  // every subgroup: each element splits into its prime-power parts)
  std::vector<std::uint32_t> atom_ids;
  {
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> seen;
    for (Elt x = 1; x < n; ++x) {
      std::uint64_t o = element_order(g, x);
      if (factorize(o).size() != 1) continue;
      std::array<Elt, 1> seed{x};
      ElementSet s = closure_of(g, seed);
      std::int64_t found = find_item(s);
      if (found >= 0) continue;
      std::uint32_t id = add_item(std::move(s), {x});
      atom_ids.push_back(id);
    }
    (void)seen;
  }

  // frontier BFS; closures of (subgroup, atom) tasks run in parallel, merge serial
  std::size_t layer_begin = 0;
  // extension edges: per item, the ids of all one-atom extensions (for covers)
  std::vector<std::vector<std::uint32_t>> ext(lat.items.size());
  while (layer_begin < lat.items.size()) {
    std::size_t layer_end = lat.items.size();
    struct Task {
      std::uint32_t item, atom;
    };
    std::vector<Task> tasks;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      if (lat.items[i].order == n) continue;
      for (std::uint32_t a : atom_ids)
        if (!lat.items[a].set.subset_of(lat.items[i].set)) tasks.push_back(
            {static_cast<std::uint32_t>(i), a});
    }
    std::vector<ElementSet> results(tasks.size());
    std::vector<std::vector<Elt>> rgens(tasks.size());
    par_for(mode, tasks.size(), [&](std::size_t t) {
      std::vector<Elt> seed = lat.items[tasks[t].item].gens;
      seed.insert(seed.end(), lat.items[tasks[t].atom].gens.begin(),
                  lat.items[tasks[t].atom].gens.end());
      results[t] = closure_of(g, seed, &rgens[t]);
    });
    ext.resize(lat.items.size());
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      std::uint32_t id = add_item(std::move(results[t]), std::move(rgens[t]));
      ext.resize(lat.items.size());
      ext[tasks[t].item].push_back(id);
    }
    layer_begin = layer_end;
  }

  // canonical sort, remapping the extension edges
  std::vector<std::uint32_t> perm(lat.items.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (lat.items[a].order != lat.items[b].order)
      return lat.items[a].order < lat.items[b].order;
    return lat.items[a].set.lex_less(lat.items[b].set);
  });
  std::vector<std::uint32_t> where(lat.items.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) where[perm[i]] = i;
  {
    std::vector<Subgroup> sorted;
    sorted.reserve(lat.items.size());
    std::vector<std::vector<std::uint32_t>> ext_sorted(lat.items.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) {
      sorted.push_back(std::move(lat.items[perm[i]]));
      for (std::uint32_t e : ext[perm[i]]) ext_sorted[i].push_back(where[e]);
    }
    lat.items = std::move(sorted);
    ext = std::move(ext_sorted);
  }

  // covers = inclusion-minimal extensions; maximal = every extension is G
  for (std::uint32_t i = 0; i < lat.items.size(); ++i) {
    auto& e = ext[i];
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (std::uint32_t c : e) {
      bool minimal = true;
      for (std::uint32_t d : e)
        if (d != c && lat.items[d].set.subset_of(lat.items[c].set)) {
          minimal = false;
          break;
        }
      if (minimal) lat.items[i].covers.push_back(c);
    }
    if (lat.items[i].order < n) {
      bool maximal = !e.empty();
      for (std::uint32_t c : e)
        if (lat.items[c].order != n) {
          maximal = false;
          break;
        }
      lat.items[i].maximal = maximal;
      if (maximal) lat.maximal_ids.push_back(i);
    }
  }

  // Frattini subgroup = intersection of the maximal subgroups (= G if none)
  ElementSet fr = ElementSet::full(static_cast<std::uint32_t>(n));
  for (std::uint32_t m : lat.maximal_ids) fr &= lat.items[m].set;
  fr.mark_subgroup();
  lat.frattini = std::move(fr);
  return lat;
}

const SubgroupLattice& all_subgroups(const Group& g) {
  auto& caches = g.caches();
  {
    std::lock_guard lock(caches.mu);
    if (caches.lattice) return *caches.lattice;
  }
  auto lat =
      std::make_shared<const SubgroupLattice>(compute_subgroup_lattice(g, exec::parallel));
  std::lock_guard lock(caches.mu);
  if (!caches.lattice) caches.lattice = std::move(lat);
  return *caches.lattice;
}

std::vector<ElementSet> maximal_subgroups(const Group& g) {
  const SubgroupLattice& lat = all_subgroups(g);
  std::vector<ElementSet> out;
  for (std::uint32_t m : lat.maximal_ids) out.push_back(lat.items[m].set);
  // in solvable groups every maximal index is a prime power
  if (is_solvable(g))
    for (const auto& m : out)
      if (factorize(g.order() / m.size()).size() != 1)
        throw error(errc::bad_parameter,
                    "internal: non-prime-power maximal index in a solvable group");
  return out;
}

ElementSet frattini(const Group& g) { return all_subgroups(g).frattini; }

std::uint32_t s_p(const Group& g, std::uint32_t p) {
  if (g.order() % p != 0) return 0;
  const SubgroupLattice& lat = all_subgroups(g);
  std::uint32_t best = 0;
  for (std::uint32_t m : lat.maximal_ids) {
    std::uint64_t index = g.order() / lat.items[m].order;
    std::uint32_t e = 0;
    while (index % p == 0) {
      index /= p;
      ++e;
    }
    if (index == 1) best = std::max(best, e);
  }
  return best;
}

std::uint32_t j_p(const Group& g, std::uint32_t p) {
  const SubgroupLattice& lat = all_subgroups(g);
  std::uint32_t best = 0;
  for (const auto& item : lat.items)
    for (std::uint32_t c : item.covers) {
      std::uint64_t index = lat.items[c].order / item.order;
      std::uint32_t e = 0;
      while (index % p == 0) {
        index /= p;
        ++e;
      }
      if (index == 1) best = std::max(best, e);
    }
  return best;
}

Primitivity is_primitive(const Group& g) {
  Primitivity out;
  if (g.order() == 1) return out;  // no maximal subgroup
  const SubgroupLattice& lat = all_subgroups(g);
  for (std::uint32_t m : lat.maximal_ids) {
    ElementSet core = normal_core(g, lat.items[m].set);
    if (core.size() == 1) {
      out.primitive = true;
      out.witness = lat.items[m].set;
      return out;
    }
  }
  return out;
}

std::vector<Group> primitive_quotients(const Group& g) {
  const SubgroupLattice& lat = all_subgroups(g);
  std::vector<Group> out;
  ElementSet combined = ElementSet::full(static_cast<std::uint32_t>(g.order()));
  for (std::uint32_t m : lat.maximal_ids) {
    ElementSet core = normal_core(g, lat.items[m].set);
    combined &= core;
    Group q = quotient(g, core).group;
    bool dup = false;
    for (const Group& seen : out) {
      auto iso = is_isomorphic(seen, q);
      if (iso.verdict == iso_verdict::yes) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(std::move(q));
  }
  if (!(combined == lat.frattini))
    throw error(errc::bad_parameter,
                "internal: combined cores differ from the Frattini subgroup");
  return out;
}

}  // namespace magnus
