#include "magnus/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "magnus/numtheory.hpp"

namespace magnus {

// ---- class product closure machinery --------------------------------------------

struct ClassClosures {
  std::vector<std::vector<Elt>> per_class;  // sorted class ids; empty = unset
  std::vector<char> done;
  // (a<<32|b) -> distinct classes hit by class_a * class_b
  std::unordered_map<std::uint64_t, std::vector<Elt>> pair_memo;
};

namespace {

ClassClosures& closures_cache(const Group& g) {
  auto& caches = g.caches();
  if (!caches.closures) {
    auto cc = std::make_shared<ClassClosures>();
    cc->per_class.resize(conjugacy_classes(g).count());
    cc->done.assign(cc->per_class.size(), 0);
    caches.closures = std::move(cc);
  }
  return *caches.closures;
}

// classes hit by class_a * class_b == classes of {x * rep_b : x in class_a}
//                                  == classes of {rep_a * y : y in class_b}
const std::vector<Elt>& pair_product(const Group& g, ClassClosures& cc, Elt a, Elt b) {
  std::uint64_t key = (std::uint64_t(a) << 32) | b;
  auto it = cc.pair_memo.find(key);
  if (it != cc.pair_memo.end()) return it->second;
  const ClassData& cd = conjugacy_classes(g);
  std::vector<char> seen(cd.count(), 0);
  std::vector<Elt> hits;
  if (cd.sizes[a] <= cd.sizes[b]) {
    Elt rb = cd.reps[b];
    for (Elt x : cd.class_elements(a)) {
      Elt c = cd.class_of[g.mul(x, rb)];
      if (!seen[c]) {
        seen[c] = 1;
        hits.push_back(c);
      }
    }
  } else {
    Elt ra = cd.reps[a];
    for (Elt y : cd.class_elements(b)) {
      Elt c = cd.class_of[g.mul(ra, y)];
      if (!seen[c]) {
        seen[c] = 1;
        hits.push_back(c);
      }
    }
  }
  std::sort(hits.begin(), hits.end());
  return cc.pair_memo.emplace(key, std::move(hits)).first->second;
}

std::vector<Elt> closure_of_classes_locked(const Group& g, ClassClosures& cc,
                                           std::span<const Elt> seed) {
  const ClassData& cd = conjugacy_classes(g);
  const std::size_t k = cd.count();
  std::vector<char> in(k, 0);
  std::vector<Elt> members;
  std::deque<std::pair<Elt, Elt>> pending;

  // Add one class; if its closure is already known, merge the whole closure.
  // Products internal to a merged closed set stay inside it, so only pairs
  // crossing into the previous members need to be examined.
  auto add = [&](Elt c) {
    if (in[c]) return;
    if (cc.done[c]) {
      std::vector<Elt> batch;
      for (Elt d : cc.per_class[c])
        if (!in[d]) batch.push_back(d);
      for (Elt b : batch)
        for (Elt m : members) {
          pending.emplace_back(b, m);
          pending.emplace_back(m, b);
        }
      for (Elt b : batch) {
        in[b] = 1;
        members.push_back(b);
      }
    } else {
      for (Elt m : members) {
        pending.emplace_back(c, m);
        pending.emplace_back(m, c);
      }
      pending.emplace_back(c, c);
      in[c] = 1;
      members.push_back(c);
    }
  };

  add(0);
  for (Elt c : seed) add(c);
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop_front();
    for (Elt hit : pair_product(g, cc, a, b)) add(hit);
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

const std::vector<Elt>& class_closure(const Group& g, Elt class_id) {
  auto& caches = g.caches();
  std::lock_guard lock(caches.mu);
  ClassClosures& cc = closures_cache(g);
  if (!cc.done[class_id]) {
    std::array<Elt, 1> seed{class_id};
    cc.per_class[class_id] = closure_of_classes_locked(g, cc, seed);
    cc.done[class_id] = 1;
  }
  return cc.per_class[class_id];
}

std::vector<Elt> closure_of_classes(const Group& g, std::span<const Elt> seed_classes) {
  auto& caches = g.caches();
  std::lock_guard lock(caches.mu);
  ClassClosures& cc = closures_cache(g);
  // warm single-class closures so batch union applies
  for (Elt c : seed_classes)
    if (!cc.done[c]) {
      std::array<Elt, 1> seed{c};
      cc.per_class[c] = closure_of_classes_locked(g, cc, seed);
      cc.done[c] = 1;
    }
  return closure_of_classes_locked(g, cc, seed_classes);
}

ElementSet expand_classes(const Group& g, std::span<const Elt> class_ids) {
  const ClassData& cd = conjugacy_classes(g);
  ElementSet out(static_cast<std::uint32_t>(g.order()));
  for (Elt c : class_ids)
    for (Elt x : cd.class_elements(c)) out.add(x);
  return out;
}

ElementSet normal_closure(const Group& g, const ElementSet& s) {
  const ClassData& cd = conjugacy_classes(g);
  std::vector<char> seen(cd.count(), 0);
  std::vector<Elt> seed;
  s.for_each([&](Elt x) {
    Elt c = cd.class_of[x];
    if (!seen[c]) {
      seen[c] = 1;
      seed.push_back(c);
    }
  });
  auto cls = closure_of_classes(g, seed);
  ElementSet out = expand_classes(g, cls);
  out.mark_subgroup();
  return out;
}

ElementSet normal_closure_of_element(const Group& g, Elt x) {
  auto cls = class_closure(g, conjugacy_classes(g).class_of[x]);
  ElementSet out = expand_classes(g, cls);
  out.mark_subgroup();
  return out;
}

// ---- normal lattice ---------------------------------------------------------------

namespace {

struct ClassKeyHash {
  std::size_t operator()(const std::vector<Elt>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Elt x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<Elt> mask_to_classes(const Group& g, const ElementSet& s) {
  const ClassData& cd = conjugacy_classes(g);
  std::vector<char> seen(cd.count(), 0);
  std::vector<Elt> out;
  s.for_each([&](Elt x) {
    Elt c = cd.class_of[x];
    if (!seen[c]) {
      seen[c] = 1;
      out.push_back(c);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

NormalLattice compute_normal_lattice(const Group& g, exec mode) {
  const limits& lim = g.caps();
  const ClassData& cd = conjugacy_classes(g);
  const std::size_t k = cd.count();

  NormalLattice lattice;
  std::unordered_map<std::vector<Elt>, std::size_t, ClassKeyHash> index;

  auto make_item = [&](std::vector<Elt> classes) -> std::size_t {
    auto it = index.find(classes);
    if (it != index.end()) return it->second;
    NormalSubgroup n;
    n.class_ids = classes;
    n.set = expand_classes(g, n.class_ids);
    n.set.mark_subgroup();
    n.order = n.set.size();
    std::vector<Elt> members{0}, gens;
    ElementSet tmp(static_cast<std::uint32_t>(g.order()));
    tmp.add(0);
    auto elems = n.set.to_vector();
    closure_extend(g, tmp, members, gens, elems);
    n.gens = std::move(gens);
    lattice.items.push_back(std::move(n));
    if (lattice.items.size() > lim.normal_count_cap)
      throw error(errc::lattice_cap_exceeded, "normal subgroup count exceeds cap");
    index.emplace(std::move(classes), lattice.items.size() - 1);
    return lattice.items.size() - 1;
  };

  make_item({0});
  // atoms: normal closures of single classes
  std::vector<std::size_t> atoms;
  {
    std::unordered_set<std::uint64_t> seen;
    for (Elt c = 1; c < k; ++c) {
      auto cls = class_closure(g, c);
      std::uint64_t h = ClassKeyHash{}(cls);
      if (seen.insert(h).second) atoms.push_back(make_item(cls));
    }
  }

  // join-closure BFS layer by layer: every normal subgroup is a join of
  // class closures; joins within a layer run in parallel, the merge is serial
  std::size_t layer_begin = 0;
  while (layer_begin < lattice.items.size()) {
    std::size_t layer_end = lattice.items.size();
    struct Task {
      std::size_t item, atom;
    };
    std::vector<Task> tasks;
    for (std::size_t qi = layer_begin; qi < layer_end; ++qi)
      for (std::size_t ai : atoms) {
        const NormalSubgroup& a = lattice.items[ai];
        const NormalSubgroup& n = lattice.items[qi];
        if (ai == qi || std::includes(n.class_ids.begin(), n.class_ids.end(),
                                      a.class_ids.begin(), a.class_ids.end()))
          continue;
        tasks.push_back({qi, ai});
      }
    std::vector<std::vector<Elt>> results(tasks.size());
    par_for(mode, tasks.size(), [&](std::size_t t) {
      std::vector<Elt> seed = lattice.items[tasks[t].item].gens;
      const auto& agens = lattice.items[tasks[t].atom].gens;
      seed.insert(seed.end(), agens.begin(), agens.end());
      ElementSet set(static_cast<std::uint32_t>(g.order()));
      set.add(0);
      std::vector<Elt> members{0}, gens;
      closure_extend(g, set, members, gens, seed);
      // class ids without touching shared caches
      std::vector<char> seen(k, 0);
      std::vector<Elt> cls;
      set.for_each([&](Elt x) {
        Elt c = cd.class_of[x];
        if (!seen[c]) {
          seen[c] = 1;
          cls.push_back(c);
        }
      });
      std::sort(cls.begin(), cls.end());
      results[t] = std::move(cls);
    });
    for (auto& r : results) make_item(std::move(r));
    layer_begin = layer_end;
  }

  std::sort(lattice.items.begin(), lattice.items.end(),
            [](const NormalSubgroup& a, const NormalSubgroup& b) {
              if (a.order != b.order) return a.order < b.order;
              return a.set.lex_less(b.set);
            });
  return lattice;
}

const NormalLattice& all_normal_subgroups(const Group& g) {
  auto& caches = g.caches();
  {
    std::lock_guard lock(caches.mu);
    if (caches.normals) return *caches.normals;
  }
  auto lattice =
      std::make_shared<const NormalLattice>(compute_normal_lattice(g, exec::parallel));
  std::lock_guard lock(caches.mu);
  if (!caches.normals) caches.normals = std::move(lattice);
  return *caches.normals;
}

namespace {
std::shared_ptr<const MinimalNormals> compute_minimal_normals(const Group& g) {
  const ClassData& cd = conjugacy_classes(g);
  const std::size_t k = cd.count();
  // minimal normal subgroups are minimal among single-class closures
  std::vector<std::vector<Elt>> atoms;
  {
    std::unordered_set<std::uint64_t> seen;
    for (Elt c = 1; c < k; ++c) {
      auto cls = class_closure(g, c);
      std::uint64_t h = ClassKeyHash{}(cls);
      if (seen.insert(h).second) atoms.push_back(cls);
    }
  }
  auto res = std::make_shared<MinimalNormals>();
  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    bool is_min = true;
    for (std::size_t j = 0; j < atoms.size() && is_min; ++j)
      if (j != i && atoms[j].size() < atoms[i].size() &&
          std::includes(atoms[i].begin(), atoms[i].end(), atoms[j].begin(),
                        atoms[j].end()))
        is_min = false;
    if (is_min) minimal.push_back(i);
  }
  for (std::size_t i : minimal) {
    ElementSet s = expand_classes(g, atoms[i]);
    s.mark_subgroup();
    res->items.push_back(std::move(s));
  }
  std::sort(res->items.begin(), res->items.end(),
            [](const ElementSet& a, const ElementSet& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a.lex_less(b);
            });
  // socle = join of the minimal normal subgroups
  ElementSet soc(static_cast<std::uint32_t>(g.order()));
  soc.add(0);
  std::vector<Elt> members{0}, gens;
  for (const auto& m : res->items) {
    auto v = m.to_vector();
    closure_extend(g, soc, members, gens, v);
  }
  soc.mark_subgroup();
  res->socle = std::move(soc);
  res->monolithic = res->items.size() == 1;
  return res;
}
}  // namespace

const MinimalNormals& minimal_normal_subgroups(const Group& g) {
  auto& caches = g.caches();
  {
    std::lock_guard lock(caches.mu);
    if (caches.minimal_normals) return *caches.minimal_normals;
  }
  auto res = compute_minimal_normals(g);
  std::lock_guard lock(caches.mu);
  if (!caches.minimal_normals) caches.minimal_normals = std::move(res);
  return *caches.minimal_normals;
}

// ---- quotient ------------------------------------------------------------------------

namespace {

void check_subgroup(const Group& g, const ElementSet& s) {
  if (!s.test(Group::identity)) throw error(errc::not_subgroup, "missing identity");
  auto v = s.to_vector();
  for (Elt a : v) {
    if (!s.test(g.inv(a))) throw error(errc::not_subgroup, "not inverse-closed");
  }
}

void check_normal(const Group& g, const ElementSet& s) {
  check_subgroup(g, s);
  auto v = s.to_vector();
  for (Elt a : v)
    for (Elt ge : g.generators())
      if (!s.test(g.conj(a, ge)))
        throw error(errc::not_normal, "element " + std::to_string(a) +
                                          " conjugated by generator " +
                                          std::to_string(ge) + " leaves the set");
}

}  // namespace

Quotient quotient(const Group& g, const ElementSet& n) {
  const std::size_t order = g.order();
  check_normal(g, n);
  const std::size_t nsz = n.size();
  if (nsz == 1) {
    GroupHom id{g, g, {}};
    id.image.resize(order);
    std::iota(id.image.begin(), id.image.end(), 0);
    return Quotient{g, std::move(id)};
  }
  auto nelems = n.to_vector();
  std::vector<Elt> coset_of(order, ~Elt(0));
  std::vector<Elt> reps;
  for (std::size_t x = 0; x < order; ++x) {
    if (coset_of[x] != ~Elt(0)) continue;
    Elt id = static_cast<Elt>(reps.size());
    reps.push_back(static_cast<Elt>(x));
    for (Elt u : nelems) coset_of[g.mul(static_cast<Elt>(x), u)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Elt> qgens;
  for (Elt ge : g.generators()) {
    Elt c = coset_of[ge];
    if (c != 0 && std::find(qgens.begin(), qgens.end(), c) == qgens.end())
      qgens.push_back(c);
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels.resize(m);
    for (std::size_t c = 0; c < m; ++c) labels[c] = g.labels()[reps[c]] + "N";
  }
  Group q = dense_from_fn(
      m, [&](Elt a, Elt b) { return coset_of[g.mul(reps[a], reps[b])]; }, qgens,
      std::move(labels), g.caps());
  GroupHom proj{g, q, std::move(coset_of)};
  return Quotient{std::move(q), std::move(proj)};
}

ElementSet normal_core(const Group& g, const ElementSet& h) {
  check_subgroup(g, h);
  ElementSet core = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elt ge : g.generators()) {
      ElementSet conj(static_cast<std::uint32_t>(g.order()));
      core.for_each([&](Elt x) { conj.add(g.conj(x, ge)); });
      ElementSet next = core & conj;
      if (!(next == core)) {
        core = std::move(next);
        changed = true;
      }
    }
  }
  core.mark_subgroup();
  return core;
}

// ---- derived series ------------------------------------------------------------------

ElementSet derived_subgroup_of(const Group& g, std::span<const Elt> h_gens) {
  // commutators of generator pairs, then close under H-conjugation and products
  std::vector<Elt> ngens;
  for (Elt a : h_gens)
    for (Elt b : h_gens) {
      Elt c = g.commutator(a, b);
      if (c != Group::identity && std::find(ngens.begin(), ngens.end(), c) == ngens.end())
        ngens.push_back(c);
    }
  ElementSet set(static_cast<std::uint32_t>(g.order()));
  set.add(0);
  std::vector<Elt> members{0}, gens;
  closure_extend(g, set, members, gens, ngens);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elt> extra;
    for (Elt t : gens)
      for (Elt hg : h_gens) {
        Elt y = g.conj(t, hg);
        if (!set.test(y)) extra.push_back(y);
      }
    if (!extra.empty()) {
      closure_extend(g, set, members, gens, extra);
      grew = true;
    }
  }
  set.mark_subgroup();
  return set;
}

DerivedSeries derived_series(const Group& g) {
  DerivedSeries out;
  ElementSet cur = ElementSet::full(static_cast<std::uint32_t>(g.order()));
  cur.mark_subgroup();
  out.terms.push_back(cur);
  std::vector<Elt> gens(g.generators().begin(), g.generators().end());
  while (true) {
    std::vector<Elt> small;
    ElementSet next = [&] {
      ElementSet d = derived_subgroup_of(g, gens);
      // recover a small generating set for the next step
      ElementSet tmp(static_cast<std::uint32_t>(g.order()));
      tmp.add(0);
      std::vector<Elt> members{0};
      auto v = d.to_vector();
      closure_extend(g, tmp, members, small, v);
      return d;
    }();
    if (next == out.terms.back()) break;
    out.terms.push_back(next);
    gens = std::move(small);
    if (next.size() == 1) break;
  }
  out.solvable = out.terms.back().size() == 1;
  out.derived_length = static_cast<int>(out.terms.size()) - 1;
  return out;
}

bool is_solvable(const Group& g) { return derived_series(g).solvable; }

// ---- Fitting ----------------------------------------------------------------------------

ElementSet fitting_subgroup(const Group& g) {
  const NormalLattice& nl = all_normal_subgroups(g);
  ElementSet f(static_cast<std::uint32_t>(g.order()));
  f.add(0);
  std::vector<Elt> members{0}, gens;
  for (auto [p, e] : factorize(g.order())) {
    // O_p = join of all normal p-subgroups
    for (const auto& n : nl.items) {
      std::uint64_t o = n.order;
      while (o % p == 0) o /= p;
      if (o != 1) continue;
      closure_extend(g, f, members, gens, n.gens);
    }
  }
  f.mark_subgroup();
  return f;
}

bool is_nilpotent(const Group& g) { return fitting_subgroup(g).size() == g.order(); }

int fitting_height(const Group& g) {
  if (!is_solvable(g)) throw error(errc::not_solvable, "Fitting height needs solvability");
  if (g.order() == 1) return 0;
  ElementSet f = fitting_subgroup(g);
  if (f.size() == g.order()) return 1;
  return 1 + fitting_height(quotient(g, f).group);
}

// ---- chief series ------------------------------------------------------------------------

namespace {

bool factor_elementary_abelian(const Group& q, const ElementSet& m, std::uint32_t* p,
                               std::uint32_t* rank) {
  std::uint64_t o = m.size();
  std::uint64_t pp;
  std::uint32_t k;
  if (!is_prime_power(o, &pp, &k)) return false;
  bool ok = true;
  auto v = m.to_vector();
  for (Elt x : v) {
    if (x == Group::identity) continue;
    if (q.power(x, pp) != Group::identity) {
      ok = false;
      break;
    }
  }
  if (ok)
    for (std::size_t i = 0; i < v.size() && ok; ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (q.mul(v[i], v[j]) != q.mul(v[j], v[i])) {
          ok = false;
          break;
        }
  if (!ok) return false;
  *p = static_cast<std::uint32_t>(pp);
  *rank = k;
  return true;
}

}  // namespace

ChiefSeries chief_series(const Group& g, bool reverse_tie_break) {
  ChiefSeries out;
  const std::size_t n = g.order();
  ElementSet cur(static_cast<std::uint32_t>(n));
  cur.add(0);
  cur.mark_subgroup();
  out.chain.push_back(cur);

  Group q = g;  // current quotient
  std::vector<Elt> to_q(n);
  std::iota(to_q.begin(), to_q.end(), 0);

  while (q.order() > 1) {
    const MinimalNormals& mn = minimal_normal_subgroups(q);
    const ElementSet& chosen =
        reverse_tie_break ? mn.items.back() : mn.items.front();

    // pull back to G
    ElementSet next(static_cast<std::uint32_t>(n));
    for (std::size_t x = 0; x < n; ++x)
      if (chosen.test(to_q[x])) next.add(static_cast<Elt>(x));
    next.mark_subgroup();

    ChiefFactor f;
    f.lower = out.chain.back();
    f.upper = next;
    f.order = chosen.size();
    f.elementary_abelian =
        factor_elementary_abelian(q, chosen, &f.prime, &f.rank);

    // centralizer of the factor in G: [g, m] must land in the lower term
    {
      std::vector<Elt> mgens_q;
      {
        ElementSet tmp(static_cast<std::uint32_t>(q.order()));
        tmp.add(0);
        std::vector<Elt> members{0};
        auto v = chosen.to_vector();
        closure_extend(q, tmp, members, mgens_q, v);
      }
      // lift factor generators to G (least preimage)
      std::vector<Elt> mgens;
      for (Elt mq : mgens_q)
        for (std::size_t x = 0; x < n; ++x)
          if (to_q[x] == mq) {
            mgens.push_back(static_cast<Elt>(x));
            break;
          }
      ElementSet c(static_cast<std::uint32_t>(n));
      std::vector<char> ok(n, 0);
      const ElementSet& lower = f.lower;
      par_for_static(exec::parallel, n, [&](std::size_t x) {
        for (Elt m : mgens)
          if (!lower.test(g.commutator(static_cast<Elt>(x), m))) return;
        ok[x] = 1;
      });
      for (std::size_t x = 0; x < n; ++x)
        if (ok[x]) c.add(static_cast<Elt>(x));
      c.mark_subgroup();
      f.centralizer = std::move(c);
    }

    out.chain.push_back(next);
    out.factors.push_back(std::move(f));

    Quotient qq = quotient(q, chosen);
    for (std::size_t x = 0; x < n; ++x) to_q[x] = qq.proj.image[to_q[x]];
    q = qq.group;
  }
  return out;
}

std::uint32_t p_rank(const ChiefSeries& s, std::uint32_t p) {
  std::uint32_t r = 0;
  for (const auto& f : s.factors)
    if (f.elementary_abelian && f.prime == p) r = std::max(r, f.rank);
  return r;
}

std::uint32_t p_rank(const Group& g, std::uint32_t p) {
  return p_rank(chief_series(g), p);
}

FactorAction chief_factor_action(const Group& g, const ChiefSeries& s, std::size_t step) {
  const ChiefFactor& f = s.factors.at(step);
  const std::size_t n = g.order();
  // factor elements = cosets of lower inside upper, indexed by least representative
  std::vector<Elt> freps;
  std::vector<Elt> fidx(n, ~Elt(0));
  auto lower_elems = f.lower.to_vector();
  auto upper_elems = f.upper.to_vector();
  for (Elt x : upper_elems) {
    if (fidx[x] != ~Elt(0)) continue;
    Elt id = static_cast<Elt>(freps.size());
    freps.push_back(x);
    for (Elt u : lower_elems) fidx[g.mul(x, u)] = id;
  }
  const std::size_t fm = freps.size();

  auto perm_of = [&](Elt ge) {
    std::vector<std::uint32_t> p(fm);
    for (std::size_t i = 0; i < fm; ++i) p[i] = fidx[g.conj(freps[i], ge)];
    return p;
  };
  auto gens = g.generators();
  std::vector<std::vector<std::uint32_t>> gen_perms;
  for (Elt ge : gens) gen_perms.push_back(perm_of(ge));
  Group image =
      build_from_permutations(static_cast<std::uint32_t>(fm), gen_perms, g.caps());

  // image indices of the generator permutations: build_from_permutations lists
  // its generators by first appearance of distinct nonidentity permutations
  std::vector<Elt> gen_img(gens.size(), 0);
  {
    std::vector<Elt> igens(image.generators().begin(), image.generators().end());
    std::vector<std::vector<std::uint32_t>> seen_perms;
    std::vector<Elt> seen_idx;
    std::size_t next = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto& p = gen_perms[i];
      bool identity = true;
      for (std::size_t pt = 0; pt < p.size(); ++pt)
        if (p[pt] != pt) {
          identity = false;
          break;
        }
      if (identity) continue;
      bool dup = false;
      for (std::size_t s2 = 0; s2 < seen_perms.size(); ++s2)
        if (seen_perms[s2] == p) {
          gen_img[i] = seen_idx[s2];
          dup = true;
          break;
        }
      if (!dup) {
        gen_img[i] = igens.at(next);
        seen_perms.push_back(p);
        seen_idx.push_back(gen_img[i]);
        ++next;
      }
    }
  }

  // hom G -> image along the Cayley graph
  std::vector<Elt> himg(n, ~Elt(0));
  himg[0] = 0;
  std::vector<Elt> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Elt x = queue[qi];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elt y = g.mul(x, gens[i]);
      if (himg[y] == ~Elt(0)) {
        himg[y] = image.mul(himg[x], gen_img[i]);
        queue.push_back(y);
      }
    }
  }

  GroupHom hom{g, image, std::move(himg)};
  ElementSet ker = hom.kernel();
  return FactorAction{std::move(image), std::move(hom), std::move(ker)};
}

}  // namespace magnus
