#include "magnus/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "magnus/lattice.hpp"
#include "magnus/numtheory.hpp"
#include "magnus/structure.hpp"

namespace magnus {

// ---- affine analysis -----------------------------------------------------------------

AffineAnalysis affine_analysis(std::uint32_t q, std::span<const SemilinearMap> gens) {
  auto f = finite_field(q);
  AffineAnalysis out;
  out.q = q;

  // orbits of <gens> on the field points
  std::vector<std::uint32_t> orbit_of(q, ~0u);
  std::vector<std::vector<std::uint16_t>> orbits;
  for (std::uint32_t start = 0; start < q; ++start) {
    if (orbit_of[start] != ~0u) continue;
    std::uint32_t id = static_cast<std::uint32_t>(orbits.size());
    orbits.push_back({static_cast<std::uint16_t>(start)});
    orbit_of[start] = id;
    for (std::size_t qi = 0; qi < orbits[id].size(); ++qi) {
      std::uint16_t v = orbits[id][qi];
      for (const auto& m : gens) {
        std::uint16_t w = apply_semilinear(*f, m, v);
        if (orbit_of[w] == ~0u) {
          orbit_of[w] = id;
          orbits[id].push_back(w);
        }
      }
    }
  }
  for (const auto& o : orbits)
    out.orbit_sizes.push_back(static_cast<std::uint32_t>(o.size()));
  out.rank = static_cast<std::uint32_t>(orbits.size());
  out.two_transitive = out.rank == 2;

  // nonzero orbits: one, or two exchanged by negation
  std::vector<std::uint32_t> nonzero;
  for (std::uint32_t i = 0; i < orbits.size(); ++i)
    if (!(orbits[i].size() == 1 && orbits[i][0] == 0)) nonzero.push_back(i);
  if (nonzero.size() == 1)
    out.mp_hypothesis = true;
  else if (nonzero.size() == 2)
    out.mp_hypothesis =
        orbit_of[f->neg(orbits[nonzero[0]][0])] == nonzero[1];

  // irreducible: the additive span of every nonzero orbit is everything
  out.irreducible = true;
  for (std::uint32_t i : nonzero) {
    std::vector<char> in(q, 0);
    std::vector<std::uint16_t> span{0};
    in[0] = 1;
    for (std::uint16_t v : orbits[i])
      if (!in[v]) {
        in[v] = 1;
        span.push_back(v);
      }
    for (std::size_t qi = 0; qi < span.size(); ++qi)
      for (std::size_t qj = 0; qj <= qi; ++qj) {
        std::uint16_t w = f->add(span[qi], span[qj]);
        if (!in[w]) {
          in[w] = 1;
          span.push_back(w);
        }
      }
    if (span.size() != q) {
      out.irreducible = false;
      break;
    }
  }

  // |G0| via closure in the GammaL(1,q) actor
  {
    auto amb = gammal1_ambient(q);
    std::vector<Elt> agens;
    for (const auto& m : gens) agens.push_back(gammal1_actor_index(*f, m.scale, m.twist));
    ElementSet s(static_cast<std::uint32_t>(amb->actor.order()));
    s.add(0);
    std::vector<Elt> members{0}, cgens;
    closure_extend(amb->actor, s, members, cgens, agens);
    out.g0_order = members.size();
  }
  return out;
}

bool is_frobenius(const Group& g, const FrobeniusDecomposition& d) {
  const std::size_t n = g.order();
  if (d.kernel.size() * d.complement.size() != n) return false;
  ElementSet meet = d.kernel & d.complement;
  if (meet.size() != 1 || !meet.test(Group::identity)) return false;
  // kernel normality
  auto kelems = d.kernel.to_vector();
  for (Elt x : kelems)
    for (Elt ge : g.generators())
      if (!d.kernel.test(g.conj(x, ge))) return false;
  // N*H covers G because |N||H| = |G| and N cap H = 1
  auto helems = d.complement.to_vector();
  for (Elt h : helems) {
    if (h == Group::identity) continue;
    for (Elt x : kelems) {
      if (x == Group::identity) continue;
      if (g.mul(x, h) == g.mul(h, x)) return false;  // x in C_N(h)
    }
  }
  return true;
}

// ---- GammaL(1,q) subgroups -----------------------------------------------------------

std::vector<GammaL1Subgroup> gammal1_subgroups(std::uint32_t q) {
  std::uint64_t p64;
  std::uint32_t n;
  if (!is_prime_power(q, &p64, &n)) throw error(errc::not_prime_power, std::to_string(q));
  const std::uint64_t p = p64;
  auto f = finite_field(q);
  std::vector<GammaL1Subgroup> out;

  for (std::uint64_t d : divisors(q - 1)) {
    for (std::uint64_t m : divisors(n)) {
      std::uint32_t s = n / static_cast<std::uint32_t>(m);
      std::uint64_t ps = ipow(p, s);
      std::uint64_t t = (q - 1) / (ps - 1);  // 1 + p^s + ... over m terms
      std::uint64_t gmod = std::gcd<std::uint64_t>(d, ps - 1);
      for (std::uint64_t e = 0; e < gmod; ++e) {
        if ((e * t) % d != 0) continue;
        // canonical under conjugation: least of the multiplicative p-orbit
        std::uint64_t canon = e, cur = e;
        do {
          cur = cur * p % gmod;
          canon = std::min(canon, cur);
        } while (cur != e);
        if (canon != e) continue;
        GammaL1Subgroup sub;
        sub.d = d;
        sub.m = m;
        sub.e = e;
        sub.order = ((q - 1) / d) * m;
        if (d < q - 1)
          sub.gens.push_back(
              {f->pow(f->primitive_element, d), 0, 0});
        if (m > 1)
          sub.gens.push_back(
              {f->pow(f->primitive_element, e), s, 0});
        std::ostringstream name;
        name << "<";
        bool first = true;
        if (d < q - 1) {
          name << "w^" << d;
          first = false;
        }
        if (m > 1) {
          if (!first) name << ", ";
          if (e)
            name << "w^" << e << " f^" << s;
          else
            name << "f^" << s;
          first = false;
        }
        if (first) name << "1";
        name << ">";
        sub.name = name.str();
        out.push_back(std::move(sub));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const GammaL1Subgroup& a, const GammaL1Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.d != b.d) return a.d < b.d;
    if (a.m != b.m) return a.m < b.m;
    return a.e < b.e;
  });
  return out;
}

// ---- gammal1 search with optional on-disk cells ----------------------------------------

namespace {

constexpr const char* kCacheVersion = "1";

std::string caps_fingerprint(const limits& lim) {
  std::ostringstream os;
  os << lim.dense_cap << "-" << lim.perm_closure_cap << "-" << lim.composite_cap << "-"
     << lim.oracle_cap;
  return os.str();
}

nlohmann::ordered_json report_to_json(const MagnusReport& r) {
  nlohmann::ordered_json j;
  j["mp"] = r.mp;
  j["smp"] = r.smp;
  j["allReal"] = r.all_real;
  j["aCount"] = r.a_count;
  j["bCount"] = r.b_count;
  if (r.witness) {
    j["witness"] = {{"x", r.witness->first},
                    {"y", r.witness->second},
                    {"xClass", r.witness_classes->first},
                    {"yClass", r.witness_classes->second}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

MagnusReport report_from_json(const nlohmann::json& j) {
  MagnusReport r;
  r.mp = j.at("mp").get<bool>();
  r.smp = j.at("smp").get<bool>();
  r.all_real = j.at("allReal").get<bool>();
  r.a_count = j.at("aCount").get<std::uint64_t>();
  r.b_count = j.at("bCount").get<std::uint64_t>();
  if (!j.at("witness").is_null()) {
    r.witness = {j["witness"].at("x").get<Elt>(), j["witness"].at("y").get<Elt>()};
    r.witness_classes = {j["witness"].at("xClass").get<Elt>(),
                         j["witness"].at("yClass").get<Elt>()};
  }
  return r;
}

std::vector<SearchRow> compute_gammal1_cell(std::uint32_t q, const limits& lim) {
  std::vector<SearchRow> rows;
  for (auto& sub : gammal1_subgroups(q)) {
    SearchRow row;
    row.analysis = affine_analysis(q, sub.gens);
    row.lifted_order = std::uint64_t(q) * sub.order;
    if (row.analysis.irreducible) {
      AffineGroup ag = affine_semidirect(q, sub.gens, lim);
      if (ag.group.order() != row.lifted_order)
        throw error(errc::bad_parameter, "internal: lifted order mismatch");
      row.report = magnus_status(ag.group);
    }
    row.g0 = std::move(sub);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<SearchRow> gammal1_search(std::uint32_t q, const limits& lim) {
  const char* dir = std::getenv("MAGNUS_CACHE_DIR");
  std::filesystem::path cell;
  if (dir && *dir) {
    cell = std::filesystem::path(dir) /
           ("gammal1-q" + std::to_string(q) + "-v" + kCacheVersion + "-" +
            caps_fingerprint(lim) + ".json");
    std::ifstream in(cell);
    if (in) {
      try {
        nlohmann::json j;
        in >> j;
        std::vector<SearchRow> rows;
        for (const auto& rj : j.at("rows")) {
          SearchRow row;
          row.g0.d = rj.at("d").get<std::uint64_t>();
          row.g0.m = rj.at("m").get<std::uint64_t>();
          row.g0.e = rj.at("e").get<std::uint64_t>();
          row.g0.order = rj.at("order").get<std::uint64_t>();
          row.g0.name = rj.at("name").get<std::string>();
          for (const auto& gj : rj.at("gens"))
            row.g0.gens.push_back({gj.at(0).get<std::uint16_t>(),
                                   gj.at(1).get<std::uint32_t>(),
                                   gj.at(2).get<std::uint16_t>()});
          auto& aj = rj.at("analysis");
          row.analysis.q = q;
          row.analysis.g0_order = row.g0.order;
          row.analysis.orbit_sizes =
              aj.at("orbitSizes").get<std::vector<std::uint32_t>>();
          row.analysis.rank = aj.at("rank").get<std::uint32_t>();
          row.analysis.two_transitive = aj.at("twoTransitive").get<bool>();
          row.analysis.mp_hypothesis = aj.at("mpHypothesis").get<bool>();
          row.analysis.irreducible = aj.at("irreducible").get<bool>();
          row.lifted_order = rj.at("liftedOrder").get<std::uint64_t>();
          if (!rj.at("report").is_null()) row.report = report_from_json(rj.at("report"));
          rows.push_back(std::move(row));
        }
        return rows;
      } catch (const std::exception&) {
        // fall through to recompute on any malformed cell
      }
    }
  }

  std::vector<SearchRow> rows = compute_gammal1_cell(q, lim);

  if (!cell.empty()) {
    nlohmann::ordered_json j;
    j["q"] = q;
    j["schema"] = 1;
    nlohmann::ordered_json rj_all = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json rj;
      rj["d"] = row.g0.d;
      rj["m"] = row.g0.m;
      rj["e"] = row.g0.e;
      rj["order"] = row.g0.order;
      rj["name"] = row.g0.name;
      nlohmann::ordered_json gens = nlohmann::ordered_json::array();
      for (const auto& g : row.g0.gens) gens.push_back({g.scale, g.twist, g.shift});
      rj["gens"] = gens;
      rj["analysis"] = {{"orbitSizes", row.analysis.orbit_sizes},
                        {"rank", row.analysis.rank},
                        {"twoTransitive", row.analysis.two_transitive},
                        {"mpHypothesis", row.analysis.mp_hypothesis},
                        {"irreducible", row.analysis.irreducible}};
      rj["liftedOrder"] = row.lifted_order;
      rj["report"] = row.report ? report_to_json(*row.report)
                                : nlohmann::ordered_json(nullptr);
      rj_all.push_back(std::move(rj));
    }
    j["rows"] = std::move(rj_all);
    std::error_code ec;
    std::filesystem::create_directories(cell.parent_path(), ec);
    std::ofstream out(cell);
    if (out) out << j.dump(1) << "\n";
  }
  return rows;
}

// ---- GL(2,p) route ------------------------------------------------------------------------

namespace {

// conjugacy-class representatives of the subgroup lattice, via mask orbits
std::vector<std::uint32_t> subgroup_class_reps(const Group& g, const SubgroupLattice& lat) {
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_hash;
  for (std::uint32_t i = 0; i < lat.items.size(); ++i)
    by_hash[lat.items[i].set.hash()].push_back(i);
  auto find_id = [&](const ElementSet& s) -> std::uint32_t {
    for (std::uint32_t i : by_hash[s.hash()])
      if (lat.items[i].set == s) return i;
    throw error(errc::bad_parameter, "internal: conjugate subgroup missing from lattice");
  };
  std::vector<char> seen(lat.items.size(), 0);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t i = 0; i < lat.items.size(); ++i) {
    if (seen[i]) continue;
    reps.push_back(i);
    // orbit of the mask under conjugation by the generators
    std::vector<std::uint32_t> orbit{i};
    seen[i] = 1;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
      for (Elt ge : g.generators()) {
        ElementSet img(static_cast<std::uint32_t>(g.order()));
        lat.items[orbit[qi]].set.for_each([&](Elt x) { img.add(g.conj(x, ge)); });
        std::uint32_t id = find_id(img);
        if (!seen[id]) {
          seen[id] = 1;
          orbit.push_back(id);
        }
      }
    }
  }
  return reps;
}

}  // namespace

std::vector<Gl2RouteRow> gl2_route(std::uint32_t p, const limits& lim) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<Gl2RouteRow>> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
  }

  auto amb = gl2_ambient(p);
  const Group& actor = amb->actor;
  const std::uint32_t q = p * p;
  const SubgroupLattice& lat = all_subgroups(actor);
  std::vector<std::uint32_t> reps = subgroup_class_reps(actor, lat);

  // the p+1 lines through zero, as nonzero-point masks
  std::vector<std::vector<std::uint16_t>> lines;
  {
    std::vector<char> used(q, 0);
    for (std::uint32_t v = 1; v < q; ++v) {
      if (used[v]) continue;
      std::vector<std::uint16_t> line;
      for (std::uint32_t c = 1; c < p; ++c) {
        std::uint32_t w = (c * (v % p)) % p + p * ((c * (v / p)) % p);
        line.push_back(static_cast<std::uint16_t>(w));
        used[w] = 1;
      }
      std::sort(line.begin(), line.end());
      lines.push_back(std::move(line));
    }
  }

  std::vector<Gl2RouteRow> rows;
  for (std::uint32_t id : reps) {
    const Subgroup& sub = lat.items[id];
    // irreducible: no line is stabilized by all generators
    bool irreducible = true;
    if (sub.order == 1) irreducible = p == 0;  // trivial group is reducible (p+1 lines)
    std::vector<Elt> gens = sub.gens.empty() ? std::vector<Elt>{0} : sub.gens;
    for (const auto& line : lines) {
      bool invariant = true;
      for (Elt ge : gens) {
        for (std::uint16_t v : line) {
          std::uint16_t w = amb->action[std::size_t(ge) * q + v];
          if (!std::binary_search(line.begin(), line.end(), w)) {
            invariant = false;
            break;
          }
        }
        if (!invariant) break;
      }
      if (invariant) {
        irreducible = false;
        break;
      }
    }
    if (!irreducible) continue;

    Gl2RouteRow row;
    row.g0_order = sub.order;
    row.g0_gens = sub.gens;
    // G0 as an abstract group
    Group g0 = subgroup_as_group(actor, sub.set);
    row.g0_mp = magnus_status(g0).mp;
    // orbit condition on the nonzero vectors
    {
      std::vector<std::uint32_t> orbit_of(q, ~0u);
      std::vector<std::vector<std::uint16_t>> orbits;
      for (std::uint32_t v = 1; v < q; ++v) {
        if (orbit_of[v] != ~0u) continue;
        std::uint32_t oid = static_cast<std::uint32_t>(orbits.size());
        orbits.push_back({static_cast<std::uint16_t>(v)});
        orbit_of[v] = oid;
        for (std::size_t qi = 0; qi < orbits[oid].size(); ++qi)
          for (Elt ge : gens) {
            std::uint16_t w = amb->action[std::size_t(ge) * q + orbits[oid][qi]];
            if (orbit_of[w] == ~0u) {
              orbit_of[w] = oid;
              orbits[oid].push_back(w);
            }
          }
      }
      if (orbits.size() == 1)
        row.orbit_condition = true;
      else if (orbits.size() == 2)
        row.orbit_condition = orbit_of[amb->neg[orbits[0][0]]] == 1;
    }
    AffineGroup lifted = semidirect_from_ambient(amb, sub.gens, lim);
    row.lifted = magnus_status(lifted.group);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Gl2RouteRow& a, const Gl2RouteRow& b) {
    if (a.g0_order != b.g0_order) return a.g0_order < b.g0_order;
    return a.g0_gens < b.g0_gens;
  });
  std::lock_guard lock(mu);
  auto [it, inserted] = memo.emplace(p, rows);
  return it->second;
}

std::vector<Group> irreducible_subgroups_gl2(std::uint32_t p, bool mp_only,
                                             const limits& lim) {
  if (p != 2 && p != 3)
    throw error(errc::bad_parameter, "irreducible subgroup listing is for p in {2,3}");
  auto amb = gl2_ambient(p);
  std::vector<Gl2RouteRow> rows = gl2_route(p, lim);
  std::vector<Group> out;
  for (const auto& row : rows) {
    if (mp_only && !row.g0_mp) continue;
    // rebuild the abstract subgroup
    ElementSet s(static_cast<std::uint32_t>(amb->actor.order()));
    s.add(0);
    std::vector<Elt> members{0}, cgens;
    closure_extend(amb->actor, s, members, cgens, row.g0_gens);
    Group g0 = subgroup_as_group(amb->actor, s);
    bool dup = false;
    for (const Group& seen : out)
      if (is_isomorphic(seen, g0).verdict == iso_verdict::yes) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(g0));
  }
  return out;
}

// ---- arithmetic endpoints -------------------------------------------------------------------

DegreeBoundReport degree_bound() {
  DegreeBoundReport out;
  for (std::uint32_t m = 1; m <= 50; ++m) {
    Group c = cyclic_group(m);
    if (magnus_status(c).mp) out.cyclic_mp_orders.push_back(m);
  }
  for (std::uint32_t m = 1; m <= 200; ++m)
    if (euler_phi(m) <= out.phi_cap) out.m_max = m;
  out.bound = 1 + 2 * out.m_max * 6;
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> power23_solutions(
    std::uint32_t a_max, std::uint32_t b_max) {
  if (a_max > 126 || b_max > 80)
    throw error(errc::bad_parameter, "power23 range exceeds exact-arithmetic width");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  unsigned __int128 pow2 = 1;
  for (std::uint32_t a = 0; a <= a_max; ++a) {
    unsigned __int128 pow3 = 1;
    for (std::uint32_t b = 0; b <= b_max; ++b) {
      unsigned __int128 diff = pow2 > pow3 ? pow2 - pow3 : pow3 - pow2;
      if (diff == 1) out.emplace_back(a, b);
      pow3 *= 3;
    }
    pow2 *= 2;
  }
  return out;
}

// ---- abelian survey --------------------------------------------------------------------------

namespace {

// all abelian groups of the given order as lists of prime-power cyclic factors
std::vector<std::vector<std::uint32_t>> abelian_shapes(std::uint64_t order) {
  std::vector<std::vector<std::vector<std::uint32_t>>> per_prime;
  for (auto [p, e] : factorize(order)) {
    std::vector<std::vector<std::uint32_t>> shapes;
    for (const auto& part : partitions(e)) {
      std::vector<std::uint32_t> factors;
      for (std::uint32_t part_i : part)
        factors.push_back(static_cast<std::uint32_t>(ipow(p, part_i)));
      shapes.push_back(std::move(factors));
    }
    per_prime.push_back(std::move(shapes));
  }
  std::vector<std::vector<std::uint32_t>> out{{}};
  for (const auto& shapes : per_prime) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& base : out)
      for (const auto& s : shapes) {
        auto combo = base;
        combo.insert(combo.end(), s.begin(), s.end());
        next.push_back(std::move(combo));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

AbelianSurvey abelian_survey(std::uint64_t order_max) {
  AbelianSurvey out;
  out.consistent = true;
  for (std::uint64_t order = 1; order <= order_max; ++order) {
    for (const auto& shape : abelian_shapes(order)) {
      std::vector<Group> factors;
      std::ostringstream name;
      if (shape.empty()) name << "C1";
      for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) name << " x ";
        name << "C" << shape[i];
        factors.push_back(cyclic_group(shape[i]));
      }
      Group g = factors.empty() ? cyclic_group(1)
                : factors.size() == 1 ? factors[0]
                                      : build_direct_product(factors);
      const MagnusReport& rep = magnus_status(g);
      // C2^n x C3^m or C2^n x C4^m
      bool only23 = true, only24 = true;
      for (std::uint32_t f : shape) {
        if (f != 2 && f != 3) only23 = false;
        if (f != 2 && f != 4) only24 = false;
      }
      AbelianSurveyRow row;
      row.shape = name.str();
      row.order = order;
      row.mp = rep.mp;
      row.smp = rep.smp;
      row.shape_allows_mp = only23 || only24;
      if (row.mp != row.shape_allows_mp) out.consistent = false;
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

// ---- corpus ------------------------------------------------------------------------------------

std::vector<CorpusEntry> corpus_abelian(std::uint64_t max_order) {
  std::vector<CorpusEntry> out;
  for (std::uint64_t order = 1; order <= max_order; ++order)
    for (const auto& shape : abelian_shapes(order)) {
      std::vector<Group> factors;
      std::ostringstream name;
      if (shape.empty()) name << "C(1)";
      for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) name << " x ";
        name << "C(" << shape[i] << ")";
        factors.push_back(cyclic_group(shape[i]));
      }
      Group g = factors.empty() ? cyclic_group(1)
                : factors.size() == 1 ? factors[0]
                                      : build_direct_product(factors);
      out.push_back({name.str(), std::move(g)});
    }
  return out;
}

std::vector<CorpusEntry> corpus_atoms() {
  std::vector<CorpusEntry> out;
  for (std::uint32_t m = 1; m <= 12; ++m)
    out.push_back({"C(" + std::to_string(m) + ")", cyclic_group(m)});
  for (std::uint32_t k = 1; k <= 4; ++k)
    out.push_back({"E(2," + std::to_string(k) + ")", elementary_abelian(2, k)});
  for (std::uint32_t k = 1; k <= 3; ++k)
    out.push_back({"E(3," + std::to_string(k) + ")", elementary_abelian(3, k)});
  out.push_back({"E(5,2)", elementary_abelian(5, 2)});
  out.push_back({"E(7,2)", elementary_abelian(7, 2)});
  for (std::uint32_t m = 3; m <= 5; ++m)
    out.push_back({"S(" + std::to_string(m) + ")", symmetric_group(m)});
  for (std::uint32_t m = 4; m <= 5; ++m)
    out.push_back({"A(" + std::to_string(m) + ")", alternating_group(m)});
  for (std::uint32_t o = 4; o <= 16; o += 2)
    out.push_back({"D(" + std::to_string(o) + ")", dihedral_group(o)});
  out.push_back({"Q8", quaternion8()});
  out.push_back({"QD16", semidihedral16()});
  out.push_back({"M9", m9()});
  out.push_back({"C7:C3", c7c3()});
  return out;
}

std::vector<CorpusEntry> corpus_primitive_eight() {
  std::vector<CorpusEntry> out;
  out.push_back({"C(2)", cyclic_group(2)});
  out.push_back({"C(3)", cyclic_group(3)});
  out.push_back({"S(3)", symmetric_group(3)});
  out.push_back({"A(4)", alternating_group(4)});
  out.push_back({"AGL(1,5)", semilinear_family(5, Family::agl1)});
  out.push_back({"C7:C3", c7c3()});
  out.push_back({"AGL(1,7)", semilinear_family(7, Family::agl1)});
  out.push_back({"M9", m9()});
  return out;
}

std::vector<CorpusEntry> corpus_pairs() {
  auto eight = corpus_primitive_eight();
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < eight.size(); ++i)
    for (std::size_t j = i; j < eight.size(); ++j)
      out.push_back({eight[i].expr + " x " + eight[j].expr,
                     build_direct_product({eight[i].group, eight[j].group})});
  return out;
}

std::vector<CorpusEntry> corpus_crowns() {
  auto eight = corpus_primitive_eight();
  std::vector<CorpusEntry> out;
  for (const auto& e : eight)
    for (std::uint32_t k = 2; k <= 3; ++k) {
      try {
        Group c = crown_power(e.group, k);
        out.push_back(
            {"Crown(" + e.expr + ", " + std::to_string(k) + ")", std::move(c)});
      } catch (const error& err) {
        if (!err.resource_cap()) throw;
      }
    }
  return out;
}

std::vector<CorpusEntry> corpus_gammal1(std::uint32_t qmax) {
  std::vector<CorpusEntry> out;
  for (std::uint64_t q : prime_powers_up_to(qmax)) {
    for (const auto& sub : gammal1_subgroups(static_cast<std::uint32_t>(q))) {
      AffineAnalysis an = affine_analysis(static_cast<std::uint32_t>(q), sub.gens);
      if (!an.irreducible) continue;
      AffineGroup ag = affine_semidirect(static_cast<std::uint32_t>(q), sub.gens);
      out.push_back({"V(" + std::to_string(q) + ") : " + sub.name,
                     std::move(ag.group)});
    }
  }
  return out;
}

std::vector<CorpusEntry> full_corpus(std::uint32_t qmax) {
  std::vector<CorpusEntry> out;
  auto append = [&](std::vector<CorpusEntry> v) {
    for (auto& e : v) out.push_back(std::move(e));
  };
  append(corpus_abelian(128));
  append(corpus_atoms());
  append(corpus_primitive_eight());
  append(corpus_pairs());
  append(corpus_crowns());
  append(corpus_gammal1(qmax));
  return out;
}

}  // namespace magnus
