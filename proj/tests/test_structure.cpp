#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "magnus/constructors.hpp"
#include "magnus/lattice.hpp"
#include "magnus/numtheory.hpp"
#include "magnus/structure.hpp"
#include "oracles.hpp"

using namespace magnus;

TEST_CASE("normal closures against the brute-force oracle") {
  for (const Group& g : {symmetric_group(3), alternating_group(4), quaternion8(),
                         dihedral_group(12), m9(), c7c3()}) {
    for (Elt x = 0; x < g.order(); ++x) {
      ElementSet fast = normal_closure_of_element(g, x);
      ElementSet slow = oracles::normal_closure_bruteforce(g, {x});
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("normal closure examples") {
  Group s3 = symmetric_group(3);
  ElementSet id_only(6);
  id_only.add(0);
  CHECK(normal_closure(s3, id_only).size() == 1);
  for (Elt x = 1; x < 6; ++x)
    if (element_order(s3, x) == 2) CHECK(normal_closure_of_element(s3, x).size() == 6);

  Group a4 = alternating_group(4);
  for (Elt x = 1; x < 12; ++x)
    if (element_order(a4, x) == 2) CHECK(normal_closure_of_element(a4, x).size() == 4);
}

TEST_CASE("normal closure equals the least enclosing normal subgroup") {
  for (const Group& g : {symmetric_group(3), quaternion8(), alternating_group(4), m9()}) {
    const NormalLattice& nl = all_normal_subgroups(g);
    for (Elt x = 0; x < g.order(); ++x) {
      ElementSet nc = normal_closure_of_element(g, x);
      std::uint64_t least = g.order();
      for (const auto& n : nl.items)
        if (n.set.test(x)) least = std::min(least, n.order);
      CHECK(nc.size() == least);
    }
  }
}

TEST_CASE("normal lattices: S3, Q8, C_p, and the subset oracle") {
  Group s3 = symmetric_group(3), q8 = quaternion8(), c7 = cyclic_group(7);
  CHECK(all_normal_subgroups(s3).items.size() == 3);
  {
    std::vector<std::uint64_t> orders;
    for (const auto& n : all_normal_subgroups(s3).items) orders.push_back(n.order);
    CHECK(orders == std::vector<std::uint64_t>{1, 3, 6});
  }
  CHECK(all_normal_subgroups(q8).items.size() == 6);
  CHECK(all_normal_subgroups(c7).items.size() == 2);

  // brute-force oracle: all subsets closed as subgroups and conjugation-stable
  for (const Group& g : {symmetric_group(3), quaternion8(), cyclic_group(12),
                         alternating_group(4), dihedral_group(8)}) {
    auto subs = oracles::all_subgroups_subsets(g);
    std::size_t normal_count = 0;
    for (const auto& s : subs) {
      bool normal = true;
      auto v = s.to_vector();
      for (Elt x : v)
        for (Elt y = 0; y < g.order() && normal; ++y)
          if (!s.test(g.conj(x, y))) normal = false;
      if (normal) ++normal_count;
    }
    CHECK(all_normal_subgroups(g).items.size() == normal_count);
  }
}

TEST_CASE("serial and parallel normal-lattice kernels agree") {
  for (const Group& g : {m9(), dihedral_group(16), alternating_group(4)}) {
    NormalLattice a = compute_normal_lattice(g, exec::serial);
    NormalLattice b = compute_normal_lattice(g, exec::parallel);
    REQUIRE(a.items.size() == b.items.size());
    for (std::size_t i = 0; i < a.items.size(); ++i)
      CHECK(a.items[i].set == b.items[i].set);
  }
}

TEST_CASE("minimal normal subgroups and socles") {
  Group mg = m9();
  const MinimalNormals& m = minimal_normal_subgroups(mg);
  CHECK(m.monolithic);
  CHECK(m.items.size() == 1);
  CHECK(m.items[0].size() == 9);

  Group e22 = elementary_abelian(2, 2);
  const MinimalNormals& v4 = minimal_normal_subgroups(e22);
  CHECK(v4.items.size() == 3);
  CHECK(v4.socle.size() == 4);
  CHECK_FALSE(v4.monolithic);

  Group crown = crown_power(symmetric_group(3), 2);
  const MinimalNormals& cs = minimal_normal_subgroups(crown);
  CHECK(cs.socle.size() == 9);
}

TEST_CASE("quotients") {
  Group s3 = symmetric_group(3);
  const NormalLattice& nl = all_normal_subgroups(s3);
  REQUIRE(nl.items.size() == 3);
  Quotient q = quotient(s3, nl.items[1].set);  // the order-3 subgroup
  CHECK(q.group.order() == 2);
  q.proj.validate();
  CHECK(q.proj.kernel() == nl.items[1].set);

  Group m = m9();
  const MinimalNormals& mn = minimal_normal_subgroups(m);
  Quotient mq = quotient(m, mn.socle);
  CHECK(mq.group.order() == 8);
  CHECK(is_isomorphic(mq.group, quaternion8()).verdict == iso_verdict::yes);

  ElementSet triv(static_cast<std::uint32_t>(m.order()));
  triv.add(0);
  Quotient idq = quotient(m, triv);
  CHECK(idq.group.same(m));

  // non-normal subgroup is rejected
  ElementSet stab(static_cast<std::uint32_t>(s3.order()));
  stab.add(0);
  for (Elt x = 1; x < 6; ++x)
    if (element_order(s3, x) == 2) {
      stab.add(x);
      break;
    }
  CHECK_THROWS_AS(quotient(s3, stab), error);
}

TEST_CASE("normal cores") {
  Group s3 = symmetric_group(3);
  // a point stabilizer C2 has trivial core
  ElementSet stab(6);
  stab.add(0);
  for (Elt x = 1; x < 6; ++x)
    if (element_order(s3, x) == 2) {
      stab.add(x);
      break;
    }
  CHECK(normal_core(s3, stab).size() == 1);

  // the core of a normal subgroup is itself
  const NormalLattice& nl = all_normal_subgroups(s3);
  CHECK(normal_core(s3, nl.items[1].set) == nl.items[1].set);

  // V4 inside A4 is normal, so the core is V4
  Group a4 = alternating_group(4);
  ElementSet v4(12);
  v4.add(0);
  for (Elt x = 1; x < 12; ++x)
    if (element_order(a4, x) == 2) v4.add(x);
  CHECK(normal_core(a4, v4) == v4);
}

TEST_CASE("derived series and solvability") {
  DerivedSeries ab = derived_series(cyclic_group(12));
  CHECK(ab.solvable);
  CHECK(ab.derived_length == 1);

  DerivedSeries s3 = derived_series(symmetric_group(3));
  CHECK(s3.solvable);
  CHECK(s3.derived_length == 2);

  DerivedSeries s4 = derived_series(symmetric_group(4));
  CHECK(s4.solvable);
  CHECK(s4.derived_length == 3);

  // the order-60 closure of a 5-cycle and a 3-cycle is not solvable
  Group a5 = build_from_permutations(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}});
  DerivedSeries ds = derived_series(a5);
  CHECK_FALSE(ds.solvable);
  CHECK(ds.terms.back().size() == 60);

  CHECK(derived_series(cyclic_group(1)).derived_length == 0);
}

TEST_CASE("Fitting subgroups and heights") {
  CHECK(fitting_height(cyclic_group(12)) == 1);
  CHECK(fitting_height(quaternion8()) == 1);
  CHECK(fitting_height(symmetric_group(3)) == 2);
  CHECK(fitting_height(symmetric_group(4)) == 3);
  CHECK(fitting_height(m9()) == 2);
  CHECK(fitting_height(cyclic_group(1)) == 0);
  CHECK(is_nilpotent(quaternion8()));
  CHECK_FALSE(is_nilpotent(symmetric_group(3)));
  CHECK(fitting_subgroup(symmetric_group(3)).size() == 3);
  CHECK_THROWS_AS(fitting_height(alternating_group(5)), error);
}

TEST_CASE("chief series") {
  ChiefSeries a4 = chief_series(alternating_group(4));
  std::vector<std::uint64_t> orders;
  for (const auto& f : a4.factors) orders.push_back(f.order);
  CHECK(orders == std::vector<std::uint64_t>{4, 3});
  CHECK(p_rank(a4, 2) == 2);
  CHECK(p_rank(a4, 3) == 1);
  CHECK(p_rank(a4, 5) == 0);

  ChiefSeries m = chief_series(m9());
  orders.clear();
  for (const auto& f : m.factors) orders.push_back(f.order);
  CHECK(orders == std::vector<std::uint64_t>{9, 2, 2, 2});
  CHECK(p_rank(m, 3) == 2);
  CHECK(p_rank(m, 2) == 1);

  ChiefSeries c12 = chief_series(cyclic_group(12));
  orders.clear();
  for (const auto& f : c12.factors) orders.push_back(f.order);
  CHECK(orders == std::vector<std::uint64_t>{2, 2, 3});

  // chief factor orders multiply to |G|; solvable factors are (p, rank)
  for (const Group& g : {symmetric_group(4), m9(), crown_power(symmetric_group(3), 2)}) {
    ChiefSeries cs = chief_series(g);
    std::uint64_t prod = 1;
    for (const auto& f : cs.factors) {
      prod *= f.order;
      CHECK(f.elementary_abelian);
      CHECK(f.order == ipow(f.prime, f.rank));
    }
    CHECK(prod == g.order());
  }

  // Jordan-Hoelder: the factor-order multiset is refinement-independent
  for (const Group& g :
       {symmetric_group(4), m9(), cyclic_group(12), alternating_group(4),
        crown_power(symmetric_group(3), 2), quaternion8()}) {
    auto sorted_orders = [](const ChiefSeries& s) {
      std::vector<std::uint64_t> v;
      for (const auto& f : s.factors) v.push_back(f.order);
      std::sort(v.begin(), v.end());
      return v;
    };
    CHECK(sorted_orders(chief_series(g, false)) == sorted_orders(chief_series(g, true)));
  }
}

TEST_CASE("chief factor actions") {
  Group a4 = alternating_group(4);
  ChiefSeries cs = chief_series(a4);
  FactorAction fa = chief_factor_action(a4, cs, 0);  // the order-4 factor
  CHECK(fa.image.order() == 3);
  CHECK(fa.centralizer.size() == 4);
  fa.action.validate();

  Group m = m9();
  ChiefSeries ms = chief_series(m);
  FactorAction mf = chief_factor_action(m, ms, 0);  // the socle
  CHECK(mf.image.order() == 8);
  CHECK(mf.centralizer.size() == 9);

  Group ab = cyclic_group(12);
  ChiefSeries as = chief_series(ab);
  FactorAction af = chief_factor_action(ab, as, 0);
  CHECK(af.image.order() == 1);
}

TEST_CASE("h(G) = h(G/Phi(G)) on small corpus groups") {
  for (const Group& g : {cyclic_group(12), quaternion8(), symmetric_group(4),
                         dihedral_group(16), m9(), cyclic_group(8)}) {
    ElementSet phi = frattini(g);
    Group q = quotient(g, phi).group;
    CHECK(fitting_height(g) == fitting_height(q));
  }
}
