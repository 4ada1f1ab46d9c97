#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "magnus/constructors.hpp"
#include "magnus/magnus.hpp"
#include "magnus/structure.hpp"
#include "oracles.hpp"

using namespace magnus;

TEST_CASE("A and B counts: S3, C12, trivial") {
  Group s3 = symmetric_group(3);
  MagnusSets ms = magnus_sets(s3);
  CHECK(ms.a_cells.size() == 3);
  CHECK(ms.b_closures.size() == 3);

  Group c12 = cyclic_group(12);
  MagnusSets m12 = magnus_sets(c12);
  CHECK(m12.a_cells.size() == 7);
  CHECK(m12.b_closures.size() == 6);

  Group triv = cyclic_group(1);
  MagnusSets mt = magnus_sets(triv);
  CHECK(mt.a_cells.size() == 1);
  CHECK(mt.b_closures.size() == 1);

  // the closures as element masks are distinct subgroups
  auto sets = b_closure_sets(c12);
  CHECK(sets.size() == 6);
  for (const auto& s : sets) CHECK(s.subgroup());
}

TEST_CASE("verdicts on the named groups") {
  Group mg = m9();
  const MagnusReport& m = magnus_status(mg);
  CHECK(m.mp);
  CHECK(m.smp);
  CHECK(m.a_count == 6);
  CHECK(m.b_count == 6);

  Group c73 = c7c3();
  const MagnusReport& c = magnus_status(c73);
  CHECK(c.mp);
  CHECK_FALSE(c.smp);

  Group c73sq = build_direct_product({c7c3(), c7c3()});
  const MagnusReport& sq = magnus_status(c73sq);
  CHECK_FALSE(sq.mp);
  REQUIRE(sq.witness.has_value());
  // the witness pair shares a normal closure without inverse-conjugacy
  ElementSet nx = normal_closure_of_element(c73sq, sq.witness->first);
  ElementSet ny = normal_closure_of_element(c73sq, sq.witness->second);
  CHECK(nx == ny);
  const ClassData& cd = conjugacy_classes(c73sq);
  Elt cx = cd.class_of[sq.witness->first], cy = cd.class_of[sq.witness->second];
  CHECK(cx != cy);
  CHECK(cd.inverse_class[cx] != cy);

  Group c3 = cyclic_group(3);
  const MagnusReport& r3 = magnus_status(c3);
  CHECK(r3.mp);
  CHECK_FALSE(r3.smp);

  Group c8 = cyclic_group(8);
  CHECK_FALSE(magnus_status(c8).mp);

  Group e23 = elementary_abelian(2, 3);
  CHECK(magnus_status(e23).mp);
  CHECK(magnus_status(e23).smp);

  Group c244 = build_direct_product({cyclic_group(2), cyclic_group(4), cyclic_group(4)});
  CHECK(magnus_status(c244).mp);
}

TEST_CASE("report invariants") {
  for (const Group& g : {symmetric_group(3), cyclic_group(12), m9(), quaternion8(),
                         semidihedral16(), alternating_group(4), c7c3(),
                         semilinear_family(5, Family::agl1)}) {
    const MagnusReport& r = magnus_status(g);
    CHECK(r.a_count >= r.b_count);
    CHECK(r.mp == (r.a_count == r.b_count));
    CHECK(r.smp == (r.mp && r.all_real));
    CHECK(r.witness.has_value() == !r.mp);
  }
}

TEST_CASE("counting criterion agrees with the independent pairwise oracle") {
  // tiny groups: fully brute-force closures and classes
  for (const Group& g : {symmetric_group(3), quaternion8(), cyclic_group(12),
                         elementary_abelian(2, 2), cyclic_group(8), dihedral_group(8),
                         alternating_group(4), cyclic_group(6)}) {
    auto brute = oracles::magnus_pairwise(g);
    const MagnusReport& r = magnus_status(g);
    CHECK(r.mp == brute.mp);
    CHECK(r.smp == brute.smp);
  }
  // mid-size: element-BFS closures
  for (const Group& g : {m9(), c7c3(), semilinear_family(9, Family::agammal1),
                         symmetric_group(4), crown_power(symmetric_group(3), 2),
                         build_direct_product({c7c3(), cyclic_group(3)})}) {
    auto mid = oracles::magnus_pairwise_midsize(g);
    const MagnusReport& r = magnus_status(g);
    CHECK(r.mp == mid.mp);
    CHECK(r.smp == mid.smp);
  }
}

TEST_CASE("quotient closure on MP examples") {
  // every quotient of an MP group is MP
  for (const Group& g : {m9(), c7c3(), symmetric_group(3), elementary_abelian(2, 3),
                         crown_power(symmetric_group(3), 2)}) {
    REQUIRE(magnus_status(g).mp);
    for (const auto& n : all_normal_subgroups(g).items) {
      Group q = quotient(g, n.set).group;
      CHECK(magnus_status(q).mp);
    }
  }
}

TEST_CASE("MP implies solvable on the spot-check corpus") {
  for (const Group& g : {m9(), c7c3(), elementary_abelian(2, 4)}) {
    if (magnus_status(g).mp) CHECK(is_solvable(g));
  }
  // and the nonsolvable closure of two cycles is not MP
  Group a5 = build_from_permutations(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}});
  CHECK_FALSE(magnus_status(a5).mp);
}
