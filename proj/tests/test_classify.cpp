#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "magnus/classify.hpp"
#include "magnus/lattice.hpp"
#include "magnus/numtheory.hpp"
#include "magnus/structure.hpp"

using namespace magnus;

TEST_CASE("affine analysis examples") {
  // q=7, G0 = <scale 2>: orbits {0}, {1,2,4}, {3,5,6}; rank 3; hypothesis holds
  std::vector<SemilinearMap> g7{{2, 0, 0}};
  AffineAnalysis a7 = affine_analysis(7, g7);
  CHECK(a7.rank == 3);
  std::vector<std::uint32_t> sizes = a7.orbit_sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::uint32_t>{1, 3, 3});
  CHECK(a7.mp_hypothesis);
  CHECK(a7.irreducible);
  CHECK_FALSE(a7.two_transitive);

  // q=9, G0 = the quaternion stabilizer: rank 2, two-transitive
  auto f9 = finite_field(9);
  std::uint16_t w = f9->primitive_element;
  std::vector<SemilinearMap> g9{{f9->mul(w, w), 0, 0}, {w, 1, 0}};
  AffineAnalysis a9 = affine_analysis(9, g9);
  CHECK(a9.rank == 2);
  CHECK(a9.two_transitive);
  CHECK(a9.mp_hypothesis);
  CHECK(a9.irreducible);
  CHECK(a9.g0_order == 8);

  // q=5, G0 = <scale 4>: orbits {1,4}, {2,3} are negation-stable
  std::vector<SemilinearMap> g5{{4, 0, 0}};
  AffineAnalysis a5 = affine_analysis(5, g5);
  CHECK(a5.rank == 3);
  CHECK_FALSE(a5.mp_hypothesis);
}

TEST_CASE("frobenius decompositions") {
  // AGL(1,5) with its translation kernel and a point stabilizer
  std::vector<SemilinearMap> gens{{2, 0, 0}};
  AffineGroup ag = affine_semidirect(5, gens);
  CHECK(is_frobenius(ag.group, {ag.socle, ag.point_stabilizer}));

  // S3 = C3 x| C2
  Group s3 = symmetric_group(3);
  ElementSet c3(6), c2(6);
  c3.add(0);
  c2.add(0);
  for (Elt x = 1; x < 6; ++x) {
    if (element_order(s3, x) == 3) c3.add(x);
  }
  for (Elt x = 1; x < 6; ++x)
    if (element_order(s3, x) == 2) {
      c2.add(x);
      break;
    }
  CHECK(is_frobenius(s3, {c3, c2}));

  // abelian C6 is not Frobenius over (C3, C2)
  Group c6 = cyclic_group(6);
  ElementSet k(6), h(6);
  k.add(0);
  k.add(2);
  k.add(4);
  h.add(0);
  h.add(3);
  CHECK_FALSE(is_frobenius(c6, {k, h}));
}

TEST_CASE("irreducible subgroups of GL(2,p)") {
  auto i22 = irreducible_subgroups_gl2(2, true);
  REQUIRE(i22.size() == 2);
  std::vector<std::uint64_t> orders;
  for (const auto& g : i22) orders.push_back(g.order());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::uint64_t>{3, 6});  // C3, S3

  auto all22 = irreducible_subgroups_gl2(2, false);
  CHECK(all22.size() == 2);  // same two

  auto i23 = irreducible_subgroups_gl2(3, true);
  REQUIRE(i23.size() == 4);
  orders.clear();
  for (const auto& g : i23) orders.push_back(g.order());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::uint64_t>{4, 8, 8, 16});  // C4, D8, Q8, QD16
  // identify them
  int c4 = 0, d8 = 0, q8 = 0, qd16 = 0;
  for (const auto& g : i23) {
    if (is_isomorphic(g, cyclic_group(4)).verdict == iso_verdict::yes) ++c4;
    if (is_isomorphic(g, dihedral_group(8)).verdict == iso_verdict::yes) ++d8;
    if (is_isomorphic(g, quaternion8()).verdict == iso_verdict::yes) ++q8;
    if (is_isomorphic(g, semidihedral16()).verdict == iso_verdict::yes) ++qd16;
  }
  CHECK(c4 == 1);
  CHECK(d8 == 1);
  CHECK(q8 == 1);
  CHECK(qd16 == 1);

  CHECK_THROWS_AS(irreducible_subgroups_gl2(5, true), error);
}

TEST_CASE("gammal1 subgroup enumeration cross-checked against the generic lattice") {
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u}) {
    auto param = gammal1_subgroups(q);
    // generic: subgroups of the permutation model up to conjugacy
    Group gl = semilinear_family(q, Family::gammal1);
    const SubgroupLattice& lat = all_subgroups(gl);
    std::vector<char> seen(lat.items.size(), 0);
    auto find_id = [&](const ElementSet& s) {
      for (std::uint32_t i = 0; i < lat.items.size(); ++i)
        if (lat.items[i].set == s) return i;
      REQUIRE(false);
      return 0u;
    };
    std::size_t classes = 0;
    for (std::uint32_t i = 0; i < lat.items.size(); ++i) {
      if (seen[i]) continue;
      ++classes;
      std::vector<std::uint32_t> orbit{i};
      seen[i] = 1;
      for (std::size_t qi = 0; qi < orbit.size(); ++qi)
        for (Elt y = 0; y < gl.order(); ++y) {
          ElementSet img(static_cast<std::uint32_t>(gl.order()));
          lat.items[orbit[qi]].set.for_each(
              [&](Elt x) { img.add(gl.conj(x, y)); });
          std::uint32_t id = find_id(img);
          if (!seen[id]) {
            seen[id] = 1;
            orbit.push_back(id);
          }
        }
    }
    CHECK(param.size() == classes);
    // orders multiset must match as well
    std::set<std::uint64_t> param_orders, generic_orders;
    for (const auto& s : param) param_orders.insert(s.order);
    for (const auto& item : lat.items) generic_orders.insert(item.order);
    CHECK(param_orders == generic_orders);
  }
}

TEST_CASE("gammal1_search: q=5 finds exactly AGL(1,5)") {
  auto rows = gammal1_search(5);
  std::size_t mp_hits = 0;
  for (const auto& row : rows)
    if (row.analysis.irreducible && row.report && row.report->mp) {
      ++mp_hits;
      AffineGroup ag = affine_semidirect(5, row.g0.gens);
      CHECK(is_isomorphic(ag.group, semilinear_family(5, Family::agl1)).verdict ==
            iso_verdict::yes);
    }
  CHECK(mp_hits == 1);
}

TEST_CASE("gammal1_search: q=9 finds exactly M(9)") {
  auto rows = gammal1_search(9);
  std::size_t mp_hits = 0;
  for (const auto& row : rows)
    if (row.analysis.irreducible && row.report && row.report->mp) {
      ++mp_hits;
      AffineGroup ag = affine_semidirect(9, row.g0.gens);
      Group named = m9();
      CHECK(is_isomorphic(ag.group, named).verdict == iso_verdict::yes);
      CHECK(row.report->smp);
    }
  CHECK(mp_hits == 1);
}

TEST_CASE("gammal1_search: q=8 finds no MP primitive group") {
  auto rows = gammal1_search(8);
  for (const auto& row : rows)
    if (row.report) CHECK_FALSE(row.report->mp);
  // and the full stabilizer row satisfies the hypothesis without MP
  bool found_full = false;
  for (const auto& row : rows)
    if (row.g0.order == 21) {
      found_full = true;
      CHECK(row.analysis.mp_hypothesis);
      CHECK(row.analysis.irreducible);
    }
  CHECK(found_full);
}

TEST_CASE("gl2 route at the four re-verified degrees") {
  // p=2: MP hit A4 only; hypothesis endpoint S4
  auto r2 = gl2_route(2);
  std::size_t hits = 0;
  for (const auto& row : r2)
    if (row.lifted.mp) {
      ++hits;
      CHECK(row.g0_order == 3);
    }
  CHECK(hits == 1);

  // p=3: MP hit M(9) only
  auto r3 = gl2_route(3);
  hits = 0;
  for (const auto& row : r3) {
    if (row.lifted.mp) {
      ++hits;
      CHECK(row.g0_order == 8);
      auto amb = gl2_ambient(3);
      AffineGroup ag = semidirect_from_ambient(amb, row.g0_gens);
      Group named = m9();
      CHECK(is_isomorphic(ag.group, named).verdict == iso_verdict::yes);
    }
    // hypothesis-satisfying non-MP rows at degree 9 are AGammaL(1,9)-type
    if (row.g0_mp && row.orbit_condition && !row.lifted.mp) {
      auto amb = gl2_ambient(3);
      AffineGroup ag = semidirect_from_ambient(amb, row.g0_gens);
      Group agl19 = semilinear_family(9, Family::agammal1);
      CHECK(is_isomorphic(ag.group, agl19).verdict == iso_verdict::yes);
    }
  }
  CHECK(hits == 1);
}

TEST_CASE("degree bound arithmetic") {
  DegreeBoundReport d = degree_bound();
  CHECK(d.cyclic_mp_orders == std::vector<std::uint32_t>{1, 2, 3, 4, 6});
  CHECK(d.m_max == 42);
  CHECK(euler_phi(42) == 12);
  CHECK(d.bound == 505);
  // sanity: the largest m with phi(m) <= 2 is 6
  std::uint32_t m2 = 0;
  for (std::uint32_t m = 1; m <= 200; ++m)
    if (euler_phi(m) <= 2) m2 = m;
  CHECK(m2 == 6);
}

TEST_CASE("powers of 2 and 3 at distance 1") {
  auto sols = power23_solutions(60, 40);
  std::sort(sols.begin(), sols.end());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> expect{
      {1, 0}, {1, 1}, {2, 1}, {3, 2}};
  CHECK(sols == expect);
  CHECK(power23_solutions(0, 0).empty());
  auto tiny = power23_solutions(1, 1);
  std::sort(tiny.begin(), tiny.end());
  CHECK(tiny == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 0}, {1, 1}});
}

TEST_CASE("abelian survey") {
  AbelianSurvey s = abelian_survey(40);
  CHECK(s.consistent);
  // C8 is not MP; C2 x C4 x C4 is MP (checked at order 32)
  bool saw_c8 = false, saw_244 = false;
  for (const auto& row : s.rows) {
    if (row.shape == "C8") {
      saw_c8 = true;
      CHECK_FALSE(row.mp);
    }
    if (row.shape == "C4 x C4 x C2") {
      saw_244 = true;
      CHECK(row.mp);
    }
  }
  CHECK(saw_c8);
  CHECK(saw_244);
}

TEST_CASE("claim registry runs the fast claims") {
  VerifyOptions opt;
  opt.qmax = 16;
  for (const std::string& id : {"power23", "degree-bound", "main1bis"}) {
    ClaimReport r = verify_claim(id, opt);
    CHECK(r.status == ClaimReport::Status::pass);
  }
}
