#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "magnus/constructors.hpp"
#include "magnus/lattice.hpp"
#include "magnus/numtheory.hpp"
#include "magnus/structure.hpp"
#include "oracles.hpp"

using namespace magnus;

TEST_CASE("subgroup counts against the subset oracle") {
  for (const Group& g : {symmetric_group(3), quaternion8(), cyclic_group(7),
                         cyclic_group(12), alternating_group(4), dihedral_group(8),
                         elementary_abelian(2, 2)}) {
    auto brute = oracles::all_subgroups_subsets(g);
    const SubgroupLattice& lat = all_subgroups(g);
    REQUIRE(lat.items.size() == brute.size());
    for (const auto& s : brute) {
      bool found = false;
      for (const auto& item : lat.items)
        if (item.set == s) found = true;
      CHECK(found);
    }
  }
  Group s3 = symmetric_group(3), q8 = quaternion8(), c7 = cyclic_group(7);
  CHECK(all_subgroups(s3).items.size() == 6);
  CHECK(all_subgroups(q8).items.size() == 6);
  CHECK(all_subgroups(c7).items.size() == 2);
}

TEST_CASE("serial and parallel lattice kernels agree") {
  for (const Group& g : {alternating_group(4), dihedral_group(16), m9()}) {
    SubgroupLattice a = compute_subgroup_lattice(g, exec::serial);
    SubgroupLattice b = compute_subgroup_lattice(g, exec::parallel);
    REQUIRE(a.items.size() == b.items.size());
    for (std::size_t i = 0; i < a.items.size(); ++i) {
      CHECK(a.items[i].set == b.items[i].set);
      CHECK(a.items[i].covers == b.items[i].covers);
    }
    CHECK(a.maximal_ids == b.maximal_ids);
    CHECK(a.frattini == b.frattini);
  }
}

TEST_CASE("maximal subgroups") {
  Group a4 = alternating_group(4);
  auto maxes = maximal_subgroups(a4);
  std::vector<std::uint64_t> indices;
  for (const auto& m : maxes) indices.push_back(a4.order() / m.size());
  std::sort(indices.begin(), indices.end());
  // one V4 of index 3, four C3 of index 4
  CHECK(indices == std::vector<std::uint64_t>{3, 4, 4, 4, 4});

  Group c12 = cyclic_group(12);
  auto m12 = maximal_subgroups(c12);
  std::vector<std::uint64_t> orders;
  for (const auto& m : m12) orders.push_back(m.size());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::uint64_t>{4, 6});

  Group c7 = cyclic_group(7);
  auto m7 = maximal_subgroups(c7);
  REQUIRE(m7.size() == 1);
  CHECK(m7[0].size() == 1);
}

TEST_CASE("frattini subgroups") {
  Group q8 = quaternion8();
  ElementSet f = frattini(q8);
  CHECK(f.size() == 2);
  CHECK(f == center(q8));

  Group s3 = symmetric_group(3);
  CHECK(frattini(s3).size() == 1);

  Group c4 = cyclic_group(4);
  CHECK(frattini(c4).size() == 2);

  // the trivial group has no maximal subgroups; Phi(G) = G by convention
  Group triv = cyclic_group(1);
  CHECK(frattini(triv).size() == 1);
}

TEST_CASE("frattini duality: the set of non-generators") {
  // g is a non-generator iff <H u {g}> = G forces H = G, over all subgroups H
  for (const Group& g : {quaternion8(), cyclic_group(12), symmetric_group(3),
                         dihedral_group(8), alternating_group(4), cyclic_group(8),
                         semidihedral16()}) {
    const SubgroupLattice& lat = all_subgroups(g);
    ElementSet nongen(static_cast<std::uint32_t>(g.order()));
    for (Elt x = 0; x < g.order(); ++x) {
      bool non_generator = true;
      for (const auto& item : lat.items) {
        if (item.set.test(x) || item.order == g.order()) continue;
        std::vector<Elt> seed = item.gens;
        seed.push_back(x);
        if (closure_of(g, seed).size() == g.order()) {
          non_generator = false;
          break;
        }
      }
      if (non_generator) nongen.add(x);
    }
    CHECK(nongen == lat.frattini);
  }
}

TEST_CASE("s_p and j_p") {
  Group a4 = alternating_group(4);
  CHECK(s_p(a4, 2) == 2);
  CHECK(s_p(a4, 3) == 1);
  CHECK(j_p(a4, 2) == 2);
  CHECK(j_p(a4, 3) == 1);

  Group s3 = symmetric_group(3);
  CHECK(s_p(s3, 5) == 0);  // 5 does not divide |S3|
  CHECK(s_p(s3, 2) == 1);
  CHECK(s_p(s3, 3) == 1);
}

TEST_CASE("primitivity") {
  Group s3 = symmetric_group(3);
  auto p = is_primitive(s3);
  CHECK(p.primitive);
  REQUIRE(p.witness.has_value());
  CHECK(normal_core(s3, *p.witness).size() == 1);

  Group c4 = cyclic_group(4);
  CHECK_FALSE(is_primitive(c4).primitive);

  Group c5 = cyclic_group(5);
  CHECK(is_primitive(c5).primitive);

  Group triv = cyclic_group(1);
  CHECK_FALSE(is_primitive(triv).primitive);

  Group m = m9();
  CHECK(is_primitive(m).primitive);
}

TEST_CASE("primitive quotients") {
  Group c12 = cyclic_group(12);
  auto pq = primitive_quotients(c12);
  std::vector<std::uint64_t> orders;
  for (const auto& q : pq) orders.push_back(q.order());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::uint64_t>{2, 3});

  Group s3 = symmetric_group(3);
  auto pq3 = primitive_quotients(s3);
  orders.clear();
  for (const auto& q : pq3) orders.push_back(q.order());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::uint64_t>{2, 6});

  Group q8 = quaternion8();
  auto pq8 = primitive_quotients(q8);
  REQUIRE(pq8.size() == 1);
  CHECK(pq8[0].order() == 2);
}

TEST_CASE("lattice caps fail loudly") {
  limits lim;
  lim.lattice_order_cap = 50;
  Group big = m9();
  Group capped = dense_from_fn(
      72, [&](Elt a, Elt b) { return big.mul(a, b); },
      std::vector<Elt>(big.generators().begin(), big.generators().end()), {}, lim);
  try {
    compute_subgroup_lattice(capped, exec::serial);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::order_cap_exceeded);
    CHECK(e.resource_cap());
  }
}

TEST_CASE("S_p(G) = S_p(G/Phi(G)) on small groups") {
  for (const Group& g : {quaternion8(), cyclic_group(12), semidihedral16(),
                         dihedral_group(16), m9()}) {
    ElementSet phi = frattini(g);
    Group q = quotient(g, phi).group;
    for (auto [p, e] : factorize(g.order()))
      CHECK(s_p(g, static_cast<std::uint32_t>(p)) ==
            s_p(q, static_cast<std::uint32_t>(p)));
  }
}
