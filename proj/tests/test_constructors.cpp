#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "magnus/constructors.hpp"
#include "magnus/field.hpp"
#include "magnus/numtheory.hpp"
#include "magnus/structure.hpp"
#include "oracles.hpp"

using namespace magnus;

namespace {

std::map<std::uint64_t, int> order_histogram(const Group& g) {
  std::map<std::uint64_t, int> h;
  for (Elt x = 0; x < g.order(); ++x) ++h[element_order(g, x)];
  return h;
}

}  // namespace

TEST_CASE("finite fields: GF(4), GF(9), prime fields") {
  auto f4 = finite_field(4);
  // modulus x^2 + x + 1; element 2 = x, 3 = x + 1; x*x = x + 1
  CHECK(f4->poly == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(f4->mul(2, 2) == 3);

  auto f9 = finite_field(9);
  // frobenius has order 2 as a map
  bool id1 = true, id2 = true;
  for (std::uint16_t v = 0; v < 9; ++v) {
    if (f9->frob(v, 1) != v) id1 = false;
    if (f9->frob(f9->frob(v, 1), 1) != v) id2 = false;
  }
  CHECK_FALSE(id1);
  CHECK(id2);

  auto f7 = finite_field(7);
  for (std::uint16_t a = 0; a < 7; ++a)
    for (std::uint16_t b = 0; b < 7; ++b) {
      CHECK(f7->add(a, b) == (a + b) % 7);
      CHECK(f7->mul(a, b) == (a * b) % 7);
    }

  CHECK_THROWS_AS(finite_field(6), error);
  CHECK_THROWS_AS(finite_field(12), error);
}

TEST_CASE("field axioms hold exhaustively at small q") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u, 16u, 25u, 27u}) {
    auto f = finite_field(q);
    // multiplicative group cyclic of order q-1 via the primitive element
    std::uint16_t w = f->primitive_element;
    std::uint32_t ord = 1;
    std::uint16_t x = w;
    while (x != 1) {
      x = f->mul(x, w);
      ++ord;
    }
    CHECK(ord == q - 1);
    // associativity and distributivity on all triples
    bool ok = true;
    for (std::uint16_t a = 0; a < q && ok; ++a)
      for (std::uint16_t b = 0; b < q && ok; ++b)
        for (std::uint16_t c = 0; c < q; ++c) {
          if (f->mul(f->mul(a, b), c) != f->mul(a, f->mul(b, c))) ok = false;
          if (f->add(f->add(a, b), c) != f->add(a, f->add(b, c))) ok = false;
          if (f->mul(a, f->add(b, c)) != f->add(f->mul(a, b), f->mul(a, c))) ok = false;
          if (!ok) break;
        }
    CHECK(ok);
    // frobenius has multiplicative order n as a map
    std::uint32_t n = f->n;
    for (std::uint32_t i = 1; i < n; ++i) {
      bool is_id = true;
      for (std::uint16_t v = 0; v < q; ++v)
        if (f->frob(v, i) != v) is_id = false;
      CHECK_FALSE(is_id);
    }
    bool full_id = true;
    for (std::uint16_t v = 0; v < q; ++v)
      if (f->frob(f->frob(v, 1), n - 1) != v) full_id = false;
    CHECK(full_id);
  }
}

TEST_CASE("semilinear map composition matches pointwise evaluation") {
  auto f = finite_field(16);
  std::vector<SemilinearMap> samples{
      {1, 0, 0}, {3, 1, 5}, {7, 2, 1}, {f->primitive_element, 3, 9}, {5, 1, 0}};
  for (const auto& a : samples)
    for (const auto& b : samples) {
      SemilinearMap c = compose_semilinear(*f, a, b);
      for (std::uint16_t v = 0; v < 16; ++v)
        CHECK(apply_semilinear(*f, c, v) ==
              apply_semilinear(*f, a, apply_semilinear(*f, b, v)));
      SemilinearMap ai = invert_semilinear(*f, a);
      for (std::uint16_t v = 0; v < 16; ++v)
        CHECK(apply_semilinear(*f, ai, apply_semilinear(*f, a, v)) == v);
    }
}

TEST_CASE("named groups: orders and spot checks") {
  Group m = m9();
  CHECK(m.order() == 72);
  const MinimalNormals& mn = minimal_normal_subgroups(m);
  CHECK(mn.monolithic);
  CHECK(mn.items[0].size() == 9);

  Group c = c7c3();
  CHECK(c.order() == 21);
  CHECK(center(c).size() == 1);

  Group d8 = dihedral_group(8);
  auto h = order_histogram(d8);
  CHECK(h[1] == 1);
  CHECK(h[2] == 5);
  CHECK(h[4] == 2);

  CHECK(quaternion8().order() == 8);
  auto hq = order_histogram(quaternion8());
  CHECK(hq[2] == 1);  // the single involution
  CHECK(hq[4] == 6);

  Group qd = semidihedral16();
  CHECK(qd.order() == 16);
  auto hqd = order_histogram(qd);
  CHECK(hqd[8] == 4);  // semidihedral: four elements of order 8
  CHECK(hqd[2] == 5);

  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(5).order() == 60);
  CHECK(alternating_group(4).order() == 12);
  CHECK(elementary_abelian(3, 2).order() == 9);

  CHECK(named_group("C12").order() == 12);
  CHECK(named_group("E(2,3)").order() == 8);
  CHECK(named_group("Q8").order() == 8);
  CHECK(named_group("C7:C3").order() == 21);
  CHECK_THROWS_AS(named_group("X5"), error);
}

TEST_CASE("the element i of the point stabilizer of M(9) has order 4") {
  // the group generators are the two socle translations followed by i and j
  Group m = m9();
  std::vector<Elt> gens(m.generators().begin(), m.generators().end());
  REQUIRE(gens.size() == 4);
  CHECK(element_order(m, gens[2]) == 4);
  CHECK(element_order(m, gens[3]) == 4);
  // i^2 = j^2 = -1 and ij = -ji
  Elt minus1 = m.mul(gens[2], gens[2]);
  CHECK(minus1 == m.mul(gens[3], gens[3]));
  Elt ij = m.mul(gens[2], gens[3]);
  Elt ji = m.mul(gens[3], gens[2]);
  CHECK(ij == m.mul(minus1, ji));
}

TEST_CASE("semilinear families") {
  CHECK(semilinear_family(5, Family::agl1).order() == 20);
  CHECK(semilinear_family(9, Family::agammal1).order() == 144);
  CHECK(semilinear_family(9, Family::gammal1).order() == 16);
  CHECK(semilinear_family(8, Family::gammal1).order() == 21);
  Group ag4 = semilinear_family(4, Family::agammal1);
  CHECK(ag4.order() == 24);
  CHECK(is_isomorphic(ag4, symmetric_group(4)).verdict == iso_verdict::yes);
  CHECK_THROWS_AS(semilinear_family(6, Family::agl1), error);
}

TEST_CASE("affine_semidirect") {
  // q=7, scale 2 (multiplicative order 3 mod 7) gives C7:C3
  std::vector<SemilinearMap> g1{{2, 0, 0}};
  AffineGroup ag = affine_semidirect(7, g1);
  CHECK(ag.group.order() == 21);
  CHECK(is_isomorphic(ag.group, c7c3()).verdict == iso_verdict::yes);
  CHECK(ag.socle.size() == 7);
  CHECK(ag.point_stabilizer.size() == 3);

  // 2 is a primitive root mod 5
  std::vector<SemilinearMap> g2{{2, 0, 0}};
  AffineGroup ag5 = affine_semidirect(5, g2);
  CHECK(ag5.group.order() == 20);
  CHECK(is_isomorphic(ag5.group, semilinear_family(5, Family::agl1)).verdict ==
        iso_verdict::yes);

  // full GammaL(1,9) generators give AGammaL(1,9)
  auto f9 = finite_field(9);
  std::vector<SemilinearMap> g3{{f9->primitive_element, 0, 0}, {1, 1, 0}};
  AffineGroup ag9 = affine_semidirect(9, g3);
  CHECK(ag9.group.order() == 144);
  CHECK(is_isomorphic(ag9.group, semilinear_family(9, Family::agammal1)).verdict ==
        iso_verdict::yes);

  // the lift has a regular normal translation subgroup
  ElementSet socle = ag9.socle;
  CHECK(socle.size() == 9);
  auto v = socle.to_vector();
  for (Elt x : v)
    for (Elt ge : ag9.group.generators()) CHECK(socle.test(ag9.group.conj(x, ge)));
}

TEST_CASE("M(9) equals the q=9 semidirect lift of the quaternion stabilizer") {
  // Q8 inside GammaL(1,9) is <w^2, w f>
  auto f9 = finite_field(9);
  std::uint16_t w = f9->primitive_element;
  std::vector<SemilinearMap> gens{{f9->mul(w, w), 0, 0}, {w, 1, 0}};
  AffineGroup ag = affine_semidirect(9, gens);
  CHECK(ag.group.order() == 72);
  CHECK(is_isomorphic(ag.group, m9()).verdict == iso_verdict::yes);
}

TEST_CASE("crown powers") {
  Group s3 = symmetric_group(3);
  Group c1 = crown_power(s3, 1);
  CHECK(c1.same(s3));

  Group c2 = crown_power(s3, 2);
  CHECK(c2.order() == 18);

  Group m2 = crown_power(m9(), 2);
  CHECK(m2.order() == 648);
  const MinimalNormals& mn = minimal_normal_subgroups(m2);
  CHECK(mn.socle.size() == 81);

  // crown powers need a unique minimal normal subgroup
  CHECK_THROWS_AS(crown_power(elementary_abelian(2, 2), 2), error);
  // order cap
  limits lim;
  lim.dense_cap = 100;
  CHECK_THROWS_AS(crown_power(m9(), 2, lim), error);
}

TEST_CASE("gl2 orders") {
  CHECK(gl2(2).order() == 6);
  CHECK(gl2(3).order() == 48);
  CHECK(gl2(5).order() == 480);
}
