#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "magnus/classify.hpp"
#include "magnus/expr.hpp"
#include "magnus/magnus.hpp"
#include "magnus/report.hpp"
#include "magnus/structure.hpp"

using namespace magnus;

TEST_CASE("parser: grammar cases") {
  auto e = parse_expr("C7:C3 x M9");
  REQUIRE(e->kind == GroupExpr::Kind::product);
  REQUIRE(e->children.size() == 2);
  CHECK(e->children[0]->kind == GroupExpr::Kind::atom_c7c3);
  CHECK(e->children[1]->kind == GroupExpr::Kind::atom_m9);

  auto c = parse_expr("Crown(S3, 2)");
  REQUIRE(c->kind == GroupExpr::Kind::crown);
  CHECK(c->children[0]->kind == GroupExpr::Kind::atom_s);
  CHECK(c->params[0] == 2);

  // syntax error with byte offset
  try {
    parse_expr("C(");
    CHECK(false);
  } catch (const error& err) {
    CHECK(err.code() == errc::syntax_error);
    CHECK(std::string(err.what()).find("offset 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_expr("AGL(2,5)"), error);
  CHECK_THROWS_AS(parse_expr("Frob(3)"), error);
  CHECK_THROWS_AS(parse_expr("C(3) extra"), error);
}

TEST_CASE("parse -> print -> parse is the identity on canonical forms") {
  for (const std::string& text :
       {"C(12)", "E(2,3)", "S(4)", "A(5)", "D(8)", "Q8", "QD16", "M9", "C7:C3",
        "AGL(1,5)", "AGammaL(1,9)", "GammaL(1,8)", "C7:C3 x M9 x C(2)",
        "Crown(S(3), 2)", "Quot(M9, 9, 0)", "Perm[(0 1 2)(3 4), (0 1)]",
        "Crown(C7:C3, 2) x Q8"}) {
    auto ast = parse_expr(text);
    std::string canonical = print_expr(*ast);
    auto reparsed = parse_expr(canonical);
    CHECK(print_expr(*reparsed) == canonical);
  }
  // sugar forms normalize
  CHECK(print_expr(*parse_expr("S3")) == "S(3)");
  CHECK(print_expr(*parse_expr("C12  x  Q8")) == "C(12) x Q8");
}

TEST_CASE("evaluation") {
  CHECK(eval_expr(*parse_expr("C(6)")).order() == 6);
  CHECK(eval_expr(*parse_expr("C2 x C3")).order() == 6);
  CHECK(eval_expr(*parse_expr("Crown(S3, 2)")).order() == 18);
  CHECK(eval_expr(*parse_expr("AGammaL(1,9)")).order() == 144);
  CHECK(eval_expr(*parse_expr("Perm[(0 1), (0 1 2)]")).order() == 6);

  // Quot selects the index-th normal subgroup of the given order
  Group q = eval_expr(*parse_expr("Quot(M9, 9, 0)"));
  CHECK(q.order() == 8);
  CHECK(is_isomorphic(q, eval_expr(*parse_expr("Q8"))).verdict == iso_verdict::yes);
  CHECK_THROWS_AS(eval_expr(*parse_expr("Quot(M9, 5, 0)")), error);
}

TEST_CASE("cayley file round trip") {
  const char* path = "test_cayley_tmp.txt";
  {
    std::ofstream out(path);
    out << "6\n";
    Group c6 = cyclic_group(6);
    for (Elt a = 0; a < 6; ++a) {
      for (Elt b = 0; b < 6; ++b) out << c6.mul(a, b) << (b + 1 < 6 ? " " : "");
      out << "\n";
    }
    out << "#name 0 e\n#name 1 g\n";
  }
  Group g = read_cayley_file(path);
  CHECK(g.order() == 6);
  CHECK(g.labels()[0] == "e");
  CHECK(g.element_name(1) == "g");
  std::remove(path);

  {
    std::ofstream out(path);
    out << "3\n0 1 2\n0 1 2\n2 0 1\n";
  }
  CHECK_THROWS_AS(read_cayley_file(path), error);
  std::remove(path);
  CHECK_THROWS_AS(read_cayley_file("does_not_exist.txt"), error);
}

TEST_CASE("json reports are schema-stable") {
  Group m = eval_expr(*parse_expr("M9"));
  auto j1 = magnus_report_json("M9", m, magnus_status(m));
  auto j2 = magnus_report_json("M9", m, magnus_status(m));
  CHECK(j1.dump() == j2.dump());
  CHECK(j1["schema"] == 1);
  CHECK(j1["mp"] == true);
  CHECK(j1["smp"] == true);
  CHECK(j1["aCount"] == 6);
  // field order is fixed
  std::string dumped = j1.dump();
  CHECK(dumped.find("\"schema\"") < dumped.find("\"expr\""));
  CHECK(dumped.find("\"mp\"") < dumped.find("\"smp\""));

  Group c12 = eval_expr(*parse_expr("C(12)"));
  auto jc = magnus_report_json("C(12)", c12, magnus_status(c12));
  CHECK(jc["mp"] == false);
  CHECK_FALSE(jc["witness"].is_null());

  auto inv = invariants_json("M9", m);
  CHECK(inv["order"] == 72);
  CHECK(inv["solvable"] == true);
  CHECK(inv["fittingHeight"] == 2);
  CHECK(inv["chiefFactorOrders"] == std::vector<std::uint64_t>{9, 2, 2, 2});
}

TEST_CASE("claim reports serialize") {
  VerifyOptions opt;
  ClaimReport rep = verify_claim("power23", opt);
  auto j = claim_report_json(rep);
  CHECK(j["claim"] == "power23");
  CHECK(j["status"] == "pass");
  // byte-identical across runs: no volatile fields in the JSON
  ClaimReport rep2 = verify_claim("power23", opt);
  CHECK(claim_report_json(rep2).dump() == j.dump());
}

TEST_CASE("every failure report reproduces through the library API") {
  // a failing verdict carries class representatives that re-derive the failure
  Group g = eval_expr(*parse_expr("C(12)"));
  const MagnusReport& r = magnus_status(g);
  REQUIRE(r.witness.has_value());
  ElementSet nx = normal_closure_of_element(g, r.witness->first);
  ElementSet ny = normal_closure_of_element(g, r.witness->second);
  CHECK(nx == ny);
  const ClassData& cd = conjugacy_classes(g);
  CHECK(cd.class_of[r.witness->first] != cd.class_of[r.witness->second]);
  CHECK(cd.inverse_class[cd.class_of[r.witness->first]] !=
        cd.class_of[r.witness->second]);
}
