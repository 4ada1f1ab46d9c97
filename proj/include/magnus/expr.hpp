#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "magnus/group.hpp"

namespace magnus {

// Group-expression AST. Grammar:
//   expr := term ("x" term)*
//   term := atom | "Crown(" expr "," int ")" | "Quot(" expr "," int "," int ")"
//   atom := C(m) | E(p,k) | S(m) | A(m) | D(2m) | Q8 | QD16 | M9 | C7:C3
//         | AGL(1,q) | AGammaL(1,q) | GammaL(1,q)
//         | Perm[cycles...] | Cayley("file")
// Numeric suffixes are sugar: S3 == S(3), C12 == C(12).
struct GroupExpr {
  enum class Kind {
    atom_c, atom_e, atom_s, atom_a, atom_d, atom_q8, atom_qd16, atom_m9, atom_c7c3,
    atom_agl, atom_agammal, atom_gammal, atom_perm, atom_cayley,
    product, crown, quot
  };
  Kind kind;
  std::vector<std::uint32_t> params;               // atom parameters / k / order,index
  std::vector<std::vector<std::uint32_t>> perms;   // atom_perm generators
  std::string path;                                // atom_cayley
  std::vector<std::shared_ptr<GroupExpr>> children;
};

// errors carry byte offsets (error::what() mentions the position)
std::shared_ptr<GroupExpr> parse_expr(const std::string& text);

// canonical form; parse(print(e)) == e
std::string print_expr(const GroupExpr& e);

Group eval_expr(const GroupExpr& e, const limits& lim = {});

// Cayley-table text format: line 1 = n; lines 2..n+1 = n space-separated
// 0-based indices; optional trailing label lines "#name i label".
Group read_cayley_file(const std::string& path, const limits& lim = {});

}  // namespace magnus
