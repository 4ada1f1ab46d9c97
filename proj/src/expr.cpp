#include "magnus/expr.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "magnus/classify.hpp"
#include "magnus/constructors.hpp"
#include "magnus/structure.hpp"

namespace magnus {

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& expected) {
    throw error(errc::syntax_error,
                "offset " + std::to_string(pos) + ": expected " + expected);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("'") + c + "'");
  }

  std::uint32_t integer() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("an integer");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos++] - '0');
      if (v > 0xffffffffull) fail("a smaller integer");
    }
    return static_cast<std::uint32_t>(v);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos]))))
      ++pos;
    if (pos == start) fail("an identifier");
    return s.substr(start, pos - start);
  }

  bool peek_ident() {
    skip_ws();
    return pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]));
  }

  std::shared_ptr<GroupExpr> expr() {
    auto left = term();
    while (true) {
      std::size_t save = pos;
      skip_ws();
      // the product separator is the bare identifier "x"
      if (pos < s.size() && s[pos] == 'x' &&
          (pos + 1 >= s.size() ||
           !std::isalnum(static_cast<unsigned char>(s[pos + 1])))) {
        ++pos;
        auto right = term();
        if (left->kind == GroupExpr::Kind::product) {
          left->children.push_back(std::move(right));
        } else {
          auto prod = std::make_shared<GroupExpr>();
          prod->kind = GroupExpr::Kind::product;
          prod->children.push_back(std::move(left));
          prod->children.push_back(std::move(right));
          left = std::move(prod);
        }
      } else {
        pos = save;
        break;
      }
    }
    return left;
  }

  std::shared_ptr<GroupExpr> term() {
    skip_ws();
    if (!peek_ident()) fail("an atom, Crown(...), or Quot(...)");
    std::size_t save = pos;
    std::string id = ident();

    auto node = std::make_shared<GroupExpr>();
    // split a numeric suffix: S3 == S(3)
    std::size_t alpha = 0;
    while (alpha < id.size() && std::isalpha(static_cast<unsigned char>(id[alpha])))
      ++alpha;
    std::string head = id.substr(0, alpha);
    std::string tail = id.substr(alpha);

    if (id == "Crown") {
      expect('(');
      node->kind = GroupExpr::Kind::crown;
      node->children.push_back(expr());
      expect(',');
      node->params.push_back(integer());
      expect(')');
      return node;
    }
    if (id == "Quot") {
      expect('(');
      node->kind = GroupExpr::Kind::quot;
      node->children.push_back(expr());
      expect(',');
      node->params.push_back(integer());
      expect(',');
      node->params.push_back(integer());
      expect(')');
      return node;
    }
    if (id == "Perm") {
      expect('[');
      node->kind = GroupExpr::Kind::atom_perm;
      // generators separated by commas; each is a cycle product
      skip_ws();
      if (!eat(']')) {
        while (true) {
          node->perms.push_back(cycles());
          if (eat(']')) break;
          expect(',');
        }
      }
      return node;
    }
    if (id == "Cayley") {
      expect('(');
      skip_ws();
      expect('"');
      std::size_t start = pos;
      while (pos < s.size() && s[pos] != '"') ++pos;
      if (pos >= s.size()) fail("a closing quote");
      node->path = s.substr(start, pos - start);
      ++pos;
      expect(')');
      node->kind = GroupExpr::Kind::atom_cayley;
      return node;
    }
    if (id == "Q8") {
      node->kind = GroupExpr::Kind::atom_q8;
      return node;
    }
    if (id == "QD16") {
      node->kind = GroupExpr::Kind::atom_qd16;
      return node;
    }
    if (id == "M9") {
      node->kind = GroupExpr::Kind::atom_m9;
      return node;
    }
    if (head == "AGL" || head == "AGammaL" || head == "GammaL") {
      if (!tail.empty()) fail("no numeric suffix on " + head);
      expect('(');
      std::uint32_t one = integer();
      if (one != 1) throw error(errc::arity_error, head + " supports dimension 1 only");
      expect(',');
      node->params.push_back(integer());
      expect(')');
      node->kind = head == "AGL"       ? GroupExpr::Kind::atom_agl
                   : head == "AGammaL" ? GroupExpr::Kind::atom_agammal
                                       : GroupExpr::Kind::atom_gammal;
      return node;
    }
    if (head == "C" || head == "S" || head == "A" || head == "D" || head == "E") {
      std::uint32_t arg = 0, arg2 = 0;
      bool has2 = false;
      if (!tail.empty()) {
        arg = static_cast<std::uint32_t>(std::stoul(tail));
        // C7:C3 is a dedicated atom
        if (head == "C" && arg == 7 && eat(':')) {
          std::string second = ident();
          if (second != "C3") fail("C3 (the only colon atom is C7:C3)");
          node->kind = GroupExpr::Kind::atom_c7c3;
          return node;
        }
      } else {
        expect('(');
        arg = integer();
        if (head == "E") {
          expect(',');
          arg2 = integer();
          has2 = true;
        }
        expect(')');
      }
      if (head == "E" && !has2) {
        pos = save;
        fail("E(p,k) with two parameters");
      }
      node->params.push_back(arg);
      if (has2) node->params.push_back(arg2);
      node->kind = head == "C"   ? GroupExpr::Kind::atom_c
                   : head == "S" ? GroupExpr::Kind::atom_s
                   : head == "A" ? GroupExpr::Kind::atom_a
                   : head == "D" ? GroupExpr::Kind::atom_d
                                 : GroupExpr::Kind::atom_e;
      return node;
    }
    pos = save;
    fail("a known atom");
  }

  std::vector<std::uint32_t> cycles() {
    // one generator: a product of cycles "(0 1 2)(3 4)"; degree inferred later
    std::vector<std::vector<std::uint32_t>> cyc;
    skip_ws();
    if (pos >= s.size() || s[pos] != '(') fail("a cycle '('");
    while (eat('(')) {
      std::vector<std::uint32_t> c;
      while (!eat(')')) {
        c.push_back(integer());
        skip_ws();
        if (pos < s.size() && s[pos] == ',') ++pos;  // commas inside cycles allowed
      }
      cyc.push_back(std::move(c));
      skip_ws();
      if (pos >= s.size() || s[pos] != '(') break;
    }
    std::uint32_t degree = 0;
    for (const auto& c : cyc)
      for (std::uint32_t p : c) degree = std::max(degree, p + 1);
    std::vector<std::uint32_t> perm(degree);
    for (std::uint32_t i = 0; i < degree; ++i) perm[i] = i;
    for (const auto& c : cyc)
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= degree) fail("cycle point in range");
        perm[c[i]] = c[(i + 1) % c.size()];
      }
    return perm;
  }
};

}  // namespace

std::shared_ptr<GroupExpr> parse_expr(const std::string& text) {
  Parser p(text);
  auto e = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("end of input");
  return e;
}

std::string print_expr(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  std::ostringstream os;
  switch (e.kind) {
    case K::atom_c: os << "C(" << e.params[0] << ")"; break;
    case K::atom_e: os << "E(" << e.params[0] << "," << e.params[1] << ")"; break;
    case K::atom_s: os << "S(" << e.params[0] << ")"; break;
    case K::atom_a: os << "A(" << e.params[0] << ")"; break;
    case K::atom_d: os << "D(" << e.params[0] << ")"; break;
    case K::atom_q8: os << "Q8"; break;
    case K::atom_qd16: os << "QD16"; break;
    case K::atom_m9: os << "M9"; break;
    case K::atom_c7c3: os << "C7:C3"; break;
    case K::atom_agl: os << "AGL(1," << e.params[0] << ")"; break;
    case K::atom_agammal: os << "AGammaL(1," << e.params[0] << ")"; break;
    case K::atom_gammal: os << "GammaL(1," << e.params[0] << ")"; break;
    case K::atom_perm: {
      os << "Perm[";
      for (std::size_t g = 0; g < e.perms.size(); ++g) {
        if (g) os << ", ";
        const auto& perm = e.perms[g];
        std::vector<char> seen(perm.size(), 0);
        bool any = false;
        for (std::uint32_t i = 0; i < perm.size(); ++i) {
          if (seen[i] || perm[i] == i) continue;
          os << '(' << i;
          seen[i] = 1;
          for (std::uint32_t j = perm[i]; j != i; j = perm[j]) {
            os << ' ' << j;
            seen[j] = 1;
          }
          os << ')';
          any = true;
        }
        if (!any) os << "()";
      }
      os << "]";
      break;
    }
    case K::atom_cayley: os << "Cayley(\"" << e.path << "\")"; break;
    case K::product:
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) os << " x ";
        os << print_expr(*e.children[i]);
      }
      break;
    case K::crown:
      os << "Crown(" << print_expr(*e.children[0]) << ", " << e.params[0] << ")";
      break;
    case K::quot:
      os << "Quot(" << print_expr(*e.children[0]) << ", " << e.params[0] << ", "
         << e.params[1] << ")";
      break;
  }
  return os.str();
}

Group read_cayley_file(const std::string& path, const limits& lim) {
  std::ifstream in(path);
  if (!in) throw error(errc::io_error, "cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw error(errc::io_error, "empty file " + path);
  std::size_t n = 0;
  try {
    n = std::stoul(line);
  } catch (const std::exception&) {
    throw error(errc::io_error, "first line must be the order");
  }
  std::vector<std::vector<Elt>> table;
  for (std::size_t r = 0; r < n; ++r) {
    if (!std::getline(in, line))
      throw error(errc::io_error, "expected " + std::to_string(n) + " table rows");
    std::istringstream ls(line);
    std::vector<Elt> row;
    std::uint64_t v;
    while (ls >> v) row.push_back(static_cast<Elt>(v));
    table.push_back(std::move(row));
  }
  std::vector<std::string> labels(n);
  bool any_label = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string hash;
    std::size_t idx;
    std::string label;
    ls >> hash >> idx;
    std::getline(ls, label);
    if (hash != "#name" || idx >= n)
      throw error(errc::io_error, "bad label line: " + line);
    while (!label.empty() && label.front() == ' ') label.erase(label.begin());
    labels[idx] = label;
    any_label = true;
  }
  return build_from_cayley(table, any_label ? labels : std::vector<std::string>{}, lim);
}

Group eval_expr(const GroupExpr& e, const limits& lim) {
  using K = GroupExpr::Kind;
  switch (e.kind) {
    case K::atom_c: return cyclic_group(e.params[0], lim);
    case K::atom_e: return elementary_abelian(e.params[0], e.params[1], lim);
    case K::atom_s: return symmetric_group(e.params[0], lim);
    case K::atom_a: return alternating_group(e.params[0], lim);
    case K::atom_d: return dihedral_group(e.params[0], lim);
    case K::atom_q8: return quaternion8(lim);
    case K::atom_qd16: return semidihedral16(lim);
    case K::atom_m9: return m9(lim);
    case K::atom_c7c3: return c7c3(lim);
    case K::atom_agl: return semilinear_family(e.params[0], Family::agl1, lim);
    case K::atom_agammal: return semilinear_family(e.params[0], Family::agammal1, lim);
    case K::atom_gammal: return semilinear_family(e.params[0], Family::gammal1, lim);
    case K::atom_perm: {
      std::uint32_t degree = 0;
      for (const auto& p : e.perms)
        degree = std::max(degree, static_cast<std::uint32_t>(p.size()));
      std::vector<std::vector<std::uint32_t>> gens;
      for (auto p : e.perms) {
        std::size_t old = p.size();
        p.resize(degree);
        for (std::size_t i = old; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
        gens.push_back(std::move(p));
      }
      return build_from_permutations(degree, gens, lim);
    }
    case K::atom_cayley: return read_cayley_file(e.path, lim);
    case K::product: {
      std::vector<Group> factors;
      for (const auto& c : e.children) factors.push_back(eval_expr(*c, lim));
      return build_direct_product(factors, lim);
    }
    case K::crown: return crown_power(eval_expr(*e.children[0], lim), e.params[0], lim);
    case K::quot: {
      Group g = eval_expr(*e.children[0], lim);
      const NormalLattice& nl = all_normal_subgroups(g);
      std::uint32_t want_order = e.params[0], index = e.params[1];
      std::uint32_t seen = 0;
      for (const auto& n : nl.items) {
        if (n.order != want_order) continue;
        if (seen++ == index) return quotient(g, n.set).group;
      }
      throw error(errc::bad_parameter,
                  "Quot: no normal subgroup of order " + std::to_string(want_order) +
                      " with index " + std::to_string(index));
    }
  }
  throw error(errc::bad_parameter, "unreachable expression kind");
}

}  // namespace magnus
