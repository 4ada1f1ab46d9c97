#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "magnus/group.hpp"

namespace magnus {

// A(G) = orbits of the inverse involution on classes; B(G) = distinct normal
// closures of single classes. G is MP iff |A(G)| = |B(G)|.
struct MagnusSets {
  std::vector<std::vector<Elt>> a_cells;     // each cell: 1 or 2 class ids
  std::vector<std::vector<Elt>> b_closures;  // distinct, as sorted class-id lists
};

struct MagnusReport {
  bool mp = false;
  bool smp = false;
  bool all_real = false;
  std::uint64_t a_count = 0;
  std::uint64_t b_count = 0;
  // class reps (x, y) with equal normal closures, y outside x^G u (x^-1)^G;
  // lexicographically least by (class of x, class of y); present iff !mp
  std::optional<std::pair<Elt, Elt>> witness;
  std::optional<std::pair<Elt, Elt>> witness_classes;
};

MagnusSets magnus_sets(const Group& g);
const MagnusReport& magnus_status(const Group& g);

// the b_closures as element masks (the spec's "list of distinct normal closures")
std::vector<ElementSet> b_closure_sets(const Group& g);

}  // namespace magnus
