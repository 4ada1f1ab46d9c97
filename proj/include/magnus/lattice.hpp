#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "magnus/group.hpp"

namespace magnus {

struct Subgroup {
  ElementSet set;
  std::uint64_t order = 0;
  std::vector<Elt> gens;
  bool maximal = false;                // maximal in G (proper)
  std::vector<std::uint32_t> covers;   // indices of subgroups covering this one
};

struct SubgroupLattice {
  std::vector<Subgroup> items;              // sorted by (order, lexicographic elements)
  std::vector<std::uint32_t> maximal_ids;   // indices into items
  ElementSet frattini;                      // = G for the trivial group
};

// Breadth-first extension by one generator with canonical-mask deduplication.
// Gated by the full-lattice order cap; count capped as well.
const SubgroupLattice& all_subgroups(const Group& g);
SubgroupLattice compute_subgroup_lattice(const Group& g, exec mode);

std::vector<ElementSet> maximal_subgroups(const Group& g);
ElementSet frattini(const Group& g);

// max power of p among maximal-subgroup indices; 0 if p does not divide |G|
std::uint32_t s_p(const Group& g, std::uint32_t p);
// max j such that p^j occurs as a cover index in the subgroup lattice
std::uint32_t j_p(const Group& g, std::uint32_t p);

struct Primitivity {
  bool primitive = false;
  std::optional<ElementSet> witness;  // least core-free maximal subgroup
};
Primitivity is_primitive(const Group& g);

// {G/M_G : M maximal}, deduplicated by isomorphism
std::vector<Group> primitive_quotients(const Group& g);

}  // namespace magnus
