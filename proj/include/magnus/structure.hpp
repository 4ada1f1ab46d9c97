#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "magnus/group.hpp"

namespace magnus {

// ---- class-level normal closure machinery ----------------------------------
// A normal subgroup is a union of conjugacy classes; closures are computed as
// fixpoints over class products and memoized per group.

// sorted class ids of <class c>^G (always contains class 0)
const std::vector<Elt>& class_closure(const Group& g, Elt class_id);
// closure of a union of classes under products, as sorted class ids
std::vector<Elt> closure_of_classes(const Group& g, std::span<const Elt> seed_classes);
ElementSet expand_classes(const Group& g, std::span<const Elt> class_ids);

// smallest normal subgroup containing s
ElementSet normal_closure(const Group& g, const ElementSet& s);
ElementSet normal_closure_of_element(const Group& g, Elt x);

// ---- the normal lattice ------------------------------------------------------

struct NormalSubgroup {
  ElementSet set;
  std::uint64_t order;
  std::vector<Elt> class_ids;  // sorted
  std::vector<Elt> gens;       // small generating set
};

struct NormalLattice {
  std::vector<NormalSubgroup> items;  // sorted by (order, lexicographic elements)
};

// join-closure of the single-class closures plus the trivial subgroup
const NormalLattice& all_normal_subgroups(const Group& g);
// raw kernel behind it; serial mode is the reference implementation
NormalLattice compute_normal_lattice(const Group& g, exec mode);

struct MinimalNormals {
  std::vector<ElementSet> items;
  ElementSet socle;
  bool monolithic = false;
};
const MinimalNormals& minimal_normal_subgroups(const Group& g);

// ---- quotients ----------------------------------------------------------------

struct Quotient {
  Group group;
  GroupHom proj;  // proj.image[x] = coset index of x
};
// coset representatives are the least element index in each coset
Quotient quotient(const Group& g, const ElementSet& n);

// intersection of all conjugates; the largest normal subgroup inside h
ElementSet normal_core(const Group& g, const ElementSet& h);

// ---- series --------------------------------------------------------------------

struct DerivedSeries {
  std::vector<ElementSet> terms;  // G = terms[0] >= G' >= ...
  bool solvable = false;
  int derived_length = 0;  // meaningful when solvable
};
DerivedSeries derived_series(const Group& g);
bool is_solvable(const Group& g);

// commutator subgroup of the subgroup generated by h_gens (normal closure there)
ElementSet derived_subgroup_of(const Group& g, std::span<const Elt> h_gens);

// Fitting subgroup = join of the p-cores read off the normal lattice
ElementSet fitting_subgroup(const Group& g);
bool is_nilpotent(const Group& g);
// least n with F_n(G) = G; throws not_solvable otherwise
int fitting_height(const Group& g);

struct ChiefFactor {
  std::uint64_t order;
  std::uint32_t prime = 0;  // 0 when the factor is not elementary abelian
  std::uint32_t rank = 0;
  bool elementary_abelian = false;
  ElementSet lower, upper;    // the step N_{i} < N_{i+1} in G
  ElementSet centralizer;     // C_G(upper/lower)
};

struct ChiefSeries {
  std::vector<ElementSet> chain;     // trivial ... G, ascending
  std::vector<ChiefFactor> factors;  // one per step
};

// Repeatedly lifts a minimal normal subgroup of the current quotient.
// Tie-break: least factor order, then least smallest element; the reverse flag
// flips both for Jordan-Hoelder cross-checks.
ChiefSeries chief_series(const Group& g, bool reverse_tie_break = false);

// max k with a chief factor of order p^k; 0 when no p-chief factor exists
std::uint32_t p_rank(const Group& g, std::uint32_t p);
std::uint32_t p_rank(const ChiefSeries& s, std::uint32_t p);

struct FactorAction {
  Group image;            // conjugation action of G on the factor, as permutations
  GroupHom action;        // G -> image
  ElementSet centralizer; // kernel
};
FactorAction chief_factor_action(const Group& g, const ChiefSeries& s, std::size_t step);

}  // namespace magnus
