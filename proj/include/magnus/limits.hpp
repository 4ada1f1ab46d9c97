#pragma once

#include <cstddef>
#include <cstdint>

namespace magnus {

// Resource caps. Defaults are the desk-scale ceilings; callers may override per call.
struct limits {
  // largest order materialized as a dense multiplication table (8192^2 u16 ~ 134 MB)
  std::size_t dense_cap = 8192;
  // exhaustive associativity validation below this order; sampled above
  std::size_t full_assoc_cap = 512;
  std::size_t assoc_samples = 1'000'000;
  // permutation closure element cap
  std::size_t perm_closure_cap = 50'000;
  // composite (direct-product / semidirect) order cap
  std::size_t composite_cap = 10'000'000;
  // full subgroup lattice: order and count caps
  std::size_t lattice_order_cap = 2500;
  std::size_t subgroup_count_cap = 100'000;
  // normal-subgroup lattice count cap
  std::size_t normal_count_cap = 100'000;
  // exhaustive homomorphism check below this domain order
  std::size_t hom_full_check_cap = 5000;
  // counting-criterion verdicts are cross-checked against the pairwise
  // definition below this order
  std::size_t oracle_cap = 2000;
  // isomorphism search node budget; exceeding reports "unknown", never "false"
  std::uint64_t iso_node_cap = 10'000'000;
};

}  // namespace magnus
